#ifndef LIEFORGE_ZLATTICE_HPP
#define LIEFORGE_ZLATTICE_HPP

// Exact integer linear algebra: Hermite/Smith forms on dense Eigen matrices,
// and finitely generated subgroups of Z^m kept in canonical Hermite form.

#include "lieforge/bigint.hpp"

#include <cstddef>
#include <map>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace lieforge {

// ---------------------------------------------------------------------------
// Dense canonical forms, generic over the integer scalar.
// ---------------------------------------------------------------------------

/// Row-style Hermite normal form: pivots positive, entries above each pivot
/// reduced into [0, pivot), zero rows removed. The row span is unchanged.
template <typename Derived>
Matrix<typename Derived::Scalar> hermite_form(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  Matrix<Scalar> m = input;
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    for (Eigen::Index i = r + 1; i < rows; ++i) {
      if (m(i, c) == 0) continue;
      if (m(r, c) == 0) {
        m.row(r).swap(m.row(i));
        continue;
      }
      const Scalar a = m(r, c);
      const Scalar b = m(i, c);
      auto [g, s, t] = arith::ext_gcd(a, b);
      const Scalar ag = a / g;
      const Scalar bg = b / g;
      for (Eigen::Index j = c; j < cols; ++j) {
        const Scalar x = m(r, j);
        const Scalar y = m(i, j);
        m(r, j) = s * x + t * y;
        m(i, j) = ag * y - bg * x;
      }
    }
    if (m(r, c) == 0) continue;
    if (m(r, c) < 0) m.row(r) = -m.row(r);
    for (Eigen::Index i = 0; i < r; ++i) {
      if (m(i, c) == 0) continue;
      const Scalar q = arith::floor_div(m(i, c), m(r, c));
      for (Eigen::Index j = c; j < cols; ++j) m(i, j) -= q * m(r, j);
    }
    ++r;
  }
  return m.topRows(r);
}

/// Smith invariants d_1 | d_2 | ... of a matrix (nonzero ones only, positive).
template <typename Derived>
Vector<typename Derived::Scalar> smith_invariants(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  Matrix<Scalar> m = input;
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  std::vector<Scalar> diag;
  for (Eigen::Index t = 0; t < std::min(rows, cols); ++t) {
    // Bring the smallest nonzero entry of the trailing block to (t, t).
    Eigen::Index pi = -1, pj = -1;
    for (Eigen::Index i = t; i < rows; ++i)
      for (Eigen::Index j = t; j < cols; ++j)
        if (m(i, j) != 0 && (pi < 0 || arith::abs(m(i, j)) < arith::abs(m(pi, pj)))) {
          pi = i;
          pj = j;
        }
    if (pi < 0) break;
    m.row(t).swap(m.row(pi));
    m.col(t).swap(m.col(pj));
    for (;;) {
      bool dirty = false;
      for (Eigen::Index i = t + 1; i < rows; ++i) {
        if (m(i, t) == 0) continue;
        const Scalar q = arith::floor_div(m(i, t), m(t, t));
        m.row(i) -= q * m.row(t);
        if (m(i, t) != 0) {
          m.row(t).swap(m.row(i));
          dirty = true;
        }
      }
      for (Eigen::Index j = t + 1; j < cols; ++j) {
        if (m(t, j) == 0) continue;
        const Scalar q = arith::floor_div(m(t, j), m(t, t));
        m.col(j) -= q * m.col(t);
        if (m(t, j) != 0) {
          m.col(t).swap(m.col(j));
          dirty = true;
        }
      }
      if (dirty) continue;
      // Divisibility condition: d_t must divide every remaining entry.
      Eigen::Index bad = -1;
      for (Eigen::Index i = t + 1; i < rows && bad < 0; ++i)
        for (Eigen::Index j = t + 1; j < cols; ++j)
          if (m(i, j) % m(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      m.row(t) += m.row(bad);
    }
    diag.push_back(arith::abs(m(t, t)));
  }
  Vector<Scalar> out(static_cast<Eigen::Index>(diag.size()));
  for (std::size_t i = 0; i < diag.size(); ++i) out(static_cast<Eigen::Index>(i)) = diag[i];
  return out;
}

/// Rank over Q, counted as the number of nonzero Smith invariants.
template <typename Derived>
std::size_t smith_rank(const Eigen::MatrixBase<Derived>& m) {
  return static_cast<std::size_t>(smith_invariants(m).size());
}

// ---------------------------------------------------------------------------
// Sparse vectors and lattices.
// ---------------------------------------------------------------------------

/// Sparse integer vector, entries sorted by index, no stored zeros.
class SparseIntVector {
 public:
  using Entry = std::pair<std::size_t, BigInt>;

  SparseIntVector() = default;
  static SparseIntVector from_dense(const IntVector& v);

  void push_back(std::size_t index, BigInt value);  // index must exceed the last one
  void add(std::size_t index, const BigInt& value);  // arbitrary index

  [[nodiscard]] bool empty() const { return entries_.empty(); }
  [[nodiscard]] std::size_t nnz() const { return entries_.size(); }
  [[nodiscard]] const std::vector<Entry>& entries() const { return entries_; }
  [[nodiscard]] std::size_t lead_index() const { return entries_.front().first; }
  [[nodiscard]] const BigInt& lead() const { return entries_.front().second; }
  [[nodiscard]] BigInt at(std::size_t index) const;
  [[nodiscard]] IntVector to_dense(std::size_t dim) const;

  void negate();
  /// Returns a*x + b*y.
  static SparseIntVector combine(const BigInt& a, const SparseIntVector& x, const BigInt& b,
                                 const SparseIntVector& y);

  friend bool operator==(const SparseIntVector&, const SparseIntVector&) = default;

 private:
  std::vector<Entry> entries_;
};

class IntLattice;

/// Incremental echelon form over Z. Rows have distinct pivots and positive
/// leading entries; inserting a vector enlarges the spanned lattice exactly.
class LatticeBuilder {
 public:
  explicit LatticeBuilder(std::size_t ambient_dim) : dim_(ambient_dim) {}

  /// Adds v to the generating set; returns true iff the lattice grew.
  bool insert(SparseIntVector v);
  bool insert(const IntVector& v) { return insert(SparseIntVector::from_dense(v)); }

  [[nodiscard]] std::size_t rank() const { return rows_.size(); }
  [[nodiscard]] std::size_t ambient_dim() const { return dim_; }
  [[nodiscard]] bool contains(SparseIntVector v) const;
  /// Echelon rows keyed by pivot column.
  [[nodiscard]] const std::map<std::size_t, SparseIntVector>& rows() const { return rows_; }
  [[nodiscard]] IntLattice build() const;

 private:
  std::size_t dim_;
  std::map<std::size_t, SparseIntVector> rows_;
};

/// A finitely generated subgroup of Z^m, stored by its (unique) Hermite basis.
/// Equality of lattices is equality of canonical forms.
class IntLattice {
 public:
  explicit IntLattice(std::size_t ambient_dim = 0) : dim_(ambient_dim) {}

  static IntLattice from_rows(const IntMatrix& generators);
  static IntLattice from_generators(std::size_t ambient_dim,
                                    std::span<const SparseIntVector> generators);

  [[nodiscard]] std::size_t ambient_dim() const { return dim_; }
  [[nodiscard]] std::size_t rank() const { return rows_.size(); }
  [[nodiscard]] bool is_zero() const { return rows_.empty(); }
  [[nodiscard]] const std::vector<SparseIntVector>& rows() const { return rows_; }
  /// Hermite basis as a dense matrix (rows = basis vectors).
  [[nodiscard]] IntMatrix basis() const;

  [[nodiscard]] bool contains(const SparseIntVector& v) const;
  [[nodiscard]] bool contains(const IntVector& v) const;
  [[nodiscard]] bool contains(const IntLattice& other) const;
  [[nodiscard]] bool is_saturated() const;
  [[nodiscard]] IntLattice saturation() const;

  friend bool operator==(const IntLattice&, const IntLattice&) = default;

 private:
  friend class LatticeBuilder;
  std::size_t dim_;
  std::vector<SparseIntVector> rows_;
};

/// Saturated basis of {v : m v = 0} for m : Z^cols -> Z^rows.
IntLattice kernel_basis(const IntMatrix& m);
template <typename Derived>
IntLattice kernel_basis(const Eigen::MatrixBase<Derived>& m) {
  return kernel_basis(IntMatrix(m.template cast<BigInt>()));
}
/// Kernel of the map whose columns are given sparsely (each of length `rows`).
IntLattice kernel_of_columns(std::size_t rows, std::span<const SparseIntVector> columns);

IntLattice lattice_intersect(const IntLattice& a, const IntLattice& b);
IntLattice lattice_sum(const IntLattice& a, const IntLattice& b);
bool lattice_member(const IntVector& v, const IntLattice& l);

/// Image of a lattice under the linear map given by `columns_of_map`
/// (column c is the image of basis vector e_c), landing in Z^target_dim.
IntLattice lattice_image(const IntLattice& l, std::span<const SparseIntVector> columns_of_map,
                         std::size_t target_dim);

}  // namespace lieforge

#endif  // LIEFORGE_ZLATTICE_HPP
