#include "lieforge/zlattice.hpp"

#include <algorithm>

namespace lieforge {

SparseIntVector SparseIntVector::from_dense(const IntVector& v) {
  SparseIntVector out;
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (v(i) != 0) out.entries_.emplace_back(static_cast<std::size_t>(i), v(i));
  return out;
}

void SparseIntVector::push_back(std::size_t index, BigInt value) {
  if (value == 0) return;
  if (!entries_.empty() && entries_.back().first >= index)
    throw std::invalid_argument("SparseIntVector::push_back: indices must increase");
  entries_.emplace_back(index, std::move(value));
}

void SparseIntVector::add(std::size_t index, const BigInt& value) {
  if (value == 0) return;
  auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                             [](const Entry& e, std::size_t i) { return e.first < i; });
  if (it != entries_.end() && it->first == index) {
    it->second += value;
    if (it->second == 0) entries_.erase(it);
  } else {
    entries_.insert(it, Entry{index, value});
  }
}

BigInt SparseIntVector::at(std::size_t index) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                             [](const Entry& e, std::size_t i) { return e.first < i; });
  if (it != entries_.end() && it->first == index) return it->second;
  return 0;
}

IntVector SparseIntVector::to_dense(std::size_t dim) const {
  IntVector v = IntVector::Zero(static_cast<Eigen::Index>(dim));
  for (const auto& [i, c] : entries_) {
    if (i >= dim) throw std::out_of_range("SparseIntVector::to_dense: index beyond dimension");
    v(static_cast<Eigen::Index>(i)) = c;
  }
  return v;
}

void SparseIntVector::negate() {
  for (auto& e : entries_) e.second = -e.second;
}

SparseIntVector SparseIntVector::combine(const BigInt& a, const SparseIntVector& x,
                                         const BigInt& b, const SparseIntVector& y) {
  SparseIntVector out;
  out.entries_.reserve(x.entries_.size() + y.entries_.size());
  auto ix = x.entries_.begin();
  auto iy = y.entries_.begin();
  while (ix != x.entries_.end() || iy != y.entries_.end()) {
    if (iy == y.entries_.end() || (ix != x.entries_.end() && ix->first < iy->first)) {
      if (a != 0) out.entries_.emplace_back(ix->first, a * ix->second);
      ++ix;
    } else if (ix == x.entries_.end() || iy->first < ix->first) {
      if (b != 0) out.entries_.emplace_back(iy->first, b * iy->second);
      ++iy;
    } else {
      BigInt v = a * ix->second + b * iy->second;
      if (v != 0) out.entries_.emplace_back(ix->first, std::move(v));
      ++ix;
      ++iy;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

bool LatticeBuilder::insert(SparseIntVector v) {
  bool grew = false;
  while (!v.empty()) {
    const std::size_t p = v.lead_index();
    if (p >= dim_) throw std::out_of_range("LatticeBuilder::insert: index beyond dimension");
    auto it = rows_.find(p);
    if (it == rows_.end()) {
      if (v.lead() < 0) v.negate();
      rows_.emplace(p, std::move(v));
      return true;
    }
    SparseIntVector& row = it->second;
    const BigInt a = row.lead();
    const BigInt b = v.lead();
    if (b % a == 0) {
      v = SparseIntVector::combine(1, v, -(b / a), row);
      continue;
    }
    auto [g, s, t] = arith::ext_gcd(a, b);
    SparseIntVector pivot_row = SparseIntVector::combine(s, row, t, v);
    v = SparseIntVector::combine(a / g, v, -(b / g), row);
    row = std::move(pivot_row);
    grew = true;
  }
  return grew;
}

bool LatticeBuilder::contains(SparseIntVector v) const {
  while (!v.empty()) {
    auto it = rows_.find(v.lead_index());
    if (it == rows_.end()) return false;
    const BigInt& a = it->second.lead();
    if (v.lead() % a != 0) return false;
    v = SparseIntVector::combine(1, v, -(v.lead() / a), it->second);
  }
  return true;
}

IntLattice LatticeBuilder::build() const {
  IntLattice out(dim_);
  out.rows_.reserve(rows_.size());
  for (const auto& [p, row] : rows_) out.rows_.push_back(row);
  // Reduce entries above each pivot into [0, pivot).
  for (std::size_t r = 0; r < out.rows_.size(); ++r) {
    const SparseIntVector& pivot_row = out.rows_[r];
    const std::size_t p = pivot_row.lead_index();
    const BigInt& a = pivot_row.lead();
    for (std::size_t i = 0; i < r; ++i) {
      BigInt entry = out.rows_[i].at(p);
      if (entry == 0) continue;
      BigInt q = arith::floor_div(entry, a);
      if (q != 0) out.rows_[i] = SparseIntVector::combine(1, out.rows_[i], -q, pivot_row);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

IntLattice IntLattice::from_rows(const IntMatrix& generators) {
  LatticeBuilder b(static_cast<std::size_t>(generators.cols()));
  for (Eigen::Index i = 0; i < generators.rows(); ++i)
    b.insert(SparseIntVector::from_dense(generators.row(i).transpose()));
  return b.build();
}

IntLattice IntLattice::from_generators(std::size_t ambient_dim,
                                       std::span<const SparseIntVector> generators) {
  LatticeBuilder b(ambient_dim);
  for (const auto& g : generators) b.insert(g);
  return b.build();
}

IntMatrix IntLattice::basis() const {
  IntMatrix m = IntMatrix::Zero(static_cast<Eigen::Index>(rows_.size()),
                                static_cast<Eigen::Index>(dim_));
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (const auto& [i, c] : rows_[r].entries()) m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(i)) = c;
  return m;
}

bool IntLattice::contains(const SparseIntVector& v0) const {
  SparseIntVector v = v0;
  for (const auto& row : rows_) {
    if (v.empty()) return true;
    const std::size_t p = row.lead_index();
    if (v.lead_index() < p) return false;
    BigInt c = v.at(p);
    if (c == 0) continue;
    if (c % row.lead() != 0) return false;
    v = SparseIntVector::combine(1, v, -(c / row.lead()), row);
  }
  return v.empty();
}

bool IntLattice::contains(const IntVector& v) const {
  if (static_cast<std::size_t>(v.size()) != dim_)
    throw std::invalid_argument("IntLattice::contains: dimension mismatch");
  return contains(SparseIntVector::from_dense(v));
}

bool IntLattice::contains(const IntLattice& other) const {
  if (other.dim_ != dim_) throw std::invalid_argument("IntLattice::contains: dimension mismatch");
  return std::all_of(other.rows_.begin(), other.rows_.end(),
                     [&](const SparseIntVector& r) { return contains(r); });
}

bool IntLattice::is_saturated() const {
  if (rows_.empty()) return true;
  if (rows_.size() == dim_) {
    // Full rank: the index in Z^m is the product of the Hermite pivots.
    for (const auto& r : rows_)
      if (r.lead() != 1) return false;
    return true;
  }
  const auto inv = smith_invariants(basis());
  for (Eigen::Index i = 0; i < inv.size(); ++i)
    if (inv(i) != 1) return false;
  return true;
}

IntLattice IntLattice::saturation() const {
  if (rows_.empty()) return *this;
  // The saturation is the annihilator of the annihilator.
  const IntLattice perp = kernel_basis(basis());
  if (perp.is_zero()) {
    IntMatrix id = IntMatrix::Identity(static_cast<Eigen::Index>(dim_), static_cast<Eigen::Index>(dim_));
    return from_rows(id);
  }
  return kernel_basis(perp.basis());
}

// ---------------------------------------------------------------------------

IntLattice kernel_of_columns(std::size_t rows, std::span<const SparseIntVector> columns) {
  // Echelonize (column | e_c); rows whose pivot lies in the identity block
  // form a basis of the kernel, saturated because the transform is unimodular.
  const std::size_t cols = columns.size();
  LatticeBuilder b(rows + cols);
  for (std::size_t c = 0; c < cols; ++c) {
    SparseIntVector aug = columns[c];
    aug.push_back(rows + c, 1);
    b.insert(std::move(aug));
  }
  LatticeBuilder kernel(cols);
  for (auto it = b.rows().lower_bound(rows); it != b.rows().end(); ++it) {
    SparseIntVector k;
    for (const auto& [i, v] : it->second.entries()) k.push_back(i - rows, v);
    kernel.insert(std::move(k));
  }
  return kernel.build();
}

IntLattice kernel_basis(const IntMatrix& m) {
  std::vector<SparseIntVector> columns;
  columns.reserve(static_cast<std::size_t>(m.cols()));
  for (Eigen::Index c = 0; c < m.cols(); ++c) columns.push_back(SparseIntVector::from_dense(m.col(c)));
  return kernel_of_columns(static_cast<std::size_t>(m.rows()), columns);
}

IntLattice lattice_intersect(const IntLattice& a, const IntLattice& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw std::invalid_argument("lattice_intersect: dimension mismatch");
  // (u, v) in ker [A; -B]^T  <=>  uA = vB; the intersection is spanned by uA.
  std::vector<SparseIntVector> columns;
  columns.reserve(a.rank() + b.rank());
  for (const auto& r : a.rows()) columns.push_back(r);
  for (const auto& r : b.rows()) {
    SparseIntVector neg = r;
    neg.negate();
    columns.push_back(std::move(neg));
  }
  const IntLattice k = kernel_of_columns(a.ambient_dim(), columns);
  LatticeBuilder out(a.ambient_dim());
  for (const auto& kv : k.rows()) {
    SparseIntVector acc;
    for (const auto& [i, coeff] : kv.entries()) {
      if (i >= a.rank()) break;
      acc = SparseIntVector::combine(1, acc, coeff, a.rows()[i]);
    }
    out.insert(std::move(acc));
  }
  return out.build();
}

IntLattice lattice_sum(const IntLattice& a, const IntLattice& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("lattice_sum: dimension mismatch");
  LatticeBuilder out(a.ambient_dim());
  for (const auto& r : a.rows()) out.insert(r);
  for (const auto& r : b.rows()) out.insert(r);
  return out.build();
}

bool lattice_member(const IntVector& v, const IntLattice& l) { return l.contains(v); }

IntLattice lattice_image(const IntLattice& l, std::span<const SparseIntVector> columns_of_map,
                         std::size_t target_dim) {
  if (columns_of_map.size() != l.ambient_dim())
    throw std::invalid_argument("lattice_image: map domain does not match lattice dimension");
  LatticeBuilder out(target_dim);
  for (const auto& row : l.rows()) {
    SparseIntVector acc;
    for (const auto& [i, c] : row.entries()) acc = SparseIntVector::combine(1, acc, c, columns_of_map[i]);
    out.insert(std::move(acc));
  }
  return out.build();
}

}  // namespace lieforge
