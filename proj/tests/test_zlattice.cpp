#include "doctest.h"
#include "lieforge/zlattice.hpp"

#include <random>

using namespace lieforge;

namespace {

IntMatrix mat(std::initializer_list<std::initializer_list<long>> rows) {
  const auto r = static_cast<Eigen::Index>(rows.size());
  const auto c = static_cast<Eigen::Index>(rows.begin()->size());
  IntMatrix m(r, c);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (long v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

IntVector vec(std::initializer_list<long> xs) {
  IntVector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (long x : xs) v(i++) = x;
  return v;
}

IntMatrix random_matrix(std::mt19937_64& rng, int rows, int cols, int range) {
  std::uniform_int_distribution<int> d(-range, range);
  IntMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = d(rng);
  return m;
}

// Oracle for membership: v lies in the row span iff appending it leaves the
// Hermite form unchanged (dense routine, independent of the sparse engine).
bool dense_member(const IntMatrix& basis, const IntVector& v) {
  IntMatrix stacked(basis.rows() + 1, basis.cols());
  stacked.topRows(basis.rows()) = basis;
  stacked.row(basis.rows()) = v.transpose();
  return arith::equal(hermite_form(stacked), hermite_form(basis));
}

}  // namespace

TEST_CASE("hermite_form examples") {
  CHECK(arith::equal(hermite_form(mat({{2, 4}, {1, 3}})), mat({{1, 1}, {0, 2}})));
  IntMatrix id = IntMatrix::Identity(3, 3);
  CHECK(arith::equal(hermite_form(id), id));
  CHECK(hermite_form(IntMatrix::Zero(2, 3)).rows() == 0);
}

TEST_CASE("hermite_form [[2,4],[1,3]] spans the same lattice as its input") {
  // Hand reduction: row2 <- row1 - 2 row2 gives (0,-2); then (1,3) - (0,2) = (1,1).
  const IntMatrix in = mat({{2, 4}, {1, 3}});
  const IntMatrix out = mat({{1, 1}, {0, 2}});
  for (int i = 0; i < 2; ++i) {
    CHECK(dense_member(out, in.row(i).transpose()));
    CHECK(dense_member(in, out.row(i).transpose()));
  }
}

TEST_CASE("smith_rank examples") {
  CHECK(smith_rank(mat({{2, 0}, {0, 3}})) == 2);
  CHECK(smith_rank(mat({{1, 2}, {2, 4}})) == 1);
  CHECK(smith_rank(mat({{0}})) == 0);
  const IntVector inv = smith_invariants(mat({{2, 0}, {0, 3}}));
  CHECK(inv.size() == 2);
  CHECK(inv(0) == 1);
  CHECK(inv(1) == 6);
}

TEST_CASE("kernel_basis examples") {
  CHECK(kernel_basis(mat({{1, 1}})) == IntLattice::from_rows(mat({{1, -1}})));
  IntMatrix id = IntMatrix::Identity(3, 3);
  CHECK(kernel_basis(id).is_zero());
  const IntLattice k = kernel_basis(mat({{2, 4}}));
  CHECK(k.rank() == 1);
  CHECK(k.contains(vec({2, -1})));
  CHECK(!k.contains(vec({1, 0})));
}

TEST_CASE("lattice_intersect examples") {
  auto span = [](std::initializer_list<std::initializer_list<long>> rows) { return IntLattice::from_rows(mat(rows)); };
  CHECK(lattice_intersect(span({{1, 0}}), span({{0, 1}})).is_zero());
  CHECK(lattice_intersect(span({{1, 0}, {0, 1}}), span({{1, 1}})) == span({{1, 1}}));
  CHECK(lattice_intersect(span({{2, 0}}), span({{3, 0}})) == span({{6, 0}}));
  CHECK_THROWS(lattice_intersect(IntLattice(2), IntLattice(3)));
}

TEST_CASE("lattice_member examples") {
  auto span = [](std::initializer_list<std::initializer_list<long>> rows) { return IntLattice::from_rows(mat(rows)); };
  CHECK(lattice_member(vec({2, 2}), span({{1, 1}})));
  CHECK(!lattice_member(vec({1, 0}), span({{2, 0}})));
  CHECK(lattice_member(vec({0, 0}), span({{2, 0}})));
  CHECK(lattice_member(vec({0, 0}), IntLattice(2)));
}

TEST_CASE("sparse lattice basis equals the dense Hermite form") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int rows = 1 + static_cast<int>(rng() % 5);
    const int cols = 1 + static_cast<int>(rng() % 5);
    const IntMatrix m = random_matrix(rng, rows, cols, 6);
    const IntMatrix h = hermite_form(m);
    const IntLattice l = IntLattice::from_rows(m);
    CHECK(arith::equal(l.basis(), h));
    CHECK(l.rank() == smith_rank(m));
  }
}

TEST_CASE("hermite_form is idempotent and span preserving") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const IntMatrix m = random_matrix(rng, 4, 5, 9);
    const IntMatrix h = hermite_form(m);
    CHECK(arith::equal(hermite_form(h), h));
    const IntLattice lm = IntLattice::from_rows(m);
    const IntLattice lh = IntLattice::from_rows(h);
    CHECK(lm.contains(lh));
    CHECK(lh.contains(lm));
  }
}

TEST_CASE("intersection is commutative, bounded in rank, and contained in both") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const IntLattice a = IntLattice::from_rows(random_matrix(rng, 2, 4, 4));
    const IntLattice b = IntLattice::from_rows(random_matrix(rng, 3, 4, 4));
    const IntLattice ab = lattice_intersect(a, b);
    CHECK(ab == lattice_intersect(b, a));
    CHECK(ab.rank() <= std::min(a.rank(), b.rank()));
    CHECK(a.contains(ab));
    CHECK(b.contains(ab));
    // Oracle: a + b has rank ra + rb - r(a cap b) over Q.
    CHECK(lattice_sum(a, b).rank() + ab.rank() == a.rank() + b.rank());
  }
}

TEST_CASE("kernel lattices are saturated and have the expected rank") {
  std::mt19937_64 rng(17);
  const int primes[] = {2, 3, 5, 7, 11, 13};
  for (int trial = 0; trial < 100; ++trial) {
    const IntMatrix m = random_matrix(rng, 2, 5, 5);
    const IntLattice k = kernel_basis(m);
    CHECK(k.rank() == 5 - smith_rank(m));
    for (const auto& row : k.rows()) {
      const IntVector v = row.to_dense(5);
      for (Eigen::Index i = 0; i < m.rows(); ++i) {
        BigInt dot = 0;
        for (Eigen::Index j = 0; j < m.cols(); ++j) dot += m(i, j) * v(j);
        CHECK(dot == 0);
      }
      for (int p : primes) {
        bool divisible = true;
        for (Eigen::Index i = 0; i < v.size(); ++i) divisible = divisible && BigInt(v(i) % p) == 0;
        if (!divisible) continue;
        IntVector q = v;
        for (Eigen::Index i = 0; i < q.size(); ++i) q(i) /= p;
        CHECK(k.contains(q));
      }
    }
    CHECK(k.is_saturated());
  }
}

TEST_CASE("saturation of a scaled lattice") {
  const IntLattice l = IntLattice::from_rows(mat({{2, 4, 6}, {0, 3, 3}}));
  CHECK(!l.is_saturated());
  const IntLattice s = l.saturation();
  CHECK(s == IntLattice::from_rows(mat({{1, 2, 3}, {0, 1, 1}})));
  CHECK(s.is_saturated());
}

TEST_CASE("saturation of full-rank lattices agrees with the Smith invariants") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 100; ++trial) {
    const int dim = 1 + static_cast<int>(rng() % 5);
    const IntMatrix m = random_matrix(rng, dim + static_cast<int>(rng() % 3), dim, 2);
    const IntLattice l = IntLattice::from_rows(m);
    if (l.rank() != static_cast<std::size_t>(dim)) continue;
    const IntVector inv = smith_invariants(m);
    bool unimodular = true;
    for (Eigen::Index i = 0; i < inv.size(); ++i) unimodular = unimodular && inv(i) == 1;
    CHECK(l.is_saturated() == unimodular);
  }
  CHECK(!IntLattice::from_rows(mat({{2, 1}, {0, 1}})).is_saturated());
  CHECK(IntLattice::from_rows(mat({{2, 1}, {1, 1}})).is_saturated());
}

TEST_CASE("lattice_image maps generators through the columns") {
  const IntLattice l = IntLattice::from_rows(mat({{1, 1}}));
  std::vector<SparseIntVector> cols{SparseIntVector::from_dense(vec({1, 0, 2})), SparseIntVector::from_dense(vec({0, 1, 2}))};
  CHECK(lattice_image(l, cols, 3) == IntLattice::from_rows(mat({{1, 1, 4}})));
}
