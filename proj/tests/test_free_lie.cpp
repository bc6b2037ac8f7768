#include "doctest.h"
#include "lieforge/free_lie.hpp"

#include <random>
#include <set>

using namespace lieforge;

namespace {

LieElement X(int n, int i) { return LieElement::generator(n, i); }
LieElement br(const LieElement& a, const LieElement& b) { return lie_bracket(a, b); }

// Oracle: Lyndon words as primitive words minimal in their rotation class,
// found by enumerating every word.
std::set<Word> lyndon_by_rotation(int n, int k) {
  std::set<Word> out;
  std::vector<int> w(static_cast<std::size_t>(k), 1);
  for (;;) {
    bool ok = true;
    for (int r = 1; r < k && ok; ++r) {
      std::vector<int> rot(w.begin() + r, w.end());
      rot.insert(rot.end(), w.begin(), w.begin() + r);
      ok = w < rot;  // strictly smaller than every proper rotation
    }
    if (ok) out.insert(Word(w));
    int t = k - 1;
    while (t >= 0 && w[static_cast<std::size_t>(t)] == n) w[static_cast<std::size_t>(t--)] = 1;
    if (t < 0) break;
    ++w[static_cast<std::size_t>(t)];
  }
  return out;
}

// Oracle: tensor of an explicitly bracketed expression, expanded as nested
// commutators directly in the tensor algebra.
struct Tree {
  int letter = 0;
  std::shared_ptr<Tree> l, r;
};
using TreeP = std::shared_ptr<Tree>;
TreeP leaf(int i) { auto t = std::make_shared<Tree>(); t->letter = i; return t; }
TreeP node(TreeP a, TreeP b) { auto t = std::make_shared<Tree>(); t->l = a; t->r = b; return t; }

NCPolynomial tree_tensor(const TreeP& t) {
  if (t->letter) return NCPolynomial::monomial(Word::letter(t->letter));
  const NCPolynomial a = tree_tensor(t->l), b = tree_tensor(t->r);
  return a * b - b * a;
}
LieElement tree_lie(int n, const TreeP& t) {
  if (t->letter) return X(n, t->letter);
  return br(tree_lie(n, t->l), tree_lie(n, t->r));
}

TreeP random_tree(std::mt19937_64& rng, int n, int degree) {
  if (degree == 1) return leaf(1 + static_cast<int>(rng() % n));
  const int left = 1 + static_cast<int>(rng() % (degree - 1));
  return node(random_tree(rng, n, left), random_tree(rng, n, degree - left));
}

LieElement random_homogeneous(std::mt19937_64& rng, int n, int degree) {
  LieElement x(n);
  const auto& idx = lyndon_index(n, degree);
  for (int t = 0; t < 3; ++t)
    x.add(idx.word(rng() % idx.size()), static_cast<long>(rng() % 7) - 3);
  return x;
}

}  // namespace

TEST_CASE("witt_rank examples") {
  CHECK(witt_rank(2, 1) == 2);
  CHECK(witt_rank(3, 2) == 3);
  CHECK(witt_rank(3, 3) == 8);
  CHECK(witt_rank(3, 4) == 18);
  CHECK(witt_rank(3, 5) == 48);
}

TEST_CASE("Lyndon enumeration agrees with the rotation oracle and with Witt") {
  for (int n = 1; n <= 5; ++n)
    for (int k = 1; k <= 7; ++k) {
      if (std::pow(n, k) > 200000) continue;
      const auto words = lyndon_words(n, k);
      CHECK(static_cast<std::int64_t>(words.size()) == witt_rank(n, k));
      CHECK(std::set<Word>(words.begin(), words.end()) == lyndon_by_rotation(n, k));
      for (std::size_t i = 1; i < words.size(); ++i) CHECK(lex_less(words[i - 1], words[i]));
    }
  CHECK(lyndon_words(5, 7).size() == static_cast<std::size_t>(witt_rank(5, 7)));
}

TEST_CASE("closed forms d(n,2) and d(n,3)") {
  for (int n = 1; n <= 8; ++n) {
    CHECK(witt_rank(n, 2) == n * (n - 1) / 2);
    CHECK(witt_rank(n, 3) == (n * n * n - n) / 3);
  }
}

TEST_CASE("standard factorization") {
  CHECK(standard_factorization(Word{1, 1, 2}) == std::pair{Word{1}, Word{1, 2}});
  CHECK(standard_factorization(Word{1, 2, 2}) == std::pair{Word{1, 2}, Word{2}});
  CHECK(standard_factorization(Word{1, 1, 2, 1, 2}) == std::pair{Word{1, 1, 2}, Word{1, 2}});
}

TEST_CASE("lie_bracket examples") {
  CHECK(br(X(2, 1), X(2, 1)).is_zero());
  CHECK(br(X(2, 2), X(2, 1)) == -br(X(2, 1), X(2, 2)));
  const LieElement lhs = br(br(X(2, 1), X(2, 2)), X(2, 1));
  CHECK(lhs == -br(X(2, 1), br(X(2, 1), X(2, 2))));
  CHECK(to_tensor(lhs) == tree_tensor(node(node(leaf(1), leaf(2)), leaf(1))));
}

TEST_CASE("to_tensor examples") {
  CHECK(to_tensor(X(2, 1)) == NCPolynomial::monomial(Word{1}));
  NCPolynomial e;
  e.add(Word{1, 2}, 1);
  e.add(Word{2, 1}, -1);
  CHECK(to_tensor(br(X(2, 1), X(2, 2))) == e);
  NCPolynomial f;
  f.add(Word{1, 1, 2}, 1);
  f.add(Word{1, 2, 1}, -2);
  f.add(Word{2, 1, 1}, 1);
  CHECK(to_tensor(br(X(2, 1), br(X(2, 1), X(2, 2)))) == f);
}

TEST_CASE("brackets of random trees agree with tensor expansion") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 3);
    const int degree = 2 + static_cast<int>(rng() % 5);
    const TreeP t = random_tree(rng, n, degree);
    const LieElement x = tree_lie(n, t);
    CHECK(to_tensor(x) == tree_tensor(t));
    CHECK(from_tensor(n, tree_tensor(t)) == x);
  }
}

TEST_CASE("Jacobi identity on random homogeneous triples") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 3);
    const int da = 1 + static_cast<int>(rng() % 2), db = 1 + static_cast<int>(rng() % 2);
    const int dc = 1 + static_cast<int>(rng() % (7 - da - db));
    const auto a = random_homogeneous(rng, n, da), b = random_homogeneous(rng, n, db), c = random_homogeneous(rng, n, dc);
    CHECK((br(a, br(b, c)) + br(b, br(c, a)) + br(c, br(a, b))).is_zero());
  }
}

TEST_CASE("bracket matches the tensor commutator") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 3);
    const auto a = random_homogeneous(rng, n, 1 + static_cast<int>(rng() % 3));
    const auto b = random_homogeneous(rng, n, 1 + static_cast<int>(rng() % 3));
    CHECK(to_tensor(br(a, b)) == commutator(to_tensor(a), to_tensor(b)));
  }
}

TEST_CASE("to_tensor is injective degreewise") {
  for (int n = 2; n <= 4; ++n)
    for (int k = 1; k <= 6; ++k) {
      if (n == 4 && k == 6) continue;  // 4096 columns; covered by n <= 3 at k = 6
      std::map<Word, std::size_t> column;
      std::vector<SparseIntVector> rows;
      for (const Word& w : lyndon_index(n, k).words()) {
        std::vector<std::pair<std::size_t, BigInt>> entries;
        for (const auto& [m, c] : basis_tensor(w).terms()) {
          auto it = column.try_emplace(m, column.size()).first;
          entries.emplace_back(it->second, c);
        }
        std::sort(entries.begin(), entries.end(), [](auto& a, auto& b) { return a.first < b.first; });
        SparseIntVector v;
        for (auto& [i, c] : entries) v.push_back(i, c);
        rows.push_back(v);
      }
      CHECK(static_cast<std::int64_t>(IntLattice::from_generators(column.size() + 1, rows).rank()) == witt_rank(n, k));
    }
}

TEST_CASE("from_tensor rejects non-Lie polynomials") {
  CHECK_THROWS_AS(from_tensor(2, NCPolynomial::monomial(Word{1, 2})), std::invalid_argument);
  CHECK_THROWS_AS(from_tensor(2, NCPolynomial::monomial(Word{1, 1})), std::invalid_argument);
}

TEST_CASE("centralizer_of_linear examples") {
  const LieElement x = X(2, 1) + X(2, 2);
  CHECK(centralizer_of_linear(x, 1) == IntLattice::from_generators(2, std::vector{lie_coordinates(x, 1)}));
  const LieElement y = BigInt(2) * X(2, 1) + BigInt(4) * X(2, 2);
  const LieElement y_prim = X(2, 1) + BigInt(2) * X(2, 2);
  CHECK(centralizer_of_linear(y, 1) == IntLattice::from_generators(2, std::vector{lie_coordinates(y_prim, 1)}));
  CHECK(centralizer_of_linear(boundary_element(3), 2).is_zero());
  CHECK(centralizer_of_linear(boundary_element(3), 3).is_zero());
  CHECK_THROWS(centralizer_of_linear(LieElement(2), 1));
}

TEST_CASE("coordinates round trip") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = random_homogeneous(rng, 3, 4);
    CHECK(lie_from_coordinates(3, 4, lie_coordinates(a, 4)) == a);
  }
}
