#include "doctest.h"
#include "lieforge/braid.hpp"
#include "lieforge/drinfeld_kohno.hpp"
#include "lieforge/magnus.hpp"

#include <numeric>
#include <random>

using namespace lieforge;

namespace {

ReducedWord W(int n, const char* s) { return ReducedWord::parse(n, s); }

EndoTable inverse_inner(const ReducedWord& w) { return EndoTable::inner(w.inverse()); }

}  // namespace

TEST_CASE("sigma_table follows the documented convention") {
  const EndoTable s = sigma_table(1, 2);
  CHECK(s.image(1) == W(2, "x2"));
  CHECK(s.image(2) == W(2, "x2^-1 x1 x2"));
  const EndoTable si = evaluate(AutWord::parse(2, "s1^-1"));
  CHECK(si.image(1) == W(2, "x1 x2 x1^-1"));
  CHECK(si.image(2) == W(2, "x1"));
  CHECK(endo_apply(s, boundary(2)) == boundary(2));
  CHECK(evaluate(AutWord::parse(2, "s1.s1^-1")) == EndoTable::identity(2));
  CHECK_THROWS(sigma_table(2, 2));
  CHECK_THROWS(sigma_table(0, 3));
}

TEST_CASE("sigma tables satisfy the braid relations") {
  for (int n = 3; n <= 5; ++n) {
    for (int i = 1; i + 1 < n; ++i)
      CHECK(evaluate(AutWord::parse(n, "s" + std::to_string(i) + ".s" + std::to_string(i + 1) + ".s" + std::to_string(i))) ==
            evaluate(AutWord::parse(n, "s" + std::to_string(i + 1) + ".s" + std::to_string(i) + ".s" + std::to_string(i + 1))));
    for (int i = 1; i < n; ++i)
      for (int j = i + 2; j < n; ++j)
        CHECK(endo_compose(sigma_table(i, n), sigma_table(j, n)) == endo_compose(sigma_table(j, n), sigma_table(i, n)));
  }
}

TEST_CASE("pure_a_table examples") {
  // (x1x2)^-1 x_t (x1x2): sigma_1^2 under the convention above.
  const EndoTable a12 = pure_a_table(1, 2, 2);
  CHECK(a12.image(1) == W(2, "(x1 x2)^-1 x1 (x1 x2)"));
  CHECK(a12.image(2) == W(2, "(x1 x2)^-1 x2 (x1 x2)"));
  CHECK(a12 == endo_compose(sigma_table(1, 2), sigma_table(1, 2)));
  CHECK(endo_apply(a12, boundary(2)) == boundary(2));
  CHECK(endo_apply(pure_a_table(1, 3, 3), W(3, "x2")).is_conjugate_to_generator(2));
  CHECK_THROWS(pure_a_table(2, 2, 3));
  CHECK_THROWS(pure_a_table(1, 4, 3));
}

TEST_CASE("pure braid, xi and C_j tables are braid automorphisms") {
  for (int n = 2; n <= 6; ++n) {
    for (int j = 2; j <= n; ++j)
      for (int i = 1; i < j; ++i) CHECK(is_braid_automorphism(pure_a_table(i, j, n)));
    CHECK(is_braid_automorphism(evaluate(xi_word(n))));
    for (int j = 1; j < n; ++j) CHECK(is_braid_automorphism(c_j_table(j, n)));
  }
  CHECK(!is_braid_automorphism(EndoTable::inner(W(3, "x1"))));
  CHECK(!is_braid_automorphism(sigma_table(1, 3)));
}

TEST_CASE("A_ij has Johnson image tau1(t_ij)") {
  for (int n = 2; n <= 5; ++n)
    for (int j = 2; j <= n; ++j)
      for (int i = 1; i < j; ++i) {
        const HomDerivation d = johnson_image(pure_a_table(i, j, n), 3);
        CHECK(d.degree() == 1);
        CHECK(d == tau1(i, j, n));
      }
}

TEST_CASE("boundary examples") {
  CHECK(boundary(1) == W(1, "x1"));
  CHECK(boundary(3) == W(3, "x1 x2 x3"));
  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 30; ++trial) {
    AutWord w(4);
    for (int t = 0; t < 5; ++t) {
      const int j = 2 + static_cast<int>(rng() % 3), i = 1 + static_cast<int>(rng() % static_cast<unsigned>(j - 1));
      w.push_back(AutSymbol::pure_a(i, j, rng() % 2 ? 1 : -1));
    }
    CHECK(endo_apply(evaluate(w), boundary(4)) == boundary(4));
  }
}

TEST_CASE("xi_word examples") {
  CHECK(xi_word(2) == AutWord(2, {AutSymbol::pure_a(1, 2)}));
  CHECK(xi_word(3) == AutWord(3, {AutSymbol::pure_a(1, 3), AutSymbol::pure_a(2, 3), AutSymbol::pure_a(1, 2)}));
  for (int n = 2; n <= 6; ++n) {
    const EndoTable xi = evaluate(xi_word(n));
    CHECK(endo_compose(xi, EndoTable::inner(boundary(n))) == EndoTable::identity(n));
    CHECK(xi == inverse_inner(boundary(n)));
    for (int j = 2; j <= n; ++j)
      for (int i = 1; i < j; ++i) {
        const EndoTable a = pure_a_table(i, j, n);
        CHECK(endo_compose(xi, a) == endo_compose(a, xi));
      }
  }
}

TEST_CASE("c_j_table examples") {
  const EndoTable c1 = c_j_table(1, 3);
  CHECK(c1.image(1) == W(3, "x1"));
  CHECK(c1.image(2) == W(3, "(x2 x3)^-1 x2 (x2 x3)"));
  CHECK(c1.image(3) == W(3, "(x2 x3)^-1 x3 (x2 x3)"));
  for (int n = 2; n <= 6; ++n)
    for (int j = 1; j < n; ++j) CHECK(endo_apply(c_j_table(j, n), boundary(n)) == boundary(n));
  CHECK_THROWS(c_j_table(3, 3));
}

TEST_CASE("quotient_table examples") {
  CHECK(quotient_table(EndoTable::identity(3)) == EndoTable::identity(2));
  for (int n = 3; n <= 6; ++n) {
    CHECK(quotient_table(evaluate(xi_word(n))) == EndoTable::identity(n - 1));
    for (int j = 1; j < n; ++j) {
      ReducedWord p(n - 1);
      for (int t = 1; t <= j; ++t) p = p * ReducedWord::generator(n - 1, t);
      CHECK(quotient_table(c_j_table(j, n)) == EndoTable::inner(p));
    }
  }
  CHECK(quotient_table(c_j_table(1, 3)) == EndoTable::inner(W(2, "x1")));
}

TEST_CASE("quotient_table is multiplicative on braid automorphisms") {
  std::mt19937_64 rng(79);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 2);
    auto pick = [&] {
      const int j = 2 + static_cast<int>(rng() % static_cast<unsigned>(n - 1));
      const int i = 1 + static_cast<int>(rng() % static_cast<unsigned>(j - 1));
      return pure_a_table(i, j, n);
    };
    const EndoTable a = pick(), b = pick();
    CHECK(quotient_table(endo_compose(a, b)) == endo_compose(quotient_table(a), quotient_table(b)));
  }
}

TEST_CASE("section round trip on P_{n-1} generators") {
  for (int n = 3; n <= 6; ++n)
    for (int j = 2; j < n; ++j)
      for (int i = 1; i < j; ++i) {
        const EndoTable beta = pure_a_table(i, j, n - 1);
        const EndoTable s = extend_table(beta);
        CHECK(s == pure_a_table(i, j, n));
        CHECK(quotient_table(s) == beta);
      }
}

TEST_CASE("braid_abelianize examples") {
  CHECK(braid_abelianize(AutWord::parse(2, "A(1,2)")) == std::vector<std::int64_t>{1});
  CHECK(braid_abelianize(AutWord::parse(2, "A(1,2).A(1,2)^-1")) == std::vector<std::int64_t>{0});
  CHECK(braid_abelianize(xi_word(3)) == std::vector<std::int64_t>{1, 1, 1});
  CHECK_THROWS(braid_abelianize(AutWord::parse(3, "s1")));
  for (int n = 2; n <= 6; ++n) {
    const auto v = braid_abelianize(xi_word(n));
    CHECK(v == std::vector<std::int64_t>(static_cast<std::size_t>(n * (n - 1) / 2), 1));
    std::int64_t g = 0;
    for (auto x : v) g = std::gcd(g, x);
    CHECK(g == 1);
  }
}

TEST_CASE("AutWord parsing, inversion and evaluation order") {
  const AutWord w = AutWord::parse(3, "s1.A(1,3)^-1.inn(x1 x2).chi(3,1).C(2).xi");
  CHECK(w.symbols().size() == 8);  // xi expands to A(1,3).A(2,3).A(1,2)
  CHECK(AutWord::parse(3, w.str()) == w);
  CHECK(evaluate(w * w.inverse()) == EndoTable::identity(3));
  const AutWord ab = AutWord::parse(3, "s1.s2");
  CHECK(evaluate(ab) == endo_compose(sigma_table(1, 3), sigma_table(2, 3)));
  CHECK(evaluate(AutWord::parse(3, "s1^2")) == evaluate(AutWord::parse(3, "s1.s1")));
  CHECK(evaluate(AutWord::parse(2, "id")) == EndoTable::identity(2));
  CHECK_THROWS(AutWord::parse(3, "A(1,4)"));
  CHECK_THROWS(AutWord::parse(3, "bogus"));
  CHECK_THROWS(AutWord::parse(3, "tri(2; x1; x1)"));  // gamma must be a commutator
}

TEST_CASE("every symbol evaluates to an automorphism with the inverse it claims") {
  const int n = 4;
  const std::vector<std::string> symbols{"s1", "s3", "A(2,4)", "inn(x1 x3^-1)", "chi(3,1)", "pin(3,2)",
                                         "tri(3; x1 x2; [x1,x2])", "C(1)", "C(3)", "xi"};
  for (const auto& s : symbols) {
    const AutWord w = AutWord::parse(n, s);
    CHECK(evaluate(AutWord::parse(n, s + "^-1")) == evaluate(w.inverse()));
    CHECK(endo_compose(evaluate(w), evaluate(w.inverse())) == EndoTable::identity(n));
    CHECK(endo_compose(evaluate(w.inverse()), evaluate(w)) == EndoTable::identity(n));
  }
}

TEST_CASE("family_generators examples") {
  const auto inn = family_generators(Family::Inn, 2);
  REQUIRE(inn.size() == 2);
  CHECK(evaluate(inn[0]) == EndoTable::inner(W(2, "x1")));
  CHECK(evaluate(inn[1]) == EndoTable::inner(W(2, "x2")));
  const auto pn = family_generators(Family::Pn, 3);
  REQUIRE(pn.size() == 3);
  CHECK(evaluate(pn[0]) == pure_a_table(1, 2, 3));
  CHECK(evaluate(pn[1]) == pure_a_table(1, 3, 3));
  CHECK(evaluate(pn[2]) == pure_a_table(2, 3, 3));
  const auto fnpn = family_generators(Family::FnPn, 3);
  CHECK(fnpn.size() == 6);
  CHECK(parse_family("FnPn") == Family::FnPn);
  CHECK(family_name(Family::IAnPlus) == "IAnPlus");
  CHECK_THROWS(parse_family("nope"));
}

TEST_CASE("IA_n^+ sample is triangular and acts trivially on the abelianization") {
  for (int n = 3; n <= 4; ++n)
    for (const auto& g : family_generators(Family::IAnPlus, n)) {
      const EndoTable e = evaluate(g);
      CHECK(is_triangular(e));
      CHECK(a_degree(e, 3).is_finite());
      CHECK(e.image(1) == W(n, "x1"));
    }
  CHECK(is_triangular(EndoTable::inner(W(3, "x1"))));
  CHECK(!is_triangular(EndoTable::inner(W(3, "x2"))));
}

TEST_CASE("partial inner identity c_{k,i} c_{k-1,i}^-1 = chi_{k,i}") {
  for (int n = 3; n <= 5; ++n)
    for (int i = 1; i <= n; ++i)
      for (int k = i + 1; k <= n; ++k) {
        const AutWord lhs = AutWord::parse(n, "pin(" + std::to_string(k) + "," + std::to_string(i) + ").pin(" +
                                                  std::to_string(k - 1) + "," + std::to_string(i) + ")^-1");
        CHECK(evaluate(lhs) == evaluate(AutWord(n, {AutSymbol::chi(k, i)})));
      }
}
