#include "doctest.h"
#include "lieforge/free_group.hpp"

#include <random>

using namespace lieforge;

namespace {

ReducedWord W(int n, const char* s) { return ReducedWord::parse(n, s); }

ReducedWord random_word(std::mt19937_64& rng, int n, int len) {
  ReducedWord w(n);
  for (int t = 0; t < len; ++t) w.append({1 + static_cast<int>(rng() % n), rng() % 2 ? 1 : -1});
  return w;
}

// Oracle: naive letter-by-letter stack reduction over a flat sequence of
// signed generators.
std::vector<int> flat_reduce(const std::vector<int>& letters) {
  std::vector<int> st;
  for (int x : letters) {
    if (!st.empty() && st.back() == -x) st.pop_back();
    else st.push_back(x);
  }
  return st;
}

std::vector<int> flatten(const ReducedWord& w) {
  std::vector<int> out;
  for (const auto& [g, e] : w.syllables())
    for (std::int64_t t = 0; t < (e < 0 ? -e : e); ++t) out.push_back(e < 0 ? -g : g);
  return out;
}

}  // namespace

TEST_CASE("parsing and printing") {
  CHECK(W(3, "x1 x2^-1 x1^3").str() == "x1 x2^-1 x1^3");
  CHECK(W(2, "1").is_identity());
  CHECK(W(2, "x1 x1^-1").is_identity());
  CHECK(W(2, "[x1, x2]") == W(2, "x1 x2 x1^-1 x2^-1"));
  CHECK(W(2, "(x1 x2)^2") == W(2, "x1 x2 x1 x2"));
  CHECK(W(2, "(x1 x2)^-1") == W(2, "x2^-1 x1^-1"));
  CHECK_THROWS(W(2, "x3"));
  CHECK_THROWS(W(2, "x1 ?"));
}

TEST_CASE("word_mul examples") {
  CHECK(word_mul(W(2, "x1"), W(2, "x1^-1")).is_identity());
  CHECK(word_mul(W(2, "x1 x2"), W(2, "x2^-1 x1")) == W(2, "x1^2"));
  CHECK(word_mul(W(2, "x1"), W(2, "x2")).str() == "x1 x2");
  CHECK_THROWS(word_mul(W(2, "x1"), W(3, "x1")));
}

TEST_CASE("word_commutator examples") {
  CHECK(word_commutator(W(2, "x1"), W(2, "x1")).is_identity());
  CHECK(word_commutator(W(2, "x1"), W(2, "x2")).str() == "x1 x2 x1^-1 x2^-1");
  // x1x2 x2 x2^-1x1^-1 x2^-1 reduces to x1 x2 x1^-1 x2^-1.
  CHECK(word_commutator(W(2, "x1 x2"), W(2, "x2")) == W(2, "x1 x2 x1^-1 x2^-1"));
}

TEST_CASE("endo_apply examples") {
  const EndoTable swap({W(2, "x2"), W(2, "x1")});
  CHECK(endo_apply(EndoTable::identity(2), W(2, "x1 x2^-1 x1")) == W(2, "x1 x2^-1 x1"));
  CHECK(endo_apply(swap, W(2, "x1 x2^-1")) == W(2, "x2 x1^-1"));
  CHECK(endo_apply(EndoTable::inner(W(2, "x1")), W(2, "x2")) == W(2, "x1 x2 x1^-1"));
}

TEST_CASE("endo_compose examples") {
  const EndoTable swap({W(2, "x2"), W(2, "x1")});
  const EndoTable f({W(2, "x1 x2"), W(2, "x2^2")});
  CHECK(endo_compose(f, EndoTable::identity(2)) == f);
  CHECK(endo_compose(swap, swap) == EndoTable::identity(2));
  CHECK(endo_equal(endo_compose(EndoTable::inner(W(2, "x1")), EndoTable::inner(W(2, "x2"))),
                   EndoTable::inner(W(2, "x1 x2"))));
  CHECK(!endo_equal(EndoTable::identity(2), swap));
}

TEST_CASE("free reduction matches a letter-by-letter oracle") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 500; ++trial) {
    const ReducedWord a = random_word(rng, 3, static_cast<int>(rng() % 12));
    const ReducedWord b = random_word(rng, 3, static_cast<int>(rng() % 12));
    auto fa = flatten(a);
    auto fb = flatten(b);
    fa.insert(fa.end(), fb.begin(), fb.end());
    CHECK(flatten(word_mul(a, b)) == flat_reduce(fa));
  }
}

TEST_CASE("multiplication is associative") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const auto a = random_word(rng, 3, 8), b = random_word(rng, 3, 8), c = random_word(rng, 3, 8);
    CHECK(word_mul(word_mul(a, b), c) == word_mul(a, word_mul(b, c)));
  }
}

TEST_CASE("endo_apply is a homomorphism") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    const EndoTable e({random_word(rng, 3, 4), random_word(rng, 3, 4), random_word(rng, 3, 4)});
    const auto a = random_word(rng, 3, 7), b = random_word(rng, 3, 7);
    CHECK(endo_apply(e, a * b) == endo_apply(e, a) * endo_apply(e, b));
    CHECK(endo_apply(e, a.inverse()) == endo_apply(e, a).inverse());
    CHECK(endo_apply(e, a.pow(3)) == endo_apply(e, a).pow(3));
  }
}

TEST_CASE("cyclic reduction and conjugacy to a generator") {
  CHECK(W(3, "x1 x2 x1^-1").is_conjugate_to_generator(2));
  CHECK(!W(3, "x1 x2 x1^-1").is_conjugate_to_generator(1));
  CHECK(W(3, "x2^-1 x3^-1 x2 x3 x2").is_conjugate_to_generator(2));
  CHECK(!W(3, "x2 x3 x2^-1 x3^-1 x2").is_conjugate_to_generator(2));
  CHECK(W(3, "(x2 x3)^-1 x2 (x2 x3)").is_conjugate_to_generator(2));
  CHECK(W(2, "x1 x2 x1").cyclic_reduction() == W(2, "x1^2 x2"));
  CHECK(W(2, "x1^2").abelianization() == std::vector<std::int64_t>{2, 0});
}
