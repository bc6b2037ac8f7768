#include "doctest.h"
#include "lieforge/drinfeld_kohno.hpp"
#include "lieforge/magnus.hpp"
#include "lieforge/suite.hpp"

using namespace lieforge;

namespace {

std::string failures_of(const SuiteReport& r) {
  std::string s;
  for (const auto& c : r.checks)
    if (!c.pass) s += c.description + ": expected " + c.expected + ", got " + c.computed + "\n";
  return s;
}

}  // namespace

TEST_CASE("report pass flag follows its records") {
  SuiteReport r;
  CHECK(r.pass());
  r.add_eq("a", "1", "1");
  CHECK(r.pass());
  r.add_eq("b", "1", "2");
  CHECK(!r.pass());
  CHECK(r.failures() == 1);
  CHECK(r.to_json()["pass"] == false);
}

TEST_CASE("derived seeds separate streams and repeat") {
  CHECK(derive_seed(42, 3, 2, 7) == derive_seed(42, 3, 2, 7));
  CHECK(derive_seed(42, 3, 2, 7) != derive_seed(42, 3, 2, 8));
  CHECK(derive_seed(42, 3, 2, 7) != derive_seed(43, 3, 2, 7));
}

TEST_CASE("sampled words have the requested degree") {
  for (int n = 2; n <= 4; ++n)
    for (int d = 1; d <= 5; ++d)
      for (std::uint64_t s = 0; s < 10; ++s) {
        const ReducedWord w = sample_gamma_word(n, d, derive_seed(7, n, d, s));
        CHECK(gamma_degree(w, d + 1) == FiltrationDegree::finite(d));
        CHECK(w == sample_gamma_word(n, d, derive_seed(7, n, d, s)));
      }
}

TEST_CASE("inner equality suite") {
  for (int n = 2; n <= 4; ++n) {
    const SuiteReport r = verify_inner_equality(n, 5, 20, 42, 2);
    CHECK_MESSAGE(r.pass(), failures_of(r));
  }
  const SuiteReport a = verify_inner_equality(3, 4, 10, 9, 1);
  const SuiteReport b = verify_inner_equality(3, 4, 10, 9, 3);
  CHECK(a.to_json().dump() == b.to_json().dump());
}

TEST_CASE("center and quotient suites") {
  for (int n = 2; n <= 6; ++n) {
    const SuiteReport r = verify_center_pn(n);
    CHECK_MESSAGE(r.pass(), failures_of(r));
  }
  for (int n = 3; n <= 6; ++n) {
    const SuiteReport r = verify_quotient_action(n);
    CHECK_MESSAGE(r.pass(), failures_of(r));
  }
}

TEST_CASE("family lattice examples") {
  CHECK(family_lattices(Family::Inn, 3, 2)[1].lattice.rank() == 3);
  CHECK(family_lattices(Family::Pn, 3, 2)[1].lattice.rank() == 1);
  CHECK(family_lattices(Family::FnPn, 3, 1)[0].lattice.rank() == 5);
  CHECK(family_expected_rank(Family::FnPn, 3, 1) == 5);
  CHECK_THROWS(family_expected_rank(Family::IAnPlus, 3, 1));
}

TEST_CASE("johnson injectivity suite, n <= 3") {
  for (Family f : {Family::Inn, Family::Pn, Family::FnPn})
    for (int n = 2; n <= 3; ++n) {
      const SuiteReport r = verify_johnson_injectivity(f, n, 4, 2);
      const std::string what = family_name(f) + " n=" + std::to_string(n) + "\n" + failures_of(r);
      CHECK_MESSAGE(r.pass(), what);
    }
}

TEST_CASE("key theorem, triangular and partial inner suites") {
  for (int n = 3; n <= 4; ++n) {
    const SuiteReport k = verify_key_theorem_hypothesis(n, 3);
    CHECK_MESSAGE(k.pass(), failures_of(k));
    const SuiteReport t = verify_triangular_degree1(n);
    CHECK_MESSAGE(t.pass(), failures_of(t));
  }
  for (int n = 2; n <= 5; ++n) {
    const SuiteReport p = verify_partial_inner(n);
    CHECK_MESSAGE(p.pass(), failures_of(p));
  }
}
