#ifndef LIEFORGE_SUITE_HPP
#define LIEFORGE_SUITE_HPP

// End-to-end checks that tie automorphism groups to the Lie lattices: the
// Andreadakis equality for Inn(F_n), the center of P_n, the action on
// F_n / <<x_1...x_n>>, Johnson-image ranks of whole families, and the
// intersection DK_n with inner derivations.

#include "lieforge/braid.hpp"
#include "lieforge/zlattice.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace lieforge {

struct CheckRecord {
  std::string description;
  std::string expected;
  std::string computed;
  bool pass = false;
};

struct SuiteReport {
  std::string suite;
  nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
  std::vector<CheckRecord> checks;

  [[nodiscard]] bool pass() const;
  void add(std::string description, std::string expected, std::string computed, bool pass);
  /// expected == computed decides the outcome.
  void add_eq(std::string description, std::string expected, std::string computed);
  [[nodiscard]] std::size_t failures() const;
  [[nodiscard]] nlohmann::ordered_json to_json() const;
};

/// splitmix64 step; used to derive independent stream seeds from one seed.
std::uint64_t splitmix64(std::uint64_t& state);
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0, std::uint64_t c = 0);

/// A random element of Gamma_d(F_n) \ Gamma_{d+1}(F_n): a left-normed
/// commutator of short random words times a Gamma_d factor, redrawn until its
/// Magnus degree is exactly d. Deterministic in `stream_seed`.
ReducedWord sample_gamma_word(int n, int d, std::uint64_t stream_seed);

SuiteReport verify_inner_equality(int n, int max_degree, int samples, std::uint64_t seed, int jobs = 1);
SuiteReport verify_center_pn(int n);
SuiteReport verify_quotient_action(int n);

/// Degree-k lattice of a family's Johnson images, built from left-normed
/// group commutators of its generators.
struct FamilyLattice {
  int k = 0;
  IntLattice lattice;
  std::size_t candidates = 0;        // commutators evaluated
  std::vector<std::string> spanning;  // commutators that enlarged the lattice
};

/// Expected Lie rank of the family in degree k.
std::int64_t family_expected_rank(Family f, int n, int k);
std::vector<FamilyLattice> family_lattices(Family f, int n, int max_degree, int jobs = 1);

SuiteReport verify_johnson_injectivity(Family f, int n, int max_degree, int jobs = 1);
SuiteReport verify_key_theorem_hypothesis(int n, int max_degree);
SuiteReport verify_triangular_degree1(int n);
/// c_{k,i} c_{k-1,i}^-1 = chi_{k,i} as tables.
SuiteReport verify_partial_inner(int n);

}  // namespace lieforge

#endif  // LIEFORGE_SUITE_HPP
