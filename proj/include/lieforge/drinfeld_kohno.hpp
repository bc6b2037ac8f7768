#ifndef LIEFORGE_DRINFELD_KOHNO_HPP
#define LIEFORGE_DRINFELD_KOHNO_HPP

// The Drinfeld-Kohno Lie ring DK_n, realized as the Lie subring of braid-like
// derivations generated by the degree-one derivations tau1(t_ij).

#include "lieforge/derivation.hpp"
#include "lieforge/zlattice.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lieforge {

/// X_i -> [X_i, X_j], X_j -> [X_j, X_i], other generators -> 0.
/// Symmetric in (i, j); zero when i == j.
HomDerivation tau1(int i, int j, int n);
/// Sum of tau1(t_ij) over i < j.
HomDerivation xi_bar(int n);

/// Degree-k piece of DK_n in derivation coordinates, with the left-normed
/// brackets that were needed to span it.
struct DKComponent {
  int n = 0;
  int k = 0;
  IntLattice lattice;
  std::vector<HomDerivation> spanning;
  std::vector<std::string> bracket_words;
};

/// Built degree by degree and cached per n; thread-safe.
const DKComponent& dk_component(int n, int k);
/// Sum of d(l, k) over l = 1..n-1.
std::int64_t dk_rank_formula(int n, int k);
/// n d(n,k) - d(n,k+1) for k >= 2, n(n-1)/2 for k = 1.
std::int64_t braidlike_rank_formula(int n, int k);

struct RelationCheck {
  std::string relation;
  bool holds = false;
};
/// Infinitesimal braid relations on the tau1 images, plus the symmetry
/// conventions t_ij = t_ji and t_ii = 0.
std::vector<RelationCheck> check_dk_presentation(int n);

/// Elements of DK_n(k) commuting with every tau1(t_ij), in derivation coordinates.
IntLattice dk_center_component(int n, int k);
/// dk_center_component for k = 1..D (entry k-1).
std::vector<IntLattice> dk_center(int n, int max_degree);
/// Center of DK_n / Z xi_bar. Degree 1 lives in the quotient coordinates
/// lambda -> (lambda_ij - lambda_12)_{(i,j) != (1,2)} of the tau1 basis;
/// higher degrees in derivation coordinates.
std::vector<IntLattice> dk_star_center(int n, int max_degree);

struct CensusRow {
  int n = 0;
  int k = 0;
  std::size_t rank_braidlike = 0;
  std::size_t rank_dk = 0;
  std::int64_t gap = 0;
  std::int64_t formula_braidlike = 0;
  std::int64_t formula_dk = 0;
  /// The closed form (n-3)(n-2) n(n-1)/12 quoted for rk_3(DK_n); only for k = 3.
  std::optional<std::int64_t> closed_form_dk;
};
CensusRow cokernel_census(int n, int k);

/// Bernoulli numbers of z e^z / (e^z - 1), so B_1 = +1/2.
Rational bernoulli(int j);

/// m -> sum_{l=1}^m l^alpha as a polynomial in m (coefficient p is that of m^p).
class FaulhaberPoly {
 public:
  explicit FaulhaberPoly(int alpha);
  [[nodiscard]] int alpha() const { return alpha_; }
  [[nodiscard]] const std::vector<Rational>& coeffs() const { return coeffs_; }
  [[nodiscard]] Rational operator()(const Rational& m) const;

 private:
  int alpha_;
  std::vector<Rational> coeffs_;
};

/// Closed-form power sum sum_{l=1}^m l^alpha.
BigInt faulhaber_sum(int alpha, std::int64_t m);
/// The same sum by direct addition.
BigInt direct_power_sum(int alpha, std::int64_t m);

/// Exact polynomial in n for rk_k(braid-like) - rk_k(DK_n), coefficient p of n^p.
std::vector<Rational> cokernel_rank_polynomial(int k);

}  // namespace lieforge

#endif  // LIEFORGE_DRINFELD_KOHNO_HPP
