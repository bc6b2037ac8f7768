#ifndef LIEFORGE_BRAID_HPP
#define LIEFORGE_BRAID_HPP

// Named automorphisms of F_n (Artin generators, pure braids, inner,
// partial inner, triangular), formal words over them, and their evaluation.
//
// Conventions: sigma_i sends x_i -> x_{i+1} and x_{i+1} -> x_{i+1}^-1 x_i x_{i+1};
// A_ij = (sigma_{j-1}...sigma_{i+1}) sigma_i^2 (sigma_{j-1}...sigma_{i+1})^-1;
// a word s_1 s_2 ... s_m evaluates to s_1 o s_2 o ... o s_m.

#include "lieforge/free_group.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace lieforge {

enum class AutKind { Sigma, PureA, Inner, Chi, PartialInner, Triangular, CJ };

struct AutSymbol {
  AutKind kind = AutKind::Sigma;
  int a = 0;  // Sigma: i; PureA: i; Chi/PartialInner: k; Triangular: i; CJ: j
  int b = 0;  // PureA: j; Chi/PartialInner: i
  ReducedWord w;      // Inner: conjugator; Triangular: w
  ReducedWord gamma;  // Triangular only
  int sign = 1;

  static AutSymbol sigma(int i, int sign = 1);
  static AutSymbol pure_a(int i, int j, int sign = 1);
  static AutSymbol inner(const ReducedWord& w, int sign = 1);
  /// x_k -> x_i^-1 x_k x_i.
  static AutSymbol chi(int k, int i, int sign = 1);
  /// x_j -> x_i^-1 x_j x_i for j <= k.
  static AutSymbol partial_inner(int k, int i, int sign = 1);
  /// x_i -> w^-1 x_i w gamma, with w, gamma over x_1..x_{i-1} and gamma a commutator.
  static AutSymbol triangular(int i, const ReducedWord& w, const ReducedWord& gamma, int sign = 1);
  static AutSymbol c_j(int j, int sign = 1);

  [[nodiscard]] AutSymbol inverse() const;
  [[nodiscard]] std::string str() const;
  friend bool operator==(const AutSymbol&, const AutSymbol&) = default;
};

class AutWord {
 public:
  explicit AutWord(int rank) : rank_(rank) {}
  AutWord(int rank, std::vector<AutSymbol> symbols);
  /// Dot-separated symbols: `s1`, `s2^-1`, `A(1,3)`, `inn(x1 x2)`, `chi(3,1)`,
  /// `pin(3,1)`, `tri(3; x1; [x1,x2])`, `xi`, `C(2)`; any symbol may carry `^e`.
  static AutWord parse(int rank, std::string_view text);

  [[nodiscard]] int rank() const { return rank_; }
  [[nodiscard]] const std::vector<AutSymbol>& symbols() const { return symbols_; }
  [[nodiscard]] bool empty() const { return symbols_.empty(); }
  void push_back(AutSymbol s);
  [[nodiscard]] AutWord inverse() const;
  [[nodiscard]] std::string str() const;

  friend AutWord operator*(const AutWord& a, const AutWord& b);
  friend bool operator==(const AutWord&, const AutWord&) = default;

 private:
  int rank_;
  std::vector<AutSymbol> symbols_;
};

/// a b a^-1 b^-1 as a formal word.
AutWord aut_commutator(const AutWord& a, const AutWord& b);

EndoTable sigma_table(int i, int n);
EndoTable pure_a_table(int i, int j, int n);
EndoTable c_j_table(int j, int n);
EndoTable symbol_table(const AutSymbol& s, int n);
EndoTable evaluate(const AutWord& w);

ReducedWord boundary(int n);
AutWord xi_word(int n);

enum class Family { Inn, Pn, IAnPlus, PartialInner, FnPn };
Family parse_family(std::string_view name);
std::string family_name(Family f);
std::vector<AutWord> family_generators(Family f, int n);

/// Induced map on F_n / <<x_1...x_n>> = F_{n-1}, via x_n -> (x_1...x_{n-1})^-1.
EndoTable quotient_table(const EndoTable& e);
/// Extension of an automorphism of F_{n-1} to F_n fixing x_n.
EndoTable extend_table(const EndoTable& e);

/// Index of the pair (i, j), i < j, in lexicographic order.
std::size_t pair_index(int i, int j, int n);
/// Signed exponent sums of the A_ij in a word of PureA symbols.
std::vector<std::int64_t> braid_abelianize(const AutWord& w);

/// Each x_t goes to a conjugate of x_t and x_1...x_n is fixed.
bool is_braid_automorphism(const EndoTable& e);
/// Each x_i goes to a x_i b with a, b over x_1..x_{i-1} and ab a commutator.
bool is_triangular(const EndoTable& e);

}  // namespace lieforge

#endif  // LIEFORGE_BRAID_HPP
