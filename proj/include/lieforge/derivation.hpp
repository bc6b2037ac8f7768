#ifndef LIEFORGE_DERIVATION_HPP
#define LIEFORGE_DERIVATION_HPP

// Homogeneous derivations of the free Lie ring, tangential and braid-like
// sublattices, and the boundary evaluation d -> d(X_1 + ... + X_n).

#include "lieforge/free_lie.hpp"
#include "lieforge/zlattice.hpp"

#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace lieforge {

/// Derivation of L_n raising degree by k, stored by the images of X_1..X_n
/// (each homogeneous of degree k+1, or zero).
class HomDerivation {
 public:
  HomDerivation(int rank, int degree);
  HomDerivation(int degree, std::vector<LieElement> images);
  /// X_i -> [X_i, t_i].
  static HomDerivation tangential(int degree, const std::vector<LieElement>& t);

  [[nodiscard]] int rank() const { return static_cast<int>(images_.size()); }
  [[nodiscard]] int degree() const { return degree_; }
  [[nodiscard]] const std::vector<LieElement>& images() const { return images_; }
  [[nodiscard]] const LieElement& image(int i) const { return images_.at(static_cast<std::size_t>(i - 1)); }
  void set_image(int i, LieElement x);
  [[nodiscard]] bool is_zero() const;

  HomDerivation& operator+=(const HomDerivation& o);
  HomDerivation& operator-=(const HomDerivation& o);
  friend HomDerivation operator+(HomDerivation a, const HomDerivation& b) { return a += b; }
  friend HomDerivation operator-(HomDerivation a, const HomDerivation& b) { return a -= b; }
  friend HomDerivation operator*(const BigInt& s, const HomDerivation& d);
  friend bool operator==(const HomDerivation&, const HomDerivation&) = default;

  [[nodiscard]] std::string str() const;

 private:
  int degree_;
  std::vector<LieElement> images_;
};

/// Leibniz extension of a derivation to all of L_n, memoized per basis word.
/// Not thread-safe; use one instance per thread.
class DerivationAction {
 public:
  explicit DerivationAction(const HomDerivation& d) : d_(d) {}
  LieElement operator()(const LieElement& a);
  const LieElement& on_basis(const Word& lyndon);

 private:
  const HomDerivation& d_;
  std::unordered_map<Word, LieElement, WordHash> memo_;
};

LieElement apply_derivation(const HomDerivation& d, const LieElement& a);
/// X_i -> d1(d2(X_i)) - d2(d1(X_i)).
HomDerivation der_bracket(const HomDerivation& d1, const HomDerivation& d2);
/// d(X_1) + ... + d(X_n).
LieElement ev_boundary(const HomDerivation& d);
/// X_i -> [x, X_i] for homogeneous x.
HomDerivation ad_derivation(const LieElement& x);

/// Coordinates of a degree-k derivation: the Lyndon coordinates of d(X_1),
/// ..., d(X_n) in degree k+1, concatenated. Ambient size n * d(n, k+1).
std::size_t derivation_dim(int n, int k);
SparseIntVector derivation_coordinates(const HomDerivation& d);
HomDerivation derivation_from_coordinates(int n, int k, const SparseIntVector& v);

/// Basis of tangential derivations of degree k. Coordinate (i, u) is the
/// derivation X_i -> [X_i, P_u]. For k >= 2, u runs over the Lyndon words of
/// length k; for k = 1, over the letters j != i (X_i itself is in the kernel).
struct TangentialBasis {
  int n = 0;
  int k = 0;
  std::vector<std::pair<int, Word>> coords;

  [[nodiscard]] std::size_t size() const { return coords.size(); }
  [[nodiscard]] HomDerivation derivation(std::size_t c) const;
  [[nodiscard]] std::vector<HomDerivation> derivations() const;
  /// Derivation with the given tangential coordinates.
  [[nodiscard]] HomDerivation combine(const SparseIntVector& v) const;
};

TangentialBasis tangential_basis(int n, int k);

/// Braid-like derivations of degree k (tangential and killing X_1+...+X_n),
/// as a saturated lattice in tangential coordinates.
IntLattice braidlike_lattice(int n, int k);
/// The same lattice transported into derivation coordinates.
IntLattice braidlike_image_lattice(int n, int k);
/// Image of the boundary evaluation on degree-k tangential derivations, in
/// Lyndon coordinates of degree k+1.
IntLattice ev_boundary_image(int n, int k);
/// ad(L_n(k)) in derivation coordinates.
IntLattice ad_lattice(int n, int k);
/// {x in L_n(k) : ad(x) is braid-like}, in Lyndon coordinates of degree k.
IntLattice inner_cap_braidlike(int n, int k);

}  // namespace lieforge

#endif  // LIEFORGE_DERIVATION_HPP
