#ifndef LIEFORGE_MAGNUS_HPP
#define LIEFORGE_MAGNUS_HPP

// Truncated Magnus expansion x_i -> 1 + X_i into Z<<X_1..X_n>>, and the
// lower central series / Andreadakis degrees it decides.

#include "lieforge/derivation.hpp"
#include "lieforge/free_group.hpp"
#include "lieforge/free_lie.hpp"

#include <string>
#include <vector>

namespace lieforge {

/// Noncommutative power series truncated above degree D. Degree-d
/// coefficients are stored densely, indexed by the word read in base n.
class TruncSeries {
 public:
  TruncSeries(int rank, int max_degree);
  static TruncSeries one(int rank, int max_degree);

  [[nodiscard]] int rank() const { return n_; }
  [[nodiscard]] int max_degree() const { return D_; }
  [[nodiscard]] BigInt coeff(const Word& w) const;
  void set(const Word& w, BigInt c);
  [[nodiscard]] const std::vector<BigInt>& degree_coeffs(int d) const { return coeffs_.at(static_cast<std::size_t>(d)); }
  std::vector<BigInt>& degree_coeffs(int d) { return coeffs_.at(static_cast<std::size_t>(d)); }
  /// Homogeneous component of degree d as a tensor.
  [[nodiscard]] NCPolynomial degree_part(int d) const;
  /// Smallest d >= 1 with a nonzero coefficient, or 0 if there is none.
  [[nodiscard]] int lowest_positive_degree() const;
  /// Number of stored nonzero coefficients.
  [[nodiscard]] std::size_t nnz() const;

  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
  friend bool operator==(const TruncSeries&, const TruncSeries&) = default;

  [[nodiscard]] std::string str() const;

 private:
  int n_;
  int D_;
  std::vector<std::vector<BigInt>> coeffs_;
};

TruncSeries magnus_expand(const ReducedWord& w, int max_degree);

/// A filtration degree with an explicit "beyond the cutoff" value.
struct FiltrationDegree {
  int value = 0;              // meaningful when finite
  bool above_cutoff = false;  // no nonzero term up to the cutoff
  bool identity = false;      // the input was the identity itself

  static FiltrationDegree finite(int d) { return {d, false, false}; }
  static FiltrationDegree above(bool is_identity) { return {0, true, is_identity}; }
  [[nodiscard]] bool is_finite() const { return !above_cutoff; }
  [[nodiscard]] std::string str(int cutoff) const;
  friend bool operator==(const FiltrationDegree&, const FiltrationDegree&) = default;
};

/// Largest d <= D with w in Gamma_d(F_n), decided by the lowest degree of mu(w) - 1.
FiltrationDegree gamma_degree(const ReducedWord& w, int max_degree);
/// Class of w in Gamma_d / Gamma_{d+1} as a Lie element; throws if w lies
/// beyond the cutoff.
LieElement lie_class(const ReducedWord& w, int max_degree);

/// Largest j <= D-1 with e(x_i) x_i^-1 in Gamma_{j+1} for every i. Throws if e
/// is not the identity on the abelianization.
FiltrationDegree a_degree(const EndoTable& e, int max_degree);
/// Degree-j derivation X_i -> class of e(x_i) x_i^-1, with j = a_degree(e, D).
HomDerivation johnson_image(const EndoTable& e, int max_degree);
/// The degree-k component of the Johnson image: zero when e lies deeper than
/// k, and an error when it is shallower.
HomDerivation johnson_component(const EndoTable& e, int k);

/// An endomorphism modulo Gamma_{D+1}(F_n), held as the degree-D Magnus
/// expansions of the images of x_1..x_n. Composition substitutes series, so
/// iterated commutators keep a bounded size while their reduced words do not.
class TruncatedEndo {
 public:
  TruncatedEndo(const EndoTable& e, int max_degree);
  static TruncatedEndo identity(int rank, int max_degree);

  [[nodiscard]] int rank() const { return static_cast<int>(images_.size()); }
  [[nodiscard]] int max_degree() const { return images_.front().max_degree(); }
  [[nodiscard]] const TruncSeries& image(int gen) const { return images_.at(static_cast<std::size_t>(gen - 1)); }
  /// mu(e(x_i) x_i^-1).
  [[nodiscard]] TruncSeries displacement(int gen) const;

  /// f o g: apply g first, then f.
  friend TruncatedEndo compose(const TruncatedEndo& f, const TruncatedEndo& g);
  friend bool operator==(const TruncatedEndo&, const TruncatedEndo&) = default;

 private:
  explicit TruncatedEndo(std::vector<TruncSeries> images) : images_(std::move(images)) {}
  std::vector<TruncSeries> images_;
};

/// Same as a_degree(e, D) for the table that e truncates, except that the
/// identity flag stays unset: the truncation cannot tell.
FiltrationDegree a_degree(const TruncatedEndo& e);
/// Requires k + 1 <= D.
HomDerivation johnson_component(const TruncatedEndo& e, int k);

}  // namespace lieforge

#endif  // LIEFORGE_MAGNUS_HPP
