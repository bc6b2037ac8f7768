#ifndef LIEFORGE_FREE_LIE_HPP
#define LIEFORGE_FREE_LIE_HPP

// The free Lie ring L_n over Z in the Lyndon basis, and its embedding into
// the tensor algebra T(Z^n).

#include "lieforge/bigint.hpp"
#include "lieforge/word.hpp"
#include "lieforge/zlattice.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

namespace lieforge {

/// Rank of the degree-k component of the free Lie ring on n generators
/// (Moebius inversion over the divisors of k).
std::int64_t witt_rank(int n, int k);
int moebius(int k);

bool is_lyndon(const Word& w);
/// (u, v) with w = uv and v the longest proper Lyndon suffix. Requires |w| >= 2.
std::pair<Word, Word> standard_factorization(const Word& w);
/// All Lyndon words of length exactly k over 1..n, in lexicographic order (Duval).
std::vector<Word> lyndon_words(int n, int k);

/// Basis of L_n in degree k: Lyndon words with their standard bracketings.
class LyndonIndex {
 public:
  LyndonIndex(int n, int k);

  [[nodiscard]] int rank_n() const { return n_; }
  [[nodiscard]] int degree() const { return k_; }
  [[nodiscard]] std::size_t size() const { return words_.size(); }
  [[nodiscard]] const std::vector<Word>& words() const { return words_; }
  [[nodiscard]] const Word& word(std::size_t pos) const { return words_[pos]; }
  [[nodiscard]] std::optional<std::size_t> position(const Word& w) const;

 private:
  int n_;
  int k_;
  std::vector<Word> words_;
  std::unordered_map<Word, std::size_t, WordHash> pos_;
};

/// Shared, lazily built basis index.
const LyndonIndex& lyndon_index(int n, int k);

/// Element of the tensor algebra: a finite Z-combination of words.
class NCPolynomial {
 public:
  using Terms = std::map<Word, BigInt>;

  NCPolynomial() = default;
  static NCPolynomial monomial(const Word& w, BigInt c = 1);

  void add(const Word& w, const BigInt& c);
  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] BigInt coeff(const Word& w) const;
  [[nodiscard]] NCPolynomial homogeneous_part(int k) const;

  NCPolynomial& operator+=(const NCPolynomial& o);
  NCPolynomial& operator-=(const NCPolynomial& o);
  friend NCPolynomial operator+(NCPolynomial a, const NCPolynomial& b) { return a += b; }
  friend NCPolynomial operator-(NCPolynomial a, const NCPolynomial& b) { return a -= b; }
  friend NCPolynomial operator*(const BigInt& s, const NCPolynomial& a);
  friend NCPolynomial operator*(const NCPolynomial& a, const NCPolynomial& b);
  friend bool operator==(const NCPolynomial&, const NCPolynomial&) = default;

 private:
  Terms terms_;
};

/// ab - ba in the tensor algebra.
NCPolynomial commutator(const NCPolynomial& a, const NCPolynomial& b);

/// Element of L_n: a Z-combination of Lyndon basis brackets, possibly
/// spread over several degrees.
class LieElement {
 public:
  using Terms = std::map<Word, BigInt>;

  explicit LieElement(int rank = 1) : rank_(rank) {}
  static LieElement generator(int rank, int i);
  /// The standard bracketing of a Lyndon word.
  static LieElement basis(int rank, const Word& lyndon);

  [[nodiscard]] int rank() const { return rank_; }
  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] BigInt coeff(const Word& w) const;
  [[nodiscard]] bool is_homogeneous() const;
  /// Degree of a nonzero homogeneous element; 0 for the zero element.
  [[nodiscard]] int degree() const;
  [[nodiscard]] LieElement homogeneous_part(int k) const;

  void add(const Word& lyndon, const BigInt& c);
  LieElement& operator+=(const LieElement& o);
  LieElement& operator-=(const LieElement& o);
  LieElement operator-() const;
  friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
  friend LieElement operator-(LieElement a, const LieElement& b) { return a -= b; }
  friend LieElement operator*(const BigInt& s, const LieElement& a);
  friend bool operator==(const LieElement&, const LieElement&) = default;

  [[nodiscard]] std::string str() const;

 private:
  int rank_;
  Terms terms_;
};

/// Bracket of two elements, normalized to the Lyndon basis by rewriting.
LieElement lie_bracket(const LieElement& a, const LieElement& b);
/// Bracket of two Lyndon basis elements (memoized). The returned element is
/// tagged with the smallest rank containing both words.
const LieElement& bracket_basis(const Word& u, const Word& v);

/// Expansion into the tensor algebra (the enveloping ring of L_n).
NCPolynomial to_tensor(const LieElement& a);
const NCPolynomial& basis_tensor(const Word& lyndon);
/// Inverse of to_tensor on its image; throws std::invalid_argument when the
/// polynomial is not a Lie element.
LieElement from_tensor(int rank, const NCPolynomial& p);

/// Coordinates of the degree-k part in the Lyndon basis of degree k.
SparseIntVector lie_coordinates(const LieElement& a, int k);
LieElement lie_from_coordinates(int rank, int k, const SparseIntVector& v);
LieElement lie_from_coordinates(int rank, int k, const IntVector& v);

/// Multidegree of a word in N^n.
std::vector<int> multidegree(const Word& w, int n);

/// {z in L_n(k) : [x, z] = 0} for a nonzero degree-1 element x, as a lattice
/// in Lyndon coordinates of degree k.
IntLattice centralizer_of_linear(const LieElement& x, int k);

/// X_1 + ... + X_n.
LieElement boundary_element(int n);

}  // namespace lieforge

#endif  // LIEFORGE_FREE_LIE_HPP
