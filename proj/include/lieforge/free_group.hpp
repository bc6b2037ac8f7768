#ifndef LIEFORGE_FREE_GROUP_HPP
#define LIEFORGE_FREE_GROUP_HPP

// Freely reduced words in F_n and endomorphisms given by generator images.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lieforge {

/// One run x_gen^exp of a reduced word; gen is 1-based, exp is nonzero.
struct Syllable {
  int gen = 1;
  std::int64_t exp = 1;
  friend bool operator==(const Syllable&, const Syllable&) = default;
};

/// Freely reduced word in F_n, stored in run-length form. Adjacent
/// syllables have distinct generators; the empty sequence is the identity.
class ReducedWord {
 public:
  explicit ReducedWord(int rank = 1) : rank_(rank) {}
  ReducedWord(int rank, std::span<const Syllable> syllables);

  static ReducedWord identity(int rank) { return ReducedWord(rank); }
  static ReducedWord generator(int rank, int gen, std::int64_t exp = 1);
  /// Parses `x1 x2^-1 x1^3`, `1`, and nested commutators such as `[x1, [x2, x1]]`.
  static ReducedWord parse(int rank, std::string_view text);

  [[nodiscard]] int rank() const { return rank_; }
  [[nodiscard]] const std::vector<Syllable>& syllables() const { return syl_; }
  [[nodiscard]] bool is_identity() const { return syl_.empty(); }
  /// Number of letters counted with multiplicity.
  [[nodiscard]] std::int64_t length() const;
  /// Exponent sum of each generator (the image in F_n^ab).
  [[nodiscard]] std::vector<std::int64_t> abelianization() const;
  [[nodiscard]] int max_generator() const;

  [[nodiscard]] ReducedWord inverse() const;
  [[nodiscard]] ReducedWord pow(std::int64_t e) const;
  /// Cyclically reduced representative of the conjugacy class.
  [[nodiscard]] ReducedWord cyclic_reduction() const;
  [[nodiscard]] bool is_conjugate_to_generator(int gen) const;

  /// Appends one syllable with free reduction.
  void append(Syllable s);

  [[nodiscard]] std::string str() const;

  friend bool operator==(const ReducedWord&, const ReducedWord&) = default;

 private:
  int rank_;
  std::vector<Syllable> syl_;
};

ReducedWord word_mul(const ReducedWord& a, const ReducedWord& b);
/// [a, b] = a b a^-1 b^-1.
ReducedWord word_commutator(const ReducedWord& a, const ReducedWord& b);
/// g x g^-1.
ReducedWord word_conjugate(const ReducedWord& g, const ReducedWord& x);
ReducedWord operator*(const ReducedWord& a, const ReducedWord& b);

/// Endomorphism of F_n given by the images of x_1..x_n.
class EndoTable {
 public:
  explicit EndoTable(std::vector<ReducedWord> images);
  static EndoTable identity(int rank);
  /// c_w : x -> w x w^-1.
  static EndoTable inner(const ReducedWord& w);

  [[nodiscard]] int rank() const { return static_cast<int>(images_.size()); }
  [[nodiscard]] const std::vector<ReducedWord>& images() const { return images_; }
  [[nodiscard]] const ReducedWord& image(int gen) const { return images_.at(static_cast<std::size_t>(gen - 1)); }

  [[nodiscard]] std::string str() const;

  friend bool operator==(const EndoTable&, const EndoTable&) = default;

 private:
  std::vector<ReducedWord> images_;
};

/// Image of w under the homomorphism x_i -> images[i-1] (any target rank).
ReducedWord substitute(const ReducedWord& w, std::span<const ReducedWord> images);
/// The same letters viewed in F_rank.
ReducedWord change_rank(const ReducedWord& w, int rank);
ReducedWord endo_apply(const EndoTable& e, const ReducedWord& w);
/// f o g: apply g first, then f.
EndoTable endo_compose(const EndoTable& f, const EndoTable& g);
bool endo_equal(const EndoTable& f, const EndoTable& g);

}  // namespace lieforge

#endif  // LIEFORGE_FREE_GROUP_HPP
