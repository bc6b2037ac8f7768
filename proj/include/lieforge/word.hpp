#ifndef LIEFORGE_WORD_HPP
#define LIEFORGE_WORD_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace lieforge {

/// A word over the letters 1..15 of length at most 15, packed into 64 bits.
/// Noncommutative monomials and Lyndon words are both Words.
///
/// The packed order (operator<=>) is graded: shorter words first, then
/// lexicographic. `lex_less` is the plain lexicographic order used by the
/// Lyndon machinery, in which a proper prefix precedes its extensions.
class Word {
 public:
  static constexpr int kMaxLength = 15;
  static constexpr int kMaxLetter = 15;

  constexpr Word() = default;
  Word(std::initializer_list<int> letters) {
    for (int l : letters) push_back(l);
  }
  explicit Word(const std::vector<int>& letters) {
    for (int l : letters) push_back(l);
  }
  static Word letter(int l) {
    Word w;
    w.push_back(l);
    return w;
  }

  [[nodiscard]] int size() const { return static_cast<int>(bits_ >> 60); }
  [[nodiscard]] bool empty() const { return size() == 0; }
  [[nodiscard]] int operator[](int i) const {
    return static_cast<int>((bits_ >> (56 - 4 * i)) & 0xF) + 1;
  }

  void push_back(int l) {
    const int n = size();
    if (n >= kMaxLength) throw std::length_error("Word: length limit exceeded");
    if (l < 1 || l > kMaxLetter) throw std::out_of_range("Word: letter out of range");
    bits_ |= static_cast<std::uint64_t>(l - 1) << (56 - 4 * n);
    bits_ = (bits_ & ~(std::uint64_t{0xF} << 60)) | (static_cast<std::uint64_t>(n + 1) << 60);
  }

  [[nodiscard]] Word substr(int pos, int len) const {
    Word w;
    for (int i = 0; i < len; ++i) w.push_back((*this)[pos + i]);
    return w;
  }
  [[nodiscard]] Word concat(const Word& other) const {
    Word w = *this;
    for (int i = 0; i < other.size(); ++i) w.push_back(other[i]);
    return w;
  }
  [[nodiscard]] std::vector<int> letters() const {
    std::vector<int> out(static_cast<std::size_t>(size()));
    for (int i = 0; i < size(); ++i) out[static_cast<std::size_t>(i)] = (*this)[i];
    return out;
  }
  [[nodiscard]] int max_letter() const {
    int m = 0;
    for (int i = 0; i < size(); ++i) m = std::max(m, (*this)[i]);
    return m;
  }

  [[nodiscard]] std::uint64_t bits() const { return bits_; }

  friend constexpr auto operator<=>(const Word&, const Word&) = default;

  /// Digits for alphabets of size <= 9 ("1123"), comma separated otherwise.
  [[nodiscard]] std::string str() const {
    std::string s;
    const bool wide = max_letter() > 9;
    for (int i = 0; i < size(); ++i) {
      if (wide && i) s += ',';
      s += std::to_string((*this)[i]);
    }
    return s;
  }

 private:
  std::uint64_t bits_ = 0;
};

inline bool lex_less(const Word& a, const Word& b) {
  const int n = std::min(a.size(), b.size());
  for (int i = 0; i < n; ++i)
    if (a[i] != b[i]) return a[i] < b[i];
  return a.size() < b.size();
}

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    std::uint64_t x = w.bits() + 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return static_cast<std::size_t>(x ^ (x >> 31));
  }
};

}  // namespace lieforge

#endif  // LIEFORGE_WORD_HPP
