#include "lieforge/free_group.hpp"

#include <cctype>
#include <stdexcept>

namespace lieforge {

namespace {

void check_rank(const ReducedWord& a, const ReducedWord& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("free group: rank mismatch");
}

class WordParser {
 public:
  WordParser(int rank, std::string_view text) : rank_(rank), text_(text) {}

  ReducedWord parse() {
    ReducedWord w = product({});
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return w;
  }

 private:
  ReducedWord product(std::string_view terminators) {
    ReducedWord acc = ReducedWord::identity(rank_);
    for (;;) {
      skip_space();
      if (pos_ == text_.size() || terminators.find(text_[pos_]) != std::string_view::npos) break;
      if (text_[pos_] == '*' || text_[pos_] == '.') {
        ++pos_;
        continue;
      }
      acc = word_mul(acc, factor());
    }
    return acc;
  }

  ReducedWord factor() {
    ReducedWord base = atom();
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      base = base.pow(integer());
    }
    return base;
  }

  ReducedWord atom() {
    const char c = text_[pos_];
    if (c == 'x' || c == 'X') {
      ++pos_;
      const auto g = integer();
      if (g < 1 || g > rank_) fail("generator index out of range");
      return ReducedWord::generator(rank_, static_cast<int>(g));
    }
    if (c == '1') {
      ++pos_;
      return ReducedWord::identity(rank_);
    }
    if (c == '(') {
      ++pos_;
      ReducedWord w = product(")");
      expect(')');
      return w;
    }
    if (c == '[') {
      ++pos_;
      ReducedWord a = product(",");
      expect(',');
      ReducedWord b = product("]");
      expect(']');
      return word_commutator(a, b);
    }
    fail("unexpected character");
  }

  std::int64_t integer() {
    skip_space();
    bool neg = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      neg = text_[pos_] == '-';
      ++pos_;
    }
    if (pos_ == text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("expected an integer");
    std::int64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      v = v * 10 + (text_[pos_++] - '0');
    return neg ? -v : v;
  }

  void expect(char c) {
    skip_space();
    if (pos_ == text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("cannot parse word '" + std::string(text_) + "' at position " +
                                std::to_string(pos_) + ": " + what);
  }

  int rank_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

ReducedWord::ReducedWord(int rank, std::span<const Syllable> syllables) : rank_(rank) {
  for (const auto& s : syllables) append(s);
}

ReducedWord ReducedWord::generator(int rank, int gen, std::int64_t exp) {
  ReducedWord w(rank);
  w.append({gen, exp});
  return w;
}

ReducedWord ReducedWord::parse(int rank, std::string_view text) { return WordParser(rank, text).parse(); }

void ReducedWord::append(Syllable s) {
  if (s.gen < 1 || s.gen > rank_) throw std::out_of_range("ReducedWord: generator out of range");
  if (s.exp == 0) return;
  if (!syl_.empty() && syl_.back().gen == s.gen) {
    syl_.back().exp += s.exp;
    if (syl_.back().exp == 0) syl_.pop_back();
    return;
  }
  syl_.push_back(s);
}

std::int64_t ReducedWord::length() const {
  std::int64_t n = 0;
  for (const auto& s : syl_) n += s.exp < 0 ? -s.exp : s.exp;
  return n;
}

std::vector<std::int64_t> ReducedWord::abelianization() const {
  std::vector<std::int64_t> v(static_cast<std::size_t>(rank_), 0);
  for (const auto& s : syl_) v[static_cast<std::size_t>(s.gen - 1)] += s.exp;
  return v;
}

int ReducedWord::max_generator() const {
  int m = 0;
  for (const auto& s : syl_) m = std::max(m, s.gen);
  return m;
}

ReducedWord ReducedWord::inverse() const {
  ReducedWord w(rank_);
  w.syl_.reserve(syl_.size());
  for (auto it = syl_.rbegin(); it != syl_.rend(); ++it) w.syl_.push_back({it->gen, -it->exp});
  return w;
}

ReducedWord ReducedWord::pow(std::int64_t e) const {
  if (e == 0 || is_identity()) return identity(rank_);
  if (syl_.size() == 1) return generator(rank_, syl_[0].gen, syl_[0].exp * e);
  const ReducedWord base = e > 0 ? *this : inverse();
  const std::int64_t k = e > 0 ? e : -e;
  ReducedWord acc = identity(rank_);
  ReducedWord sq = base;
  for (std::int64_t r = k; r > 0; r >>= 1) {
    if (r & 1) acc = word_mul(acc, sq);
    if (r > 1) sq = word_mul(sq, sq);
  }
  return acc;
}

ReducedWord ReducedWord::cyclic_reduction() const {
  std::size_t lo = 0;
  std::size_t hi = syl_.size();
  while (hi - lo >= 2 && syl_[lo].gen == syl_[hi - 1].gen && syl_[lo].exp == -syl_[hi - 1].exp) {
    ++lo;
    --hi;
  }
  ReducedWord w(rank_);
  if (hi - lo >= 2 && syl_[lo].gen == syl_[hi - 1].gen) {
    // Merge the two ends into a single run; the result stays cyclically reduced.
    w.append({syl_[lo].gen, syl_[lo].exp + syl_[hi - 1].exp});
    for (std::size_t i = lo + 1; i + 1 < hi; ++i) w.syl_.push_back(syl_[i]);
    return w;
  }
  for (std::size_t i = lo; i < hi; ++i) w.syl_.push_back(syl_[i]);
  return w;
}

bool ReducedWord::is_conjugate_to_generator(int gen) const {
  const ReducedWord c = cyclic_reduction();
  return c.syl_.size() == 1 && c.syl_[0].gen == gen && c.syl_[0].exp == 1;
}

std::string ReducedWord::str() const {
  if (syl_.empty()) return "1";
  std::string s;
  for (const auto& [g, e] : syl_) {
    if (!s.empty()) s += ' ';
    s += 'x' + std::to_string(g);
    if (e != 1) s += '^' + std::to_string(e);
  }
  return s;
}

ReducedWord word_mul(const ReducedWord& a, const ReducedWord& b) {
  check_rank(a, b);
  ReducedWord out = a;
  for (const auto& s : b.syllables()) out.append(s);
  return out;
}

ReducedWord operator*(const ReducedWord& a, const ReducedWord& b) { return word_mul(a, b); }

ReducedWord word_commutator(const ReducedWord& a, const ReducedWord& b) {
  check_rank(a, b);
  return a * b * a.inverse() * b.inverse();
}

ReducedWord word_conjugate(const ReducedWord& g, const ReducedWord& x) {
  check_rank(g, x);
  return g * x * g.inverse();
}

// ---------------------------------------------------------------------------

EndoTable::EndoTable(std::vector<ReducedWord> images) : images_(std::move(images)) {
  const int n = rank();
  for (const auto& w : images_)
    if (w.rank() != n) throw std::invalid_argument("EndoTable: image rank differs from table rank");
}

EndoTable EndoTable::identity(int rank) {
  std::vector<ReducedWord> im;
  for (int i = 1; i <= rank; ++i) im.push_back(ReducedWord::generator(rank, i));
  return EndoTable(std::move(im));
}

EndoTable EndoTable::inner(const ReducedWord& w) {
  std::vector<ReducedWord> im;
  for (int i = 1; i <= w.rank(); ++i) im.push_back(word_conjugate(w, ReducedWord::generator(w.rank(), i)));
  return EndoTable(std::move(im));
}

std::string EndoTable::str() const {
  std::string s;
  for (int i = 1; i <= rank(); ++i) {
    if (i > 1) s += ", ";
    s += "x" + std::to_string(i) + " -> " + image(i).str();
  }
  return s;
}

ReducedWord substitute(const ReducedWord& w, std::span<const ReducedWord> images) {
  if (static_cast<int>(images.size()) != w.rank()) throw std::invalid_argument("substitute: need one image per generator");
  if (images.empty()) return w;
  ReducedWord out = ReducedWord::identity(images.front().rank());
  for (const auto& [g, x] : w.syllables()) {
    const ReducedWord& img = images[static_cast<std::size_t>(g - 1)];
    if (img.rank() != out.rank()) throw std::invalid_argument("substitute: images have different ranks");
    if (x == 1) {
      for (const auto& s : img.syllables()) out.append(s);
    } else if (x == -1) {
      const auto& syl = img.syllables();
      for (auto it = syl.rbegin(); it != syl.rend(); ++it) out.append({it->gen, -it->exp});
    } else {
      const ReducedWord p = img.pow(x);
      for (const auto& s : p.syllables()) out.append(s);
    }
  }
  return out;
}

ReducedWord endo_apply(const EndoTable& e, const ReducedWord& w) {
  if (e.rank() != w.rank()) throw std::invalid_argument("endo_apply: rank mismatch");
  return substitute(w, e.images());
}

ReducedWord change_rank(const ReducedWord& w, int rank) {
  if (w.max_generator() > rank) throw std::out_of_range("change_rank: word uses a generator beyond the new rank");
  return ReducedWord(rank, w.syllables());
}

EndoTable endo_compose(const EndoTable& f, const EndoTable& g) {
  if (f.rank() != g.rank()) throw std::invalid_argument("endo_compose: rank mismatch");
  std::vector<ReducedWord> im;
  im.reserve(static_cast<std::size_t>(g.rank()));
  for (const auto& w : g.images()) im.push_back(endo_apply(f, w));
  return EndoTable(std::move(im));
}

bool endo_equal(const EndoTable& f, const EndoTable& g) {
  if (f.rank() != g.rank()) throw std::invalid_argument("endo_equal: rank mismatch");
  return f.images() == g.images();
}

}  // namespace lieforge
