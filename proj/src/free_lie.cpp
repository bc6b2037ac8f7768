#include "lieforge/free_lie.hpp"

#include <memory>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

namespace lieforge {

int moebius(int k) {
  if (k < 1) throw std::invalid_argument("moebius: argument must be positive");
  int result = 1;
  for (int p = 2; p * p <= k; ++p) {
    if (k % p) continue;
    k /= p;
    if (k % p == 0) return 0;
    result = -result;
  }
  if (k > 1) result = -result;
  return result;
}

std::int64_t witt_rank(int n, int k) {
  if (n < 1 || k < 1) throw std::invalid_argument("witt_rank: n and k must be positive");
  std::int64_t sum = 0;
  for (int s = 1; s <= k; ++s) {
    if (k % s) continue;
    const int mu = moebius(s);
    if (mu == 0) continue;
    std::int64_t p = 1;
    for (int t = 0; t < k / s; ++t) p *= n;
    sum += mu * p;
  }
  return sum / k;
}

bool is_lyndon(const Word& w) {
  if (w.empty()) return false;
  for (int i = 1; i < w.size(); ++i)
    if (!lex_less(w, w.substr(i, w.size() - i))) return false;
  return true;
}

std::pair<Word, Word> standard_factorization(const Word& w) {
  if (w.size() < 2) throw std::invalid_argument("standard_factorization: word too short");
  for (int i = 1; i < w.size(); ++i) {
    Word suffix = w.substr(i, w.size() - i);
    if (is_lyndon(suffix)) return {w.substr(0, i), suffix};
  }
  throw std::logic_error("standard_factorization: no Lyndon suffix");
}

std::vector<Word> lyndon_words(int n, int k) {
  if (n < 1 || k < 1) return {};
  if (n > Word::kMaxLetter || k > Word::kMaxLength)
    throw std::out_of_range("lyndon_words: alphabet or length beyond Word limits");
  std::vector<Word> out;
  std::vector<int> w{1};
  while (!w.empty()) {
    if (static_cast<int>(w.size()) == k) out.emplace_back(w);
    const std::size_t m = w.size();
    while (static_cast<int>(w.size()) < k) w.push_back(w[w.size() - m]);
    while (!w.empty() && w.back() == n) w.pop_back();
    if (!w.empty()) ++w.back();
  }
  return out;
}

LyndonIndex::LyndonIndex(int n, int k) : n_(n), k_(k), words_(lyndon_words(n, k)) {
  for (std::size_t i = 0; i < words_.size(); ++i) pos_.emplace(words_[i], i);
}

std::optional<std::size_t> LyndonIndex::position(const Word& w) const {
  auto it = pos_.find(w);
  if (it == pos_.end()) return std::nullopt;
  return it->second;
}

const LyndonIndex& lyndon_index(int n, int k) {
  static std::shared_mutex mutex;
  static std::map<std::pair<int, int>, std::unique_ptr<LyndonIndex>> cache;
  {
    std::shared_lock lock(mutex);
    auto it = cache.find({n, k});
    if (it != cache.end()) return *it->second;
  }
  auto built = std::make_unique<LyndonIndex>(n, k);
  std::unique_lock lock(mutex);
  auto [it, inserted] = cache.emplace(std::pair{n, k}, std::move(built));
  return *it->second;
}

// ---------------------------------------------------------------------------

NCPolynomial NCPolynomial::monomial(const Word& w, BigInt c) {
  NCPolynomial p;
  p.add(w, c);
  return p;
}

void NCPolynomial::add(const Word& w, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BigInt NCPolynomial::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? BigInt(0) : it->second;
}

NCPolynomial NCPolynomial::homogeneous_part(int k) const {
  NCPolynomial p;
  for (const auto& [w, c] : terms_)
    if (w.size() == k) p.terms_.emplace(w, c);
  return p;
}

NCPolynomial& NCPolynomial::operator+=(const NCPolynomial& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

NCPolynomial& NCPolynomial::operator-=(const NCPolynomial& o) {
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

NCPolynomial operator*(const BigInt& s, const NCPolynomial& a) {
  NCPolynomial p;
  if (s == 0) return p;
  for (const auto& [w, c] : a.terms_) p.terms_.emplace(w, s * c);
  return p;
}

NCPolynomial operator*(const NCPolynomial& a, const NCPolynomial& b) {
  NCPolynomial p;
  for (const auto& [u, c] : a.terms_)
    for (const auto& [v, d] : b.terms_) p.add(u.concat(v), c * d);
  return p;
}

NCPolynomial commutator(const NCPolynomial& a, const NCPolynomial& b) { return a * b - b * a; }

// ---------------------------------------------------------------------------

LieElement LieElement::generator(int rank, int i) {
  if (i < 1 || i > rank) throw std::out_of_range("LieElement::generator: index out of range");
  LieElement x(rank);
  x.add(Word::letter(i), 1);
  return x;
}

LieElement LieElement::basis(int rank, const Word& lyndon) {
  if (!is_lyndon(lyndon)) throw std::invalid_argument("LieElement::basis: not a Lyndon word");
  if (lyndon.max_letter() > rank) throw std::out_of_range("LieElement::basis: letter beyond rank");
  LieElement x(rank);
  x.add(lyndon, 1);
  return x;
}

BigInt LieElement::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? BigInt(0) : it->second;
}

bool LieElement::is_homogeneous() const {
  return terms_.empty() || terms_.begin()->first.size() == terms_.rbegin()->first.size();
}

int LieElement::degree() const {
  if (terms_.empty()) return 0;
  if (!is_homogeneous()) throw std::logic_error("LieElement::degree: element is not homogeneous");
  return terms_.begin()->first.size();
}

LieElement LieElement::homogeneous_part(int k) const {
  LieElement x(rank_);
  for (const auto& [w, c] : terms_)
    if (w.size() == k) x.terms_.emplace(w, c);
  return x;
}

void LieElement::add(const Word& lyndon, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(lyndon, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LieElement& LieElement::operator+=(const LieElement& o) {
  if (o.rank_ != rank_) throw std::invalid_argument("LieElement: rank mismatch");
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

LieElement& LieElement::operator-=(const LieElement& o) {
  if (o.rank_ != rank_) throw std::invalid_argument("LieElement: rank mismatch");
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

LieElement LieElement::operator-() const {
  LieElement x(rank_);
  for (const auto& [w, c] : terms_) x.terms_.emplace(w, -c);
  return x;
}

LieElement operator*(const BigInt& s, const LieElement& a) {
  LieElement x(a.rank_);
  if (s == 0) return x;
  for (const auto& [w, c] : a.terms_) x.terms_.emplace(w, s * c);
  return x;
}

std::string LieElement::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [w, c] : terms_) {
    if (!s.empty()) s += c < 0 ? " - " : " + ";
    else if (c < 0) s += "-";
    const BigInt a = c < 0 ? BigInt(-c) : c;
    if (a != 1) s += a.str() + "*";
    s += "P" + w.str();
  }
  return s;
}

// ---------------------------------------------------------------------------

namespace {

struct WordPairHash {
  std::size_t operator()(const std::pair<Word, Word>& p) const noexcept {
    return WordHash{}(p.first) * 31 + WordHash{}(p.second);
  }
};

class BracketCache {
 public:
  const LieElement* find(const std::pair<Word, Word>& key) {
    std::shared_lock lock(mutex_);
    auto it = map_.find(key);
    return it == map_.end() ? nullptr : &it->second;
  }
  const LieElement& insert(const std::pair<Word, Word>& key, LieElement value) {
    std::unique_lock lock(mutex_);
    return map_.try_emplace(key, std::move(value)).first->second;
  }

 private:
  std::shared_mutex mutex_;
  std::unordered_map<std::pair<Word, Word>, LieElement, WordPairHash> map_;
};

BracketCache& bracket_cache() {
  static BracketCache cache;
  return cache;
}

// [P_w, x] for a Lyndon word w and an arbitrary element x.
LieElement bracket_word_element(int rank, const Word& w, const LieElement& x) {
  LieElement out(rank);
  for (const auto& [v, c] : x.terms()) {
    const LieElement& b = bracket_basis(w, v);
    for (const auto& [t, d] : b.terms()) out.add(t, c * d);
  }
  return out;
}

LieElement compute_bracket_basis(int rank, const Word& u, const Word& v) {
  LieElement out(rank);
  if (u == v) return out;
  if (lex_less(v, u)) return -bracket_basis(v, u);
  if (u.size() == 1 || !lex_less(standard_factorization(u).second, v)) {
    out.add(u.concat(v), 1);
    return out;
  }
  // u = (u1 u2) with u2 < v:  [[u1,u2],v] = [u1,[u2,v]] - [u2,[u1,v]].
  const auto [u1, u2] = standard_factorization(u);
  out += bracket_word_element(rank, u1, bracket_basis(u2, v));
  out -= bracket_word_element(rank, u2, bracket_basis(u1, v));
  return out;
}

}  // namespace

const LieElement& bracket_basis(const Word& u, const Word& v) {
  const auto key = std::pair{u, v};
  if (const LieElement* hit = bracket_cache().find(key)) return *hit;
  return bracket_cache().insert(key, compute_bracket_basis(std::max(u.max_letter(), v.max_letter()), u, v));
}

LieElement lie_bracket(const LieElement& a, const LieElement& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("lie_bracket: rank mismatch");
  LieElement out(a.rank());
  for (const auto& [u, c] : a.terms())
    for (const auto& [v, d] : b.terms()) {
      const LieElement& uv = bracket_basis(u, v);
      const BigInt cd = c * d;
      for (const auto& [w, e] : uv.terms()) out.add(w, cd * e);
    }
  return out;
}

// ---------------------------------------------------------------------------

const NCPolynomial& basis_tensor(const Word& lyndon) {
  static std::shared_mutex mutex;
  static std::unordered_map<Word, NCPolynomial, WordHash> cache;
  {
    std::shared_lock lock(mutex);
    auto it = cache.find(lyndon);
    if (it != cache.end()) return it->second;
  }
  NCPolynomial p;
  if (lyndon.size() == 1) {
    p = NCPolynomial::monomial(lyndon);
  } else {
    const auto [u, v] = standard_factorization(lyndon);
    p = commutator(basis_tensor(u), basis_tensor(v));
  }
  std::unique_lock lock(mutex);
  return cache.try_emplace(lyndon, std::move(p)).first->second;
}

NCPolynomial to_tensor(const LieElement& a) {
  NCPolynomial p;
  for (const auto& [w, c] : a.terms()) p += c * basis_tensor(w);
  return p;
}

LieElement from_tensor(int rank, const NCPolynomial& p) {
  // The expansion of a Lyndon bracket P_w is w plus lexicographically larger
  // words, so the smallest surviving monomial names the next basis element.
  LieElement out(rank);
  NCPolynomial rest = p;
  while (!rest.is_zero()) {
    const auto& [w, c] = *rest.terms().begin();
    if (!is_lyndon(w) || w.max_letter() > rank)
      throw std::invalid_argument("from_tensor: polynomial is not a Lie element (stuck at monomial " +
                                  w.str() + ")");
    const Word lead = w;
    const BigInt coeff = c;
    out.add(lead, coeff);
    rest -= coeff * basis_tensor(lead);
  }
  return out;
}

// ---------------------------------------------------------------------------

SparseIntVector lie_coordinates(const LieElement& a, int k) {
  const LyndonIndex& idx = lyndon_index(a.rank(), k);
  std::vector<std::pair<std::size_t, BigInt>> entries;
  for (const auto& [w, c] : a.terms()) {
    if (w.size() != k) continue;
    auto pos = idx.position(w);
    if (!pos) throw std::logic_error("lie_coordinates: term is not a basis word");
    entries.emplace_back(*pos, c);
  }
  std::sort(entries.begin(), entries.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  SparseIntVector v;
  for (auto& [i, c] : entries) v.push_back(i, std::move(c));
  return v;
}

LieElement lie_from_coordinates(int rank, int k, const SparseIntVector& v) {
  const LyndonIndex& idx = lyndon_index(rank, k);
  LieElement x(rank);
  for (const auto& [i, c] : v.entries()) {
    if (i >= idx.size()) throw std::out_of_range("lie_from_coordinates: index beyond basis");
    x.add(idx.word(i), c);
  }
  return x;
}

LieElement lie_from_coordinates(int rank, int k, const IntVector& v) {
  return lie_from_coordinates(rank, k, SparseIntVector::from_dense(v));
}

std::vector<int> multidegree(const Word& w, int n) {
  std::vector<int> m(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < w.size(); ++i) ++m[static_cast<std::size_t>(w[i] - 1)];
  return m;
}

IntLattice centralizer_of_linear(const LieElement& x, int k) {
  if (x.is_zero()) throw std::invalid_argument("centralizer_of_linear: zero element");
  if (x.degree() != 1) throw std::invalid_argument("centralizer_of_linear: element must have degree 1");
  const int n = x.rank();
  const LyndonIndex& idx = lyndon_index(n, k);
  std::vector<SparseIntVector> columns;
  columns.reserve(idx.size());
  for (const Word& u : idx.words())
    columns.push_back(lie_coordinates(lie_bracket(x, LieElement::basis(n, u)), k + 1));
  return kernel_of_columns(lyndon_index(n, k + 1).size(), columns);
}

LieElement boundary_element(int n) {
  LieElement x(n);
  for (int i = 1; i <= n; ++i) x.add(Word::letter(i), 1);
  return x;
}

}  // namespace lieforge
