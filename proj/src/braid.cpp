#include "lieforge/braid.hpp"

#include <cctype>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace lieforge {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::out_of_range(what);
}

ReducedWord gen(int n, int i, std::int64_t e = 1) { return ReducedWord::generator(n, i, e); }

}  // namespace

AutSymbol AutSymbol::sigma(int i, int sign) { return {AutKind::Sigma, i, 0, ReducedWord(1), ReducedWord(1), sign}; }
AutSymbol AutSymbol::pure_a(int i, int j, int sign) {
  require(i < j, "A(i,j) needs i < j");
  return {AutKind::PureA, i, j, ReducedWord(1), ReducedWord(1), sign};
}
AutSymbol AutSymbol::inner(const ReducedWord& w, int sign) { return {AutKind::Inner, 0, 0, w, ReducedWord(1), sign}; }
AutSymbol AutSymbol::chi(int k, int i, int sign) {
  require(k != i, "chi(k,i) needs k != i");
  return {AutKind::Chi, k, i, ReducedWord(1), ReducedWord(1), sign};
}
AutSymbol AutSymbol::partial_inner(int k, int i, int sign) {
  require(i <= k, "partial inner c(k,i) needs i <= k");
  return {AutKind::PartialInner, k, i, ReducedWord(1), ReducedWord(1), sign};
}
AutSymbol AutSymbol::triangular(int i, const ReducedWord& w, const ReducedWord& gamma, int sign) {
  if (w.rank() != gamma.rank()) throw std::invalid_argument("triangular: w and gamma differ in rank");
  if (w.max_generator() >= i || gamma.max_generator() >= i)
    throw std::invalid_argument("triangular: w and gamma must only involve x_1..x_{i-1}");
  for (auto e : gamma.abelianization())
    if (e != 0) throw std::invalid_argument("triangular: gamma must lie in the commutator subgroup");
  return {AutKind::Triangular, i, 0, w, gamma, sign};
}
AutSymbol AutSymbol::c_j(int j, int sign) { return {AutKind::CJ, j, 0, ReducedWord(1), ReducedWord(1), sign}; }

AutSymbol AutSymbol::inverse() const {
  AutSymbol s = *this;
  s.sign = -sign;
  return s;
}

std::string AutSymbol::str() const {
  std::string s;
  switch (kind) {
    case AutKind::Sigma: s = "s" + std::to_string(a); break;
    case AutKind::PureA: s = "A(" + std::to_string(a) + "," + std::to_string(b) + ")"; break;
    case AutKind::Inner: s = "inn(" + w.str() + ")"; break;
    case AutKind::Chi: s = "chi(" + std::to_string(a) + "," + std::to_string(b) + ")"; break;
    case AutKind::PartialInner: s = "pin(" + std::to_string(a) + "," + std::to_string(b) + ")"; break;
    case AutKind::Triangular: s = "tri(" + std::to_string(a) + "; " + w.str() + "; " + gamma.str() + ")"; break;
    case AutKind::CJ: s = "C(" + std::to_string(a) + ")"; break;
  }
  return sign < 0 ? s + "^-1" : s;
}

// ---------------------------------------------------------------------------

AutWord::AutWord(int rank, std::vector<AutSymbol> symbols) : rank_(rank) {
  for (auto& s : symbols) push_back(std::move(s));
}

void AutWord::push_back(AutSymbol s) {
  if ((s.kind == AutKind::Inner || s.kind == AutKind::Triangular) && s.w.rank() != rank_)
    throw std::invalid_argument("AutWord: symbol word has the wrong rank");
  symbols_.push_back(std::move(s));
}

AutWord AutWord::inverse() const {
  AutWord out(rank_);
  for (auto it = symbols_.rbegin(); it != symbols_.rend(); ++it) out.symbols_.push_back(it->inverse());
  return out;
}

std::string AutWord::str() const {
  if (symbols_.empty()) return "id";
  std::string s;
  for (const auto& sym : symbols_) {
    if (!s.empty()) s += " . ";
    s += sym.str();
  }
  return s;
}

AutWord operator*(const AutWord& a, const AutWord& b) {
  if (a.rank_ != b.rank_) throw std::invalid_argument("AutWord: rank mismatch");
  AutWord out = a;
  out.symbols_.insert(out.symbols_.end(), b.symbols_.begin(), b.symbols_.end());
  return out;
}

AutWord aut_commutator(const AutWord& a, const AutWord& b) { return a * b * a.inverse() * b.inverse(); }

namespace {

std::vector<std::string_view> split_top_level(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '(' || c == '[') ++depth;
    else if (c == ')' || c == ']') --depth;
    else if (c == sep && depth == 0) {
      parts.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  parts.push_back(text.substr(start));
  return parts;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int to_int(std::string_view s, std::string_view context) {
  s = trim(s);
  try {
    std::size_t used = 0;
    const int v = std::stoi(std::string(s), &used);
    if (used != s.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse integer '" + std::string(s) + "' in '" + std::string(context) + "'");
  }
}

std::vector<int> int_args(std::string_view args, std::size_t count, std::string_view context) {
  auto parts = split_top_level(args, ',');
  if (parts.size() != count) throw std::invalid_argument("wrong number of arguments in '" + std::string(context) + "'");
  std::vector<int> out;
  for (auto p : parts) out.push_back(to_int(p, context));
  return out;
}

void append_power(AutWord& out, const AutWord& base, int e) {
  const AutWord unit = e < 0 ? base.inverse() : base;
  for (int t = 0; t < (e < 0 ? -e : e); ++t) out = out * unit;
}

AutWord parse_symbol(int n, std::string_view tok) {
  tok = trim(tok);
  const std::string_view whole = tok;
  int e = 1;
  // A trailing ^e outside any bracket.
  int depth = 0;
  for (std::size_t i = 0; i < tok.size(); ++i) {
    const char c = tok[i];
    if (c == '(' || c == '[') ++depth;
    else if (c == ')' || c == ']') --depth;
    else if (c == '^' && depth == 0) {
      e = to_int(tok.substr(i + 1), whole);
      tok = trim(tok.substr(0, i));
      break;
    }
  }
  std::string_view name = tok;
  std::string_view args;
  if (auto p = tok.find('('); p != std::string_view::npos) {
    if (tok.back() != ')') throw std::invalid_argument("unbalanced parentheses in '" + std::string(whole) + "'");
    name = trim(tok.substr(0, p));
    args = tok.substr(p + 1, tok.size() - p - 2);
  }
  AutWord base(n);
  if (name.size() > 1 && name[0] == 's' && std::isdigit(static_cast<unsigned char>(name[1]))) {
    const int i = to_int(name.substr(1), whole);
    require(i >= 1 && i < n, "sigma index out of range in '" + std::string(whole) + "'");
    base.push_back(AutSymbol::sigma(i));
  } else if (name == "A") {
    auto v = int_args(args, 2, whole);
    require(v[0] >= 1 && v[0] < v[1] && v[1] <= n, "A(i,j) index out of range in '" + std::string(whole) + "'");
    base.push_back(AutSymbol::pure_a(v[0], v[1]));
  } else if (name == "inn") {
    base.push_back(AutSymbol::inner(ReducedWord::parse(n, args)));
  } else if (name == "chi") {
    auto v = int_args(args, 2, whole);
    require(v[0] >= 1 && v[0] <= n && v[1] >= 1 && v[1] <= n && v[0] != v[1],
            "chi(k,i) index out of range in '" + std::string(whole) + "'");
    base.push_back(AutSymbol::chi(v[0], v[1]));
  } else if (name == "pin") {
    auto v = int_args(args, 2, whole);
    require(v[1] >= 1 && v[1] <= v[0] && v[0] <= n, "pin(k,i) index out of range in '" + std::string(whole) + "'");
    base.push_back(AutSymbol::partial_inner(v[0], v[1]));
  } else if (name == "tri") {
    auto parts = split_top_level(args, ';');
    if (parts.size() != 3) throw std::invalid_argument("tri expects 'i; w; gamma' in '" + std::string(whole) + "'");
    const int i = to_int(parts[0], whole);
    require(i >= 1 && i <= n, "tri index out of range in '" + std::string(whole) + "'");
    base.push_back(AutSymbol::triangular(i, ReducedWord::parse(n, parts[1]), ReducedWord::parse(n, parts[2])));
  } else if (name == "xi" && args.empty()) {
    base = xi_word(n);
  } else if (name == "C") {
    auto v = int_args(args, 1, whole);
    require(v[0] >= 1 && v[0] < n, "C(j) index out of range in '" + std::string(whole) + "'");
    base.push_back(AutSymbol::c_j(v[0]));
  } else if (name == "id" && args.empty()) {
  } else {
    throw std::invalid_argument("unknown automorphism symbol '" + std::string(whole) + "'");
  }
  AutWord out(n);
  append_power(out, base, e);
  return out;
}

}  // namespace

AutWord AutWord::parse(int rank, std::string_view text) {
  AutWord out(rank);
  if (trim(text).empty()) throw std::invalid_argument("empty automorphism expression");
  for (auto tok : split_top_level(text, '.')) out = out * parse_symbol(rank, tok);
  return out;
}

// ---------------------------------------------------------------------------

EndoTable sigma_table(int i, int n) {
  require(i >= 1 && i < n, "sigma_table: index out of range");
  auto im = EndoTable::identity(n).images();
  im[static_cast<std::size_t>(i - 1)] = gen(n, i + 1);
  im[static_cast<std::size_t>(i)] = gen(n, i + 1, -1) * gen(n, i) * gen(n, i + 1);
  return EndoTable(std::move(im));
}

namespace {

EndoTable sigma_inverse_table(int i, int n) {
  require(i >= 1 && i < n, "sigma_table: index out of range");
  auto im = EndoTable::identity(n).images();
  im[static_cast<std::size_t>(i - 1)] = gen(n, i) * gen(n, i + 1) * gen(n, i, -1);
  im[static_cast<std::size_t>(i)] = gen(n, i);
  return EndoTable(std::move(im));
}

EndoTable compose_all(int n, const std::vector<EndoTable>& tables) {
  EndoTable acc = EndoTable::identity(n);
  for (const auto& t : tables) acc = endo_compose(acc, t);
  return acc;
}

EndoTable conjugation_table(const ReducedWord& w, int n, const std::vector<int>& targets, bool right) {
  // right: x -> w^-1 x w; otherwise x -> w x w^-1.
  auto im = EndoTable::identity(n).images();
  for (int t : targets) {
    auto& x = im[static_cast<std::size_t>(t - 1)];
    x = right ? w.inverse() * x * w : w * x * w.inverse();
  }
  return EndoTable(std::move(im));
}

std::vector<int> range(int lo, int hi) {
  std::vector<int> v;
  for (int t = lo; t <= hi; ++t) v.push_back(t);
  return v;
}

}  // namespace

EndoTable pure_a_table(int i, int j, int n) {
  require(1 <= i && i < j && j <= n, "pure_a_table: need 1 <= i < j <= n");
  static std::mutex mutex;
  static std::map<std::tuple<int, int, int>, EndoTable> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find({i, j, n}); it != cache.end()) return it->second;
  }
  std::vector<EndoTable> parts;
  for (int t = j - 1; t > i; --t) parts.push_back(sigma_table(t, n));
  parts.push_back(sigma_table(i, n));
  parts.push_back(sigma_table(i, n));
  for (int t = i + 1; t <= j - 1; ++t) parts.push_back(sigma_inverse_table(t, n));
  EndoTable table = compose_all(n, parts);
  std::lock_guard lock(mutex);
  return cache.emplace(std::tuple{i, j, n}, std::move(table)).first->second;
}

EndoTable c_j_table(int j, int n) {
  require(j >= 1 && j < n, "c_j_table: need 1 <= j <= n-1");
  ReducedWord p = ReducedWord::identity(n);
  for (int t = 1; t <= j; ++t) p = p * gen(n, t);
  ReducedWord q = ReducedWord::identity(n);
  for (int t = j + 1; t <= n; ++t) q = q * gen(n, t);
  auto lo = conjugation_table(p, n, range(1, j), false).images();
  auto hi = conjugation_table(q, n, range(j + 1, n), true).images();
  for (int t = j + 1; t <= n; ++t) lo[static_cast<std::size_t>(t - 1)] = hi[static_cast<std::size_t>(t - 1)];
  return EndoTable(std::move(lo));
}

namespace {

EndoTable c_j_inverse_table(int j, int n) {
  ReducedWord p = ReducedWord::identity(n);
  for (int t = 1; t <= j; ++t) p = p * gen(n, t);
  ReducedWord q = ReducedWord::identity(n);
  for (int t = j + 1; t <= n; ++t) q = q * gen(n, t);
  auto lo = conjugation_table(p, n, range(1, j), true).images();
  auto hi = conjugation_table(q, n, range(j + 1, n), false).images();
  for (int t = j + 1; t <= n; ++t) lo[static_cast<std::size_t>(t - 1)] = hi[static_cast<std::size_t>(t - 1)];
  return EndoTable(std::move(lo));
}

}  // namespace

EndoTable symbol_table(const AutSymbol& s, int n) {
  const bool inv = s.sign < 0;
  switch (s.kind) {
    case AutKind::Sigma:
      return inv ? sigma_inverse_table(s.a, n) : sigma_table(s.a, n);
    case AutKind::PureA: {
      if (!inv) return pure_a_table(s.a, s.b, n);
      std::vector<EndoTable> parts;
      for (int t = s.b - 1; t > s.a; --t) parts.push_back(sigma_table(t, n));
      parts.push_back(sigma_inverse_table(s.a, n));
      parts.push_back(sigma_inverse_table(s.a, n));
      for (int t = s.a + 1; t <= s.b - 1; ++t) parts.push_back(sigma_inverse_table(t, n));
      return compose_all(n, parts);
    }
    case AutKind::Inner:
      return EndoTable::inner(inv ? s.w.inverse() : s.w);
    case AutKind::Chi: {
      require(s.a <= n && s.b <= n, "chi: index out of range");
      return conjugation_table(gen(n, s.b), n, {s.a}, !inv);
    }
    case AutKind::PartialInner: {
      require(s.a <= n, "partial inner: index out of range");
      return conjugation_table(gen(n, s.b), n, range(1, s.a), !inv);
    }
    case AutKind::Triangular: {
      require(s.a <= n, "triangular: index out of range");
      auto im = EndoTable::identity(n).images();
      auto& x = im[static_cast<std::size_t>(s.a - 1)];
      x = inv ? s.w * x * s.gamma.inverse() * s.w.inverse() : s.w.inverse() * x * s.w * s.gamma;
      return EndoTable(std::move(im));
    }
    case AutKind::CJ:
      return inv ? c_j_inverse_table(s.a, n) : c_j_table(s.a, n);
  }
  throw std::logic_error("symbol_table: unknown kind");
}

EndoTable evaluate(const AutWord& w) {
  const int n = w.rank();
  EndoTable acc = EndoTable::identity(n);
  // Apply the rightmost symbol first: acc <- s o acc, scanning right to left.
  for (auto it = w.symbols().rbegin(); it != w.symbols().rend(); ++it) acc = endo_compose(symbol_table(*it, n), acc);
  return acc;
}

ReducedWord boundary(int n) {
  if (n < 1) throw std::invalid_argument("boundary: n must be >= 1");
  ReducedWord w(n);
  for (int t = 1; t <= n; ++t) w.append({t, 1});
  return w;
}

AutWord xi_word(int n) {
  if (n < 1) throw std::invalid_argument("xi_word: n must be >= 1");
  AutWord w(n);
  for (int j = n; j >= 2; --j)
    for (int i = 1; i < j; ++i) w.push_back(AutSymbol::pure_a(i, j));
  return w;
}

Family parse_family(std::string_view name) {
  if (name == "Inn" || name == "inn") return Family::Inn;
  if (name == "Pn" || name == "pn") return Family::Pn;
  if (name == "IAnPlus" || name == "ia-plus") return Family::IAnPlus;
  if (name == "PartialInner" || name == "partial-inner") return Family::PartialInner;
  if (name == "FnPn" || name == "fnpn") return Family::FnPn;
  throw std::invalid_argument("unknown family '" + std::string(name) + "'");
}

std::string family_name(Family f) {
  switch (f) {
    case Family::Inn: return "Inn";
    case Family::Pn: return "Pn";
    case Family::IAnPlus: return "IAnPlus";
    case Family::PartialInner: return "PartialInner";
    case Family::FnPn: return "FnPn";
  }
  return "?";
}

std::vector<AutWord> family_generators(Family f, int n) {
  if (n < 2) throw std::invalid_argument("family_generators: n must be >= 2");
  std::vector<AutWord> out;
  auto one = [&](AutSymbol s) { out.emplace_back(n, std::vector<AutSymbol>{std::move(s)}); };
  switch (f) {
    case Family::Inn:
      for (int i = 1; i <= n; ++i) one(AutSymbol::inner(gen(n, i)));
      break;
    case Family::Pn:
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) one(AutSymbol::pure_a(i, j));
      break;
    case Family::IAnPlus:
      for (int k = 2; k <= n; ++k)
        for (int i = 1; i < k; ++i) one(AutSymbol::chi(k, i));
      for (int i = 3; i <= n; ++i)
        for (int a = 1; a < i; ++a)
          for (int b = a + 1; b < i; ++b)
            one(AutSymbol::triangular(i, ReducedWord::identity(n), word_commutator(gen(n, a), gen(n, b))));
      break;
    case Family::PartialInner:
      for (int k = 1; k <= n; ++k)
        for (int i = 1; i <= k; ++i) one(AutSymbol::partial_inner(k, i));
      break;
    case Family::FnPn:
      out = family_generators(Family::Inn, n);
      for (auto& w : family_generators(Family::Pn, n)) out.push_back(std::move(w));
      break;
  }
  return out;
}

EndoTable quotient_table(const EndoTable& e) {
  const int n = e.rank();
  if (n < 2) throw std::invalid_argument("quotient_table: n must be >= 2");
  std::vector<ReducedWord> subst;
  for (int t = 1; t < n; ++t) subst.push_back(gen(n - 1, t));
  subst.push_back(boundary(n - 1).inverse());
  std::vector<ReducedWord> im;
  for (int t = 1; t < n; ++t) im.push_back(substitute(e.image(t), subst));
  return EndoTable(std::move(im));
}

EndoTable extend_table(const EndoTable& e) {
  const int n = e.rank() + 1;
  std::vector<ReducedWord> im;
  for (const auto& w : e.images()) im.push_back(change_rank(w, n));
  im.push_back(gen(n, n));
  return EndoTable(std::move(im));
}

std::size_t pair_index(int i, int j, int n) {
  require(1 <= i && i < j && j <= n, "pair_index: need 1 <= i < j <= n");
  std::size_t idx = 0;
  for (int a = 1; a < i; ++a) idx += static_cast<std::size_t>(n - a);
  return idx + static_cast<std::size_t>(j - i - 1);
}

std::vector<std::int64_t> braid_abelianize(const AutWord& w) {
  const int n = w.rank();
  std::vector<std::int64_t> v(static_cast<std::size_t>(n * (n - 1) / 2), 0);
  for (const auto& s : w.symbols()) {
    if (s.kind != AutKind::PureA) throw std::invalid_argument("braid_abelianize: symbol " + s.str() + " is not a pure braid generator");
    v[pair_index(s.a, s.b, n)] += s.sign;
  }
  return v;
}

bool is_braid_automorphism(const EndoTable& e) {
  for (int t = 1; t <= e.rank(); ++t)
    if (!e.image(t).is_conjugate_to_generator(t)) return false;
  return endo_apply(e, boundary(e.rank())) == boundary(e.rank());
}

bool is_triangular(const EndoTable& e) {
  const int n = e.rank();
  for (int i = 1; i <= n; ++i) {
    const auto& syl = e.image(i).syllables();
    std::size_t at = syl.size();
    for (std::size_t s = 0; s < syl.size(); ++s) {
      if (syl[s].gen > i) return false;
      if (syl[s].gen == i) {
        if (at != syl.size() || syl[s].exp != 1) return false;
        at = s;
      }
    }
    if (at == syl.size()) return false;
    std::vector<std::int64_t> ab(static_cast<std::size_t>(n), 0);
    for (std::size_t s = 0; s < syl.size(); ++s)
      if (s != at) ab[static_cast<std::size_t>(syl[s].gen - 1)] += syl[s].exp;
    for (auto x : ab)
      if (x != 0) return false;
  }
  return true;
}

}  // namespace lieforge
