#include "lieforge/magnus.hpp"

#include <cstdint>
#include <stdexcept>

namespace lieforge {

namespace {

std::size_t ipow(int base, int e) {
  std::size_t r = 1;
  for (int i = 0; i < e; ++i) r *= static_cast<std::size_t>(base);
  return r;
}

Word word_at(std::size_t idx, int n, int d) {
  std::vector<int> letters(static_cast<std::size_t>(d));
  for (int t = d - 1; t >= 0; --t) {
    letters[static_cast<std::size_t>(t)] = static_cast<int>(idx % static_cast<std::size_t>(n)) + 1;
    idx /= static_cast<std::size_t>(n);
  }
  return Word(letters);
}

std::size_t index_of(const Word& w, int n) {
  std::size_t idx = 0;
  for (int t = 0; t < w.size(); ++t) idx = idx * static_cast<std::size_t>(n) + static_cast<std::size_t>(w[t] - 1);
  return idx;
}

struct Overflow {};

inline void mul_add(std::int64_t& acc, std::int64_t a, std::int64_t b) {
  std::int64_t p;
  if (__builtin_mul_overflow(a, b, &p) || __builtin_add_overflow(acc, p, &acc)) throw Overflow{};
}
inline void mul_add(BigInt& acc, const BigInt& a, const BigInt& b) { acc += a * b; }

inline std::int64_t narrow(const BigInt& v, std::int64_t*) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) throw Overflow{};
  return static_cast<std::int64_t>(v);
}
inline BigInt narrow(const BigInt& v, BigInt*) { return v; }

// Generalized binomial coefficients C(e, m), m = 0..D: the series of (1+X)^e.
std::vector<BigInt> binomial_series(std::int64_t e, int D) {
  std::vector<BigInt> c(static_cast<std::size_t>(D) + 1);
  c[0] = 1;
  for (int m = 1; m <= D; ++m) c[static_cast<std::size_t>(m)] = c[static_cast<std::size_t>(m - 1)] * (e - m + 1) / m;
  return c;
}

// Right-multiplies 1 by mu(x_g^e) for every syllable, in place, highest degree first.
template <typename S>
std::vector<std::vector<S>> expand_dense(const ReducedWord& w, int D) {
  const int n = w.rank();
  std::vector<std::vector<S>> c(static_cast<std::size_t>(D) + 1);
  for (int d = 0; d <= D; ++d) c[static_cast<std::size_t>(d)].assign(ipow(n, d), S(0));
  c[0][0] = 1;
  std::vector<S> coef(static_cast<std::size_t>(D) + 1);
  std::vector<std::size_t> suffix(static_cast<std::size_t>(D) + 1);
  for (const auto& [g, e] : w.syllables()) {
    const auto big = binomial_series(e, D);
    for (int m = 0; m <= D; ++m) coef[static_cast<std::size_t>(m)] = narrow(big[static_cast<std::size_t>(m)], static_cast<S*>(nullptr));
    suffix[0] = 0;
    for (int m = 1; m <= D; ++m)
      suffix[static_cast<std::size_t>(m)] = suffix[static_cast<std::size_t>(m - 1)] * static_cast<std::size_t>(n) + static_cast<std::size_t>(g - 1);
    for (int d = D; d >= 1; --d) {
      auto& dst = c[static_cast<std::size_t>(d)];
      for (int m = 1; m <= d; ++m) {
        const S& a = coef[static_cast<std::size_t>(m)];
        if (a == 0) continue;
        const auto& src = c[static_cast<std::size_t>(d - m)];
        const std::size_t shift = ipow(n, m);
        const std::size_t s = suffix[static_cast<std::size_t>(m)];
        for (std::size_t idx = 0; idx < src.size(); ++idx) {
          if (src[idx] == 0) continue;
          mul_add(dst[idx * shift + s], a, src[idx]);
        }
      }
    }
  }
  return c;
}

}  // namespace

TruncSeries::TruncSeries(int rank, int max_degree) : n_(rank), D_(max_degree) {
  if (rank < 1 || max_degree < 0) throw std::invalid_argument("TruncSeries: bad shape");
  if (max_degree > Word::kMaxLength) throw std::out_of_range("TruncSeries: degree beyond word limit");
  coeffs_.resize(static_cast<std::size_t>(D_) + 1);
  for (int d = 0; d <= D_; ++d) coeffs_[static_cast<std::size_t>(d)].assign(ipow(n_, d), BigInt(0));
}

TruncSeries TruncSeries::one(int rank, int max_degree) {
  TruncSeries s(rank, max_degree);
  s.coeffs_[0][0] = 1;
  return s;
}

BigInt TruncSeries::coeff(const Word& w) const {
  if (w.size() > D_ || w.max_letter() > n_) return 0;
  return coeffs_[static_cast<std::size_t>(w.size())][index_of(w, n_)];
}

void TruncSeries::set(const Word& w, BigInt c) {
  if (w.size() > D_ || w.max_letter() > n_) throw std::out_of_range("TruncSeries::set: monomial outside truncation");
  coeffs_[static_cast<std::size_t>(w.size())][index_of(w, n_)] = std::move(c);
}

NCPolynomial TruncSeries::degree_part(int d) const {
  NCPolynomial p;
  const auto& c = coeffs_.at(static_cast<std::size_t>(d));
  for (std::size_t idx = 0; idx < c.size(); ++idx)
    if (c[idx] != 0) p.add(word_at(idx, n_, d), c[idx]);
  return p;
}

int TruncSeries::lowest_positive_degree() const {
  for (int d = 1; d <= D_; ++d)
    for (const auto& x : coeffs_[static_cast<std::size_t>(d)])
      if (x != 0) return d;
  return 0;
}

std::size_t TruncSeries::nnz() const {
  std::size_t k = 0;
  for (const auto& c : coeffs_)
    for (const auto& x : c) k += x != 0;
  return k;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  if (a.n_ != b.n_ || a.D_ != b.D_) throw std::invalid_argument("TruncSeries: shape mismatch");
  TruncSeries out(a.n_, a.D_);
  for (int da = 0; da <= a.D_; ++da) {
    const auto& ca = a.coeffs_[static_cast<std::size_t>(da)];
    for (int db = 0; da + db <= a.D_; ++db) {
      const auto& cb = b.coeffs_[static_cast<std::size_t>(db)];
      auto& dst = out.coeffs_[static_cast<std::size_t>(da + db)];
      const std::size_t shift = cb.size();
      for (std::size_t i = 0; i < ca.size(); ++i) {
        if (ca[i] == 0) continue;
        for (std::size_t j = 0; j < cb.size(); ++j)
          if (cb[j] != 0) dst[i * shift + j] += ca[i] * cb[j];
      }
    }
  }
  return out;
}

std::string TruncSeries::str() const {
  std::string s;
  for (int d = 0; d <= D_; ++d) {
    const auto& c = coeffs_[static_cast<std::size_t>(d)];
    for (std::size_t idx = 0; idx < c.size(); ++idx) {
      if (c[idx] == 0) continue;
      const bool neg = c[idx] < 0;
      const BigInt a = neg ? BigInt(-c[idx]) : c[idx];
      if (!s.empty()) s += neg ? " - " : " + ";
      else if (neg) s += "-";
      std::string mono;
      const Word w = word_at(idx, n_, d);
      for (int t = 0; t < w.size(); ++t) mono += "X" + std::to_string(w[t]);
      if (mono.empty()) s += a.str();
      else s += (a == 1 ? "" : a.str() + "*") + mono;
    }
  }
  return s.empty() ? "0" : s;
}

TruncSeries magnus_expand(const ReducedWord& w, int max_degree) {
  if (max_degree < 1) throw std::invalid_argument("magnus_expand: max_degree must be >= 1");
  TruncSeries out(w.rank(), max_degree);
  try {
    const auto fast = expand_dense<std::int64_t>(w, max_degree);
    for (int d = 0; d <= max_degree; ++d) {
      auto& dst = out.degree_coeffs(d);
      for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = fast[static_cast<std::size_t>(d)][i];
    }
  } catch (const Overflow&) {
    auto slow = expand_dense<BigInt>(w, max_degree);
    for (int d = 0; d <= max_degree; ++d) out.degree_coeffs(d) = std::move(slow[static_cast<std::size_t>(d)]);
  }
  return out;
}

// ---------------------------------------------------------------------------

std::string FiltrationDegree::str(int cutoff) const {
  if (is_finite()) return std::to_string(value);
  return ">" + std::to_string(cutoff);
}

FiltrationDegree gamma_degree(const ReducedWord& w, int max_degree) {
  if (w.is_identity()) return FiltrationDegree::above(true);
  const int d = magnus_expand(w, max_degree).lowest_positive_degree();
  return d == 0 ? FiltrationDegree::above(false) : FiltrationDegree::finite(d);
}

LieElement lie_class(const ReducedWord& w, int max_degree) {
  const TruncSeries mu = magnus_expand(w, max_degree);
  const int d = mu.lowest_positive_degree();
  if (d == 0) throw std::domain_error("lie_class: word lies beyond the degree cutoff");
  return from_tensor(w.rank(), mu.degree_part(d));
}

namespace {

std::vector<TruncSeries> displacements(const EndoTable& e, int D) {
  std::vector<TruncSeries> out;
  out.reserve(static_cast<std::size_t>(e.rank()));
  for (int i = 1; i <= e.rank(); ++i) {
    ReducedWord disp = e.image(i);
    disp.append({i, -1});
    out.push_back(magnus_expand(disp, D));
  }
  return out;
}

void require_ia(const std::vector<TruncSeries>& disp) {
  for (std::size_t i = 0; i < disp.size(); ++i)
    for (const auto& x : disp[i].degree_coeffs(1))
      if (x != 0)
        throw std::invalid_argument("automorphism is not IA: x" + std::to_string(i + 1) +
                                    " moves in the abelianization");
}

}  // namespace

namespace {

FiltrationDegree degree_of_displacements(const std::vector<TruncSeries>& disp, bool is_identity) {
  require_ia(disp);
  int low = 0;
  for (const auto& s : disp) {
    const int d = s.lowest_positive_degree();
    if (d && (!low || d < low)) low = d;
  }
  if (!low) return FiltrationDegree::above(is_identity);
  return FiltrationDegree::finite(low - 1);
}

HomDerivation component_of_displacements(const std::vector<TruncSeries>& disp, int k) {
  require_ia(disp);
  const int n = static_cast<int>(disp.size());
  std::vector<LieElement> im;
  for (std::size_t i = 0; i < disp.size(); ++i) {
    const int d = disp[i].lowest_positive_degree();
    if (d && d <= k)
      throw std::domain_error("johnson_component: automorphism is only in filtration degree " +
                              std::to_string(d - 1));
    im.push_back(from_tensor(n, disp[i].degree_part(k + 1)));
  }
  return HomDerivation(k, std::move(im));
}

template <typename S>
using Dense = std::vector<std::vector<S>>;

template <typename S>
Dense<S> to_dense(const TruncSeries& t) {
  Dense<S> out(static_cast<std::size_t>(t.max_degree()) + 1);
  for (int d = 0; d <= t.max_degree(); ++d) {
    const auto& src = t.degree_coeffs(d);
    auto& dst = out[static_cast<std::size_t>(d)];
    dst.reserve(src.size());
    for (const auto& v : src) dst.push_back(narrow(v, static_cast<S*>(nullptr)));
  }
  return out;
}

// dst += y * t, keeping degrees <= top; y has no constant term.
template <typename S>
void mul_add_trunc(Dense<S>& dst, const Dense<S>& y, const Dense<S>& t, int n, int top) {
  for (int da = 1; da <= top; ++da) {
    const auto& ya = y[static_cast<std::size_t>(da)];
    for (int db = 0; da + db <= top && db < static_cast<int>(t.size()); ++db) {
      const auto& tb = t[static_cast<std::size_t>(db)];
      auto& out = dst[static_cast<std::size_t>(da + db)];
      const std::size_t shift = ipow(n, db);
      for (std::size_t i = 0; i < ya.size(); ++i) {
        if (ya[i] == 0) continue;
        for (std::size_t j = 0; j < tb.size(); ++j)
          if (tb[j] != 0) mul_add(out[i * shift + j], ya[i], tb[j]);
      }
    }
  }
}

// Horner scheme over prefixes: T_p = s[p] + sum_j y_j T_{pj}, truncated at
// degree top = D - |p| because every y_j starts in degree 1.
template <typename S>
struct Substitution {
  const Dense<S>& s;
  const std::vector<Dense<S>>& y;
  const std::vector<std::vector<char>>& live;  // some word with this prefix has a nonzero coefficient
  int n;
  int D;

  Dense<S> at(int depth, std::size_t idx) const {
    const int top = D - depth;
    Dense<S> out(static_cast<std::size_t>(top) + 1);
    for (int d = 0; d <= top; ++d) out[static_cast<std::size_t>(d)].assign(ipow(n, d), S(0));
    out[0][0] = s[static_cast<std::size_t>(depth)][idx];
    if (top == 0) return out;
    for (int j = 0; j < n; ++j) {
      const std::size_t child = idx * static_cast<std::size_t>(n) + static_cast<std::size_t>(j);
      if (!live[static_cast<std::size_t>(depth + 1)][child]) continue;
      mul_add_trunc(out, y[static_cast<std::size_t>(j)], at(depth + 1, child), n, top);
    }
    return out;
  }
};

template <typename S>
Dense<S> substitute_dense(const Dense<S>& s, const std::vector<Dense<S>>& y, int n, int D) {
  std::vector<std::vector<char>> live(static_cast<std::size_t>(D) + 1);
  for (int d = D; d >= 0; --d) {
    const auto& c = s[static_cast<std::size_t>(d)];
    auto& l = live[static_cast<std::size_t>(d)];
    l.assign(c.size(), 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
      bool any = c[i] != 0;
      if (d < D)
        for (int j = 0; j < n && !any; ++j) any = live[static_cast<std::size_t>(d + 1)][i * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)];
      l[i] = any;
    }
  }
  return Substitution<S>{s, y, live, n, D}.at(0, 0);
}

template <typename S>
TruncSeries substitute_series(const TruncSeries& s, const std::vector<TruncSeries>& images) {
  const int n = s.rank(), D = s.max_degree();
  std::vector<Dense<S>> y;
  for (const auto& im : images) {
    Dense<S> d = to_dense<S>(im);
    d[0][0] = 0;
    y.push_back(std::move(d));
  }
  const Dense<S> r = substitute_dense(to_dense<S>(s), y, n, D);
  TruncSeries out(n, D);
  for (int d = 0; d <= D; ++d) {
    auto& dst = out.degree_coeffs(d);
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = r[static_cast<std::size_t>(d)][i];
  }
  return out;
}

}  // namespace

FiltrationDegree a_degree(const EndoTable& e, int max_degree) {
  if (max_degree < 2) throw std::invalid_argument("a_degree: max_degree must be >= 2");
  return degree_of_displacements(displacements(e, max_degree), e == EndoTable::identity(e.rank()));
}

HomDerivation johnson_image(const EndoTable& e, int max_degree) {
  const FiltrationDegree j = a_degree(e, max_degree);
  if (!j.is_finite()) throw std::domain_error("johnson_image: automorphism lies beyond the degree cutoff");
  return johnson_component(e, j.value);
}

HomDerivation johnson_component(const EndoTable& e, int k) {
  if (k < 1) throw std::invalid_argument("johnson_component: degree must be >= 1");
  return component_of_displacements(displacements(e, k + 1), k);
}

TruncatedEndo::TruncatedEndo(const EndoTable& e, int max_degree) {
  for (const auto& w : e.images()) images_.push_back(magnus_expand(w, max_degree));
}

TruncatedEndo TruncatedEndo::identity(int rank, int max_degree) {
  return TruncatedEndo(EndoTable::identity(rank), max_degree);
}

TruncSeries TruncatedEndo::displacement(int gen) const {
  return image(gen) * magnus_expand(ReducedWord::generator(rank(), gen, -1), max_degree());
}

TruncatedEndo compose(const TruncatedEndo& f, const TruncatedEndo& g) {
  if (f.rank() != g.rank() || f.max_degree() != g.max_degree())
    throw std::invalid_argument("compose: truncated endomorphisms of different shape");
  std::vector<TruncSeries> out;
  for (const auto& s : g.images_) {
    try {
      out.push_back(substitute_series<std::int64_t>(s, f.images_));
    } catch (const Overflow&) {
      out.push_back(substitute_series<BigInt>(s, f.images_));
    }
  }
  return TruncatedEndo(std::move(out));
}

FiltrationDegree a_degree(const TruncatedEndo& e) {
  if (e.max_degree() < 2) throw std::invalid_argument("a_degree: max_degree must be >= 2");
  std::vector<TruncSeries> disp;
  for (int i = 1; i <= e.rank(); ++i) disp.push_back(e.displacement(i));
  return degree_of_displacements(disp, false);
}

HomDerivation johnson_component(const TruncatedEndo& e, int k) {
  if (k < 1) throw std::invalid_argument("johnson_component: degree must be >= 1");
  if (k + 1 > e.max_degree()) throw std::invalid_argument("johnson_component: degree exceeds the truncation");
  std::vector<TruncSeries> disp;
  for (int i = 1; i <= e.rank(); ++i) disp.push_back(e.displacement(i));
  return component_of_displacements(disp, k);
}

}  // namespace lieforge
