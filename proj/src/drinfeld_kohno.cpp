#include "lieforge/drinfeld_kohno.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace lieforge {

HomDerivation tau1(int i, int j, int n) {
  if (i < 1 || j < 1 || i > n || j > n) throw std::out_of_range("tau1: index out of range");
  HomDerivation d(n, 1);
  if (i == j) return d;
  const LieElement xi = LieElement::generator(n, i);
  const LieElement xj = LieElement::generator(n, j);
  d.set_image(i, lie_bracket(xi, xj));
  d.set_image(j, lie_bracket(xj, xi));
  return d;
}

HomDerivation xi_bar(int n) {
  HomDerivation d(n, 1);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) d += tau1(i, j, n);
  return d;
}

std::int64_t dk_rank_formula(int n, int k) {
  std::int64_t s = 0;
  for (int l = 1; l < n; ++l) s += witt_rank(l, k);
  return s;
}

std::int64_t braidlike_rank_formula(int n, int k) {
  if (k == 1) return static_cast<std::int64_t>(n) * (n - 1) / 2;
  return n * witt_rank(n, k) - witt_rank(n, k + 1);
}

// ---------------------------------------------------------------------------

namespace {

std::string pair_name(int i, int j) { return "t" + std::to_string(i) + std::to_string(j); }

class DKTower {
 public:
  explicit DKTower(int n) : n_(n) {}

  const DKComponent& at(int k) {
    std::lock_guard lock(mutex_);
    while (static_cast<int>(levels_.size()) < k) extend();
    return *levels_[static_cast<std::size_t>(k - 1)];
  }

 private:
  void extend() {
    const int k = static_cast<int>(levels_.size()) + 1;
    auto c = std::make_unique<DKComponent>();
    c->n = n_;
    c->k = k;
    LatticeBuilder b(derivation_dim(n_, k));
    auto offer = [&](HomDerivation d, std::string word) {
      if (b.insert(derivation_coordinates(d))) {
        c->spanning.push_back(std::move(d));
        c->bracket_words.push_back(std::move(word));
      }
    };
    if (k == 1) {
      for (int i = 1; i <= n_; ++i)
        for (int j = i + 1; j <= n_; ++j) offer(tau1(i, j, n_), pair_name(i, j));
    } else {
      // DK_n is generated in degree one, so [generator, spanning set of k-1]
      // spans degree k over Z.
      const DKComponent& prev = *levels_.back();
      for (int i = 1; i <= n_; ++i)
        for (int j = i + 1; j <= n_; ++j) {
          const HomDerivation g = tau1(i, j, n_);
          for (std::size_t s = 0; s < prev.spanning.size(); ++s)
            offer(der_bracket(g, prev.spanning[s]), "[" + pair_name(i, j) + "," + prev.bracket_words[s] + "]");
        }
    }
    c->lattice = b.build();
    levels_.push_back(std::move(c));
  }

  int n_;
  std::mutex mutex_;
  std::vector<std::unique_ptr<DKComponent>> levels_;
};

DKTower& tower(int n) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<DKTower>> towers;
  std::lock_guard lock(mutex);
  auto& t = towers[n];
  if (!t) t = std::make_unique<DKTower>(n);
  return *t;
}

std::vector<HomDerivation> all_tau1(int n) {
  std::vector<HomDerivation> gens;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) gens.push_back(tau1(i, j, n));
  return gens;
}

// Kernel of z -> ([z, g])_g on the span of `basis`, in coefficient coordinates.
IntLattice commutant_coefficients(const std::vector<HomDerivation>& basis, const std::vector<HomDerivation>& gens,
                                  int n, int k) {
  const std::size_t block = derivation_dim(n, k + 1);
  std::vector<SparseIntVector> columns;
  columns.reserve(basis.size());
  for (const auto& z : basis) {
    SparseIntVector col;
    for (std::size_t g = 0; g < gens.size(); ++g) {
      const SparseIntVector v = derivation_coordinates(der_bracket(z, gens[g]));
      for (const auto& [pos, c] : v.entries()) col.push_back(g * block + pos, c);
    }
    columns.push_back(std::move(col));
  }
  return kernel_of_columns(gens.size() * block, columns);
}

}  // namespace

const DKComponent& dk_component(int n, int k) {
  if (n < 2 || k < 1) throw std::invalid_argument("dk_component: need n >= 2 and k >= 1");
  return tower(n).at(k);
}

std::vector<RelationCheck> check_dk_presentation(int n) {
  std::vector<RelationCheck> out;
  auto t = [n](int i, int j) { return tau1(i, j, n); };
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      out.push_back({pair_name(i, j) + " = " + pair_name(j, i), t(i, j) == t(j, i)});
      for (int k = 1; k <= n; ++k) {
        if (k == i || k == j) continue;
        out.push_back({"[" + pair_name(i, j) + ", " + pair_name(i, k) + " + " + pair_name(k, j) + "] = 0",
                       der_bracket(t(i, j), t(i, k) + t(k, j)).is_zero()});
      }
    }
  for (int i = 1; i <= n; ++i) out.push_back({pair_name(i, i) + " = 0", t(i, i).is_zero()});
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l) {
          if (k == i || k == j || l == i || l == j) continue;
          out.push_back({"[" + pair_name(i, j) + ", " + pair_name(k, l) + "] = 0", der_bracket(t(i, j), t(k, l)).is_zero()});
        }
  return out;
}

IntLattice dk_center_component(int n, int k) {
  const DKComponent& c = dk_component(n, k);
  std::vector<HomDerivation> basis;
  std::vector<SparseIntVector> basis_coords;
  for (const auto& row : c.lattice.rows()) {
    basis.push_back(derivation_from_coordinates(n, k, row));
    basis_coords.push_back(row);
  }
  const IntLattice coeffs = commutant_coefficients(basis, all_tau1(n), n, k);
  return lattice_image(coeffs, basis_coords, derivation_dim(n, k));
}

std::vector<IntLattice> dk_center(int n, int max_degree) {
  std::vector<IntLattice> out;
  for (int k = 1; k <= max_degree; ++k) out.push_back(dk_center_component(n, k));
  return out;
}

std::vector<IntLattice> dk_star_center(int n, int max_degree) {
  if (n < 3) throw std::invalid_argument("dk_star_center: need n >= 3");
  std::vector<IntLattice> out;
  if (max_degree < 1) return out;
  // Degree 1: the tau1(t_ij) are a Z-basis of DK_n(1).
  const auto gens = all_tau1(n);
  const IntLattice center1 = commutant_coefficients(gens, gens, n, 1);
  std::vector<SparseIntVector> projection;
  const std::size_t m = gens.size();
  for (std::size_t p = 0; p < m; ++p) {
    SparseIntVector col;
    if (p == 0) {
      for (std::size_t q = 1; q < m; ++q) col.push_back(q - 1, BigInt(-1));
    } else {
      col.push_back(p - 1, BigInt(1));
    }
    projection.push_back(std::move(col));
  }
  out.push_back(lattice_image(center1, projection, m - 1));
  // The ideal Z xi_bar sits in degree 1, so higher degrees see the center of DK_n.
  for (int k = 2; k <= max_degree; ++k) out.push_back(dk_center_component(n, k));
  return out;
}

CensusRow cokernel_census(int n, int k) {
  CensusRow r;
  r.n = n;
  r.k = k;
  r.rank_braidlike = braidlike_lattice(n, k).rank();
  r.rank_dk = dk_component(n, k).lattice.rank();
  r.gap = static_cast<std::int64_t>(r.rank_braidlike) - static_cast<std::int64_t>(r.rank_dk);
  r.formula_braidlike = braidlike_rank_formula(n, k);
  r.formula_dk = dk_rank_formula(n, k);
  if (k == 3) r.closed_form_dk = static_cast<std::int64_t>(n - 3) * (n - 2) * n * (n - 1) / 12;
  return r;
}

// ---------------------------------------------------------------------------

namespace {

BigInt binomial(int a, int b) {
  if (b < 0 || b > a) return 0;
  BigInt r = 1;
  for (int t = 1; t <= b; ++t) r = r * (a - b + t) / t;
  return r;
}

}  // namespace

Rational bernoulli(int j) {
  if (j < 0) throw std::invalid_argument("bernoulli: index must be >= 0");
  static std::mutex mutex;
  static std::vector<Rational> table{Rational(1)};
  std::lock_guard lock(mutex);
  // sum_{i=0}^{m} C(m+1, i) B_i = m + 1 for this generating function.
  while (static_cast<int>(table.size()) <= j) {
    const int m = static_cast<int>(table.size());
    Rational s = 0;
    for (int i = 0; i < m; ++i) s += Rational(binomial(m + 1, i)) * table[static_cast<std::size_t>(i)];
    table.push_back((Rational(m + 1) - s) / (m + 1));
  }
  return table[static_cast<std::size_t>(j)];
}

FaulhaberPoly::FaulhaberPoly(int alpha) : alpha_(alpha) {
  if (alpha < 0) throw std::invalid_argument("FaulhaberPoly: alpha must be >= 0");
  coeffs_.assign(static_cast<std::size_t>(alpha) + 2, Rational(0));
  for (int j = 0; j <= alpha; ++j)
    coeffs_[static_cast<std::size_t>(alpha + 1 - j)] = Rational(binomial(alpha + 1, j)) * bernoulli(j) / (alpha + 1);
}

Rational FaulhaberPoly::operator()(const Rational& m) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * m + *it;
  return acc;
}

BigInt faulhaber_sum(int alpha, std::int64_t m) {
  if (m < 0) throw std::invalid_argument("faulhaber_sum: m must be >= 0");
  const Rational v = FaulhaberPoly(alpha)(Rational(m));
  if (denominator(v) != 1) throw std::logic_error("faulhaber_sum: closed form is not integral");
  return BigInt(numerator(v));
}

BigInt direct_power_sum(int alpha, std::int64_t m) {
  BigInt s = 0;
  for (std::int64_t l = 1; l <= m; ++l) s += boost::multiprecision::pow(BigInt(l), static_cast<unsigned>(alpha));
  return s;
}

namespace {

using Poly = std::vector<Rational>;

void poly_add(Poly& a, const Poly& b, const Rational& scale) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += scale * b[i];
}

Poly monomial(int p) {
  Poly m(static_cast<std::size_t>(p) + 1, Rational(0));
  m.back() = 1;
  return m;
}

// d(n, k) as a polynomial in n.
Poly witt_poly(int k) {
  Poly d;
  for (int s = 1; s <= k; ++s)
    if (k % s == 0 && moebius(s) != 0) poly_add(d, monomial(k / s), Rational(moebius(s), k));
  return d;
}

}  // namespace

std::vector<Rational> cokernel_rank_polynomial(int k) {
  if (k < 1) throw std::invalid_argument("cokernel_rank_polynomial: k must be >= 1");
  if (k == 1) return {Rational(0)};
  Poly gap;
  Poly n_dk = witt_poly(k);
  n_dk.insert(n_dk.begin(), Rational(0));  // multiply by n
  poly_add(gap, n_dk, 1);
  poly_add(gap, witt_poly(k + 1), -1);
  // sum_{l=1}^{n-1} l^t = S_t(n) - n^t.
  for (int s = 1; s <= k; ++s) {
    if (k % s || moebius(s) == 0) continue;
    const int t = k / s;
    Poly partial = FaulhaberPoly(t).coeffs();
    poly_add(partial, monomial(t), -1);
    poly_add(gap, partial, Rational(-moebius(s), k));
  }
  while (gap.size() > 1 && gap.back() == 0) gap.pop_back();
  return gap;
}

}  // namespace lieforge
