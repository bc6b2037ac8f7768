#include "lieforge/suite.hpp"

#include "lieforge/drinfeld_kohno.hpp"
#include "lieforge/magnus.hpp"
#include "lieforge/parallel.hpp"

#include <random>
#include <stdexcept>

namespace lieforge {

namespace {

ReducedWord gen(int n, int i) { return ReducedWord::generator(n, i); }

std::string yes_no(bool b) { return b ? "true" : "false"; }

IntLattice span_of(std::size_t dim, const std::vector<SparseIntVector>& rows) {
  return IntLattice::from_generators(dim, rows);
}

std::string rank_str(const IntLattice& l) { return std::to_string(l.rank()); }

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

// A group element modulo Gamma_{D+1} together with its inverse, so
// commutators need no inversion.
struct Element {
  TruncatedEndo fwd;
  TruncatedEndo inv;
  std::string label;
};

Element from_word(const AutWord& w, int truncation) {
  return {TruncatedEndo(evaluate(w), truncation), TruncatedEndo(evaluate(w.inverse()), truncation), w.str()};
}

// [a, b] = a b a^-1 b^-1.
Element commutator(const Element& a, const Element& b) {
  return {compose(a.fwd, compose(b.fwd, compose(a.inv, b.inv))), compose(b.fwd, compose(a.fwd, compose(b.inv, a.inv))),
          "[" + a.label + "," + b.label + "]"};
}

Element product(const Element& a, const Element& b) {
  return {compose(a.fwd, b.fwd), compose(b.inv, a.inv), a.label + "." + b.label};
}

Element inverse(const Element& a) {
  const bool simple = a.label.find_first_of(".[") == std::string::npos;
  return {a.inv, a.fwd, simple ? a.label + "^-1" : "(" + a.label + ")^-1"};
}

constexpr std::size_t kCandidateCap = 2000;

struct FamilyBuild {
  std::vector<FamilyLattice> lattices;
  std::vector<std::vector<Element>> spanning;  // per degree
};

FamilyBuild build_family(Family f, int n, int max_degree, int jobs) {
  FamilyBuild out;
  std::vector<Element> gens;
  for (const AutWord& w : family_generators(f, n)) gens.push_back(from_word(w, max_degree + 1));

  std::vector<Element> prev;
  for (int k = 1; k <= max_degree; ++k) {
    std::vector<Element> cands;
    if (k == 1) {
      cands = gens;
    } else {
      for (const Element& s : prev)
        for (const Element& g : out.spanning.front()) {
          if (cands.size() >= kCandidateCap) break;
          cands.push_back(commutator(s, g));
        }
    }
    std::vector<SparseIntVector> coords(cands.size());
    parallel_for(cands.size(), jobs, [&](std::size_t i) {
      coords[i] = derivation_coordinates(johnson_component(cands[i].fwd, k));
    });
    LatticeBuilder b(derivation_dim(n, k));
    FamilyLattice fl;
    fl.k = k;
    fl.candidates = cands.size();
    std::vector<Element> kept;
    for (std::size_t i = 0; i < cands.size(); ++i)
      if (b.insert(coords[i])) {
        fl.spanning.push_back(cands[i].label);
        kept.push_back(std::move(cands[i]));
      }
    fl.lattice = b.build();
    out.lattices.push_back(std::move(fl));
    out.spanning.push_back(kept);
    prev = std::move(kept);
  }
  return out;
}

}  // namespace

bool SuiteReport::pass() const { return failures() == 0; }

void SuiteReport::add(std::string description, std::string expected, std::string computed, bool ok) {
  checks.push_back({std::move(description), std::move(expected), std::move(computed), ok});
}

void SuiteReport::add_eq(std::string description, std::string expected, std::string computed) {
  const bool ok = expected == computed;
  add(std::move(description), std::move(expected), std::move(computed), ok);
}

std::size_t SuiteReport::failures() const {
  std::size_t f = 0;
  for (const auto& c : checks) f += c.pass ? 0 : 1;
  return f;
}

nlohmann::ordered_json SuiteReport::to_json() const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["parameters"] = parameters;
  j["pass"] = pass();
  j["failures"] = std::to_string(failures());
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : checks)
    arr.push_back({{"description", c.description}, {"expected", c.expected}, {"computed", c.computed}, {"pass", c.pass}});
  j["checks"] = std::move(arr);
  return j;
}

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  std::uint64_t s = seed;
  std::uint64_t h = splitmix64(s);
  for (std::uint64_t v : {a, b, c}) {
    s = h ^ v;
    h = splitmix64(s);
  }
  return h;
}

ReducedWord sample_gamma_word(int n, int d, std::uint64_t stream_seed) {
  require(n >= 2 && d >= 1, "sample_gamma_word: need n >= 2, d >= 1");
  std::mt19937_64 rng(stream_seed);
  auto letter = [&] {
    const int g = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    return ReducedWord::generator(n, g, rng() % 2 ? 1 : -1);
  };
  auto short_word = [&] {
    ReducedWord w = letter();
    if (rng() % 2) w = w * letter();
    return w;
  };
  auto left_normed = [&](int weight) {
    ReducedWord c = short_word();
    for (int t = 2; t <= weight; ++t) c = word_commutator(c, short_word());
    return c;
  };
  for (int attempt = 0; attempt < 10000; ++attempt) {
    ReducedWord w = left_normed(d);
    switch (rng() % 3) {
      case 0: break;
      case 1: w = w * left_normed(d); break;
      default: w = w * left_normed(d + 1); break;
    }
    const FiltrationDegree g = gamma_degree(w, d);
    if (g.is_finite() && g.value == d) return w;
  }
  throw std::runtime_error("sample_gamma_word: no sample of the requested degree");
}

SuiteReport verify_inner_equality(int n, int max_degree, int samples, std::uint64_t seed, int jobs) {
  require(n >= 2 && max_degree >= 3 && samples >= 0, "verify_inner_equality: need n >= 2, D >= 3");
  SuiteReport r;
  r.suite = "inner";
  r.parameters = {{"n", n}, {"max_degree", max_degree}, {"samples", samples}, {"seed", std::to_string(seed)}};

  auto both = [&](const ReducedWord& w) {
    return std::pair{a_degree(EndoTable::inner(w), max_degree), gamma_degree(w, max_degree)};
  };
  const std::vector<std::pair<std::string, std::string>> fixed = {
      {"x1", "1"}, {"[x1,x2]", "2"}, {"[x1,[x2,x1]] [x1,x2]", "2"}};
  for (const auto& [text, expect] : fixed) {
    const auto [a, g] = both(ReducedWord::parse(n, text));
    r.add_eq("a_degree(c_w) for w = " + text, expect, a.str(max_degree));
    r.add_eq("gamma_degree(w) for w = " + text, expect, g.str(max_degree));
  }

  const auto per = static_cast<std::size_t>(samples);
  for (int d = 1; d < max_degree; ++d) {
    std::vector<ReducedWord> words(per);
    std::vector<char> ok(per, 0);
    std::vector<std::string> seen(per);
    parallel_for(per, jobs, [&](std::size_t s) {
      words[s] = sample_gamma_word(n, d, derive_seed(seed, static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(d), s));
      const auto [a, g] = both(words[s]);
      ok[s] = a == g && g == FiltrationDegree::finite(d);
      seen[s] = a.str(max_degree) + " vs " + g.str(max_degree);
    });
    std::size_t good = 0;
    std::string first_bad;
    for (std::size_t s = 0; s < per; ++s) {
      if (ok[s]) ++good;
      else if (first_bad.empty()) first_bad = "; first failure w = " + words[s].str() + " (" + seen[s] + ")";
    }
    r.add_eq("a_degree(c_w) = gamma_degree(w) = " + std::to_string(d) + " on stratified samples",
             std::to_string(per) + "/" + std::to_string(per), std::to_string(good) + "/" + std::to_string(per) + first_bad);
  }
  return r;
}

SuiteReport verify_center_pn(int n) {
  require(n >= 2 && n <= 6, "verify_center_pn: need 2 <= n <= 6");
  SuiteReport r;
  r.suite = "center-pn";
  r.parameters = {{"n", n}};
  const AutWord xw = xi_word(n);
  const EndoTable xi = evaluate(xw);
  r.add_eq("xi_n o c_boundary = id", "true", yes_no(endo_equal(endo_compose(xi, EndoTable::inner(boundary(n))), EndoTable::identity(n))));
  std::size_t commuting = 0, total = 0;
  std::string bad;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      const EndoTable a = pure_a_table(i, j, n);
      ++total;
      if (endo_equal(endo_compose(xi, a), endo_compose(a, xi))) ++commuting;
      else if (bad.empty()) bad = " (fails for A(" + std::to_string(i) + "," + std::to_string(j) + "))";
    }
  r.add_eq("xi_n commutes with every A_ij", std::to_string(total) + "/" + std::to_string(total),
           std::to_string(commuting) + "/" + std::to_string(total) + bad);
  const auto ab = braid_abelianize(xw);
  std::string got, want;
  for (std::size_t t = 0; t < ab.size(); ++t) {
    got += (t ? "," : "") + std::to_string(ab[t]);
    want += t ? ",1" : "1";
  }
  r.add_eq("braid_abelianize(xi_n)", want, got);
  return r;
}

SuiteReport verify_quotient_action(int n) {
  require(n >= 3 && n <= 6, "verify_quotient_action: need 3 <= n <= 6");
  SuiteReport r;
  r.suite = "quotient";
  r.parameters = {{"n", n}};
  for (int j = 1; j < n; ++j) {
    ReducedWord prefix = ReducedWord::identity(n - 1);
    for (int t = 1; t <= j; ++t) prefix = prefix * gen(n - 1, t);
    const EndoTable q = quotient_table(c_j_table(j, n));
    r.add_eq("quotient(C(" + std::to_string(j) + ")) = c_{x1..x" + std::to_string(j) + "}", "true",
             yes_no(endo_equal(q, EndoTable::inner(prefix))));
  }
  r.add_eq("quotient(xi_n) = id", "true", yes_no(endo_equal(quotient_table(evaluate(xi_word(n))), EndoTable::identity(n - 1))));
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const EndoTable beta = pure_a_table(i, j, n - 1);
      r.add_eq("quotient(s(A(" + std::to_string(i) + "," + std::to_string(j) + "))) = A(" + std::to_string(i) + "," +
                   std::to_string(j) + ")",
               "true", yes_no(endo_equal(quotient_table(extend_table(beta)), beta)));
    }
  return r;
}

std::int64_t family_expected_rank(Family f, int n, int k) {
  switch (f) {
    case Family::Inn: return witt_rank(n, k);
    case Family::Pn: return dk_rank_formula(n, k);
    case Family::FnPn: return witt_rank(n, k) + dk_rank_formula(n, k) - (k == 1 ? 1 : 0);
    default: throw std::invalid_argument("family_expected_rank: family must be Inn, Pn or FnPn");
  }
}

std::vector<FamilyLattice> family_lattices(Family f, int n, int max_degree, int jobs) {
  return build_family(f, n, max_degree, jobs).lattices;
}

SuiteReport verify_johnson_injectivity(Family f, int n, int max_degree, int jobs) {
  require(f == Family::Inn || f == Family::Pn || f == Family::FnPn,
          "verify_johnson_injectivity: family must be Inn, Pn or FnPn");
  require(n >= 2 && n <= 4 && max_degree >= 1 && max_degree <= 4, "verify_johnson_injectivity: need 2 <= n <= 4, 1 <= D <= 4");
  SuiteReport r;
  r.suite = "johnson";
  r.parameters = {{"family", family_name(f)}, {"n", n}, {"max_degree", max_degree}};
  const FamilyBuild fb = build_family(f, n, max_degree, jobs);
  for (const FamilyLattice& fl : fb.lattices)
    r.add_eq("rank of degree-" + std::to_string(fl.k) + " Johnson lattice (" + std::to_string(fl.candidates) + " commutators)",
             std::to_string(family_expected_rank(f, n, fl.k)), rank_str(fl.lattice));

  if (f == Family::Pn)
    for (const FamilyLattice& fl : fb.lattices)
      r.add_eq("degree-" + std::to_string(fl.k) + " lattice equals DK_n", "true", yes_no(fl.lattice == dk_component(n, fl.k).lattice));

  // Products of random family commutators land in the lattice of their degree.
  std::mt19937_64 rng(derive_seed(42, static_cast<std::uint64_t>(f), static_cast<std::uint64_t>(n)));
  for (int k = 1; k <= max_degree; ++k) {
    const auto& pool = fb.spanning[static_cast<std::size_t>(k - 1)];
    if (pool.empty()) continue;
    std::size_t inside = 0;
    const std::size_t trials = 5;
    std::string bad;
    for (std::size_t t = 0; t < trials; ++t) {
      Element e = pool[rng() % pool.size()];
      for (int m = 0; m < 2; ++m) {
        const Element& p = pool[rng() % pool.size()];
        e = product(e, rng() % 2 ? p : inverse(p));
      }
      const FiltrationDegree deg = a_degree(e.fwd);
      bool ok = true;
      if (deg.is_finite()) {
        const auto& lat = fb.lattices[static_cast<std::size_t>(deg.value - 1)].lattice;
        ok = deg.value >= k && lat.contains(derivation_coordinates(johnson_component(e.fwd, deg.value)));
      }
      if (ok) ++inside;
      else if (bad.empty()) bad = " (fails for " + e.label + ")";
    }
    r.add_eq("sampled degree-" + std::to_string(k) + " products have Johnson image in the family lattice",
             std::to_string(trials) + "/" + std::to_string(trials), std::to_string(inside) + "/" + std::to_string(trials) + bad);
  }

  if (f == Family::Pn && n <= 4) {
    std::size_t ok = 0, total = 0;
    std::string bad;
    for (int k = 1; k <= n; ++k)
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
          if (i == k || j == k) continue;
          const Element a = from_word(AutWord(n, {AutSymbol::pure_a(std::min(i, k), std::max(i, k))}), 3);
          const Element b = from_word(AutWord(n, {AutSymbol::pure_a(std::min(j, k), std::max(j, k))}), 3);
          const Element c = commutator(a, b);
          const HomDerivation lhs = johnson_component(c.fwd, 2);
          const HomDerivation rhs = der_bracket(tau1(i, k, n), tau1(j, k, n));
          ++total;
          if (lhs == rhs) ++ok;
          else if (bad.empty()) bad = " (fails for " + c.label + ")";
        }
    r.add_eq("johnson([A_ik,A_jk]) = [tau1(t_ik), tau1(t_jk)] over all triples",
             std::to_string(total) + "/" + std::to_string(total), std::to_string(ok) + "/" + std::to_string(total) + bad);
  }
  return r;
}

SuiteReport verify_key_theorem_hypothesis(int n, int max_degree) {
  require(n >= 3 && n <= 4 && max_degree >= 1 && max_degree <= 4, "verify_key_theorem_hypothesis: need 3 <= n <= 4, 1 <= D <= 4");
  SuiteReport r;
  r.suite = "key-theorem";
  r.parameters = {{"n", n}, {"max_degree", max_degree}};
  const HomDerivation ad_b = ad_derivation(boundary_element(n));
  const SparseIntVector ad_b_coords = derivation_coordinates(ad_b);
  for (int k = 1; k <= max_degree; ++k) {
    const IntLattice cap = lattice_intersect(dk_component(n, k).lattice, ad_lattice(n, k));
    const std::string label = "DK_n cap ad(L_n) in degree " + std::to_string(k);
    if (k == 1) {
      const IntLattice expect = span_of(derivation_dim(n, 1), {ad_b_coords});
      r.add_eq(label + " equals span{ad(boundary)}", "true", yes_no(cap == expect));
      r.add_eq(label + ", rank", "1", rank_str(cap));
    } else {
      r.add_eq(label + ", rank", "0", rank_str(cap));
    }
  }
  const EndoTable c_b = evaluate(xi_word(n).inverse());
  r.add_eq("xi_n^-1 = c_boundary", "true", yes_no(endo_equal(c_b, EndoTable::inner(boundary(n)))));
  r.add_eq("johnson(xi_n^-1) = ad(boundary)", "true", yes_no(johnson_component(c_b, 1) == ad_b));
  r.add_eq("xi_bar = -ad(boundary)", "true", yes_no(xi_bar(n) == BigInt(-1) * ad_b));
  return r;
}

SuiteReport verify_triangular_degree1(int n) {
  require(n >= 3 && n <= 4, "verify_triangular_degree1: need 3 <= n <= 4");
  SuiteReport r;
  r.suite = "triangular";
  r.parameters = {{"n", n}};
  for (const AutWord& w : family_generators(Family::IAnPlus, n)) {
    const EndoTable e = evaluate(w);
    r.add_eq("a_degree(" + w.str() + ")", "1", a_degree(e, 2).str(2));
    r.add_eq("johnson(" + w.str() + ") kills X1", "true", yes_no(johnson_component(e, 1).image(1).is_zero()));
  }
  const LieElement x1 = LieElement::generator(n, 1);
  const IntLattice only = span_of(static_cast<std::size_t>(n), {lie_coordinates(x1, 1)});
  r.add_eq("centralizer of X1 in degree 1 is span{X1}", "true", yes_no(centralizer_of_linear(x1, 1) == only));
  r.add_eq("c_x1 is triangular", "true", yes_no(is_triangular(EndoTable::inner(gen(n, 1)))));
  {
    const EndoTable phi = evaluate(AutWord::parse(n, "tri(3; 1; [x1,x2])"));
    const HomDerivation j = johnson_component(phi, 1);
    const LieElement x12 = lie_bracket(x1, LieElement::generator(n, 2));
    r.add_eq("x3 -> x3 [x1,x2]: johnson sends X3 to [X1,X2]", x12.str(), j.image(3).str());
    r.add_eq("x3 -> x3 [x1,x2]: johnson sends X1 to 0", "0", j.image(1).is_zero() ? "0" : j.image(1).str());
  }
  return r;
}

SuiteReport verify_partial_inner(int n) {
  require(n >= 2, "verify_partial_inner: need n >= 2");
  SuiteReport r;
  r.suite = "partial-inner";
  r.parameters = {{"n", n}};
  for (int k = 2; k <= n; ++k)
    for (int i = 1; i < k; ++i) {
      const AutWord lhs(n, {AutSymbol::partial_inner(k, i), AutSymbol::partial_inner(k - 1, i, -1)});
      const std::string tag = std::to_string(k) + "," + std::to_string(i);
      r.add_eq("pin(" + tag + ") pin(" + std::to_string(k - 1) + "," + std::to_string(i) + ")^-1 = chi(" + tag + ")", "true",
               yes_no(endo_equal(evaluate(lhs), symbol_table(AutSymbol::chi(k, i), n))));
    }
  return r;
}

}  // namespace lieforge
