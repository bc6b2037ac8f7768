#include "cli.hpp"

#include "lieforge/drinfeld_kohno.hpp"
#include "lieforge/magnus.hpp"
#include "lieforge/parallel.hpp"
#include "lieforge/suite.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <optional>
#include <ostream>
#include <stdexcept>

namespace lieforge::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr const char* kSchema = "lieforge/1";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string num(const BigInt& v) { return v.str(); }
std::string num(std::int64_t v) { return std::to_string(v); }
std::string num(std::size_t v) { return std::to_string(v); }
std::string num(const Rational& v) { return v.str(); }

json lie_json(const LieElement& x, int degree) {
  json coeffs = json::object();
  for (const auto& [w, c] : x.terms()) coeffs[w.str()] = num(c);
  return {{"degree", degree}, {"coeffs", std::move(coeffs)}};
}

json derivation_json(const HomDerivation& d) {
  json images = json::object();
  for (int i = 1; i <= d.rank(); ++i) images["X" + std::to_string(i)] = lie_json(d.image(i), d.degree() + 1);
  return {{"degree", d.degree()}, {"images", std::move(images)}};
}

json vector_json(const SparseIntVector& v, std::size_t dim) {
  json a = json::array();
  for (std::size_t i = 0; i < dim; ++i) a.push_back(num(v.at(i)));
  return a;
}

std::string tsv_cell(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

// NDJSON (one object per line, each tagged with the schema and table) or TSV
// (a header line whenever the table changes).
class Emitter {
 public:
  Emitter(std::ostream& out, bool tsv) : out_(out), tsv_(tsv) {}

  void row(const std::string& table, const json& fields) {
    if (tsv_) {
      if (table != current_) {
        if (!current_.empty()) out_ << '\n';
        out_ << "# " << table << '\n';
        bool first = true;
        for (const auto& [key, value] : fields.items()) {
          out_ << (first ? "" : "\t") << key;
          first = false;
        }
        out_ << '\n';
        current_ = table;
      }
      bool first = true;
      for (const auto& [key, value] : fields.items()) {
        out_ << (first ? "" : "\t") << tsv_cell(value);
        first = false;
      }
      out_ << '\n';
    } else {
      json line = {{"schema", kSchema}, {"table", table}};
      for (const auto& [key, value] : fields.items()) line[key] = value;
      out_ << line.dump() << '\n';
    }
    out_.flush();
  }

 private:
  std::ostream& out_;
  bool tsv_;
  std::string current_;
};

struct Common {
  std::string format = "json";
  int jobs = 1;
  int verbose = 0;
};

// Computes cells in chunks of `jobs` and emits each chunk in cell order, so
// output streams while staying independent of scheduling.
void run_cells(std::size_t count, const Common& c, std::ostream& err, const std::function<json(std::size_t)>& compute,
               const std::function<void(std::size_t, const json&)>& emit) {
  const auto chunk = static_cast<std::size_t>(std::max(1, c.jobs));
  for (std::size_t start = 0; start < count; start += chunk) {
    const std::size_t len = std::min(chunk, count - start);
    std::vector<json> rows(len);
    const auto t0 = std::chrono::steady_clock::now();
    parallel_for(len, c.jobs, [&](std::size_t i) { rows[i] = compute(start + i); });
    if (c.verbose) {
      const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      err << "lieforge: cells " << start << ".." << start + len - 1 << " in " << secs << "s\n";
    }
    for (std::size_t i = 0; i < len; ++i) emit(start + i, rows[i]);
  }
}

struct RankSelection {
  int n = 0;
  std::string n_range;
  int max_degree = 0;

  void attach(CLI::App* sub, bool with_degree = true) {
    sub->add_option("--n", n, "rank of the free group / Lie ring");
    sub->add_option("--n-range", n_range, "inclusive range a..b");
    if (with_degree) sub->add_option("--max-degree", max_degree, "largest degree")->required();
  }

  [[nodiscard]] std::vector<int> ranks(int minimum) const {
    std::vector<int> out;
    if (!n_range.empty()) {
      if (n != 0) throw UsageError("give either --n or --n-range");
      const auto dots = n_range.find("..");
      if (dots == std::string::npos) throw UsageError("--n-range must look like a..b");
      int lo = 0, hi = 0;
      try {
        lo = std::stoi(n_range.substr(0, dots));
        hi = std::stoi(n_range.substr(dots + 2));
      } catch (const std::exception&) {
        throw UsageError("--n-range must look like a..b");
      }
      if (lo > hi) throw UsageError("--n-range is empty");
      for (int v = lo; v <= hi; ++v) out.push_back(v);
    } else {
      if (n == 0) throw UsageError("--n is required");
      out.push_back(n);
    }
    for (int v : out)
      if (v < minimum) throw UsageError("n must be >= " + std::to_string(minimum));
    return out;
  }

  [[nodiscard]] int degree() const {
    if (max_degree < 1) throw UsageError("--max-degree must be >= 1");
    return max_degree;
  }
};

std::vector<std::pair<int, int>> cells(const std::vector<int>& ns, int max_degree) {
  std::vector<std::pair<int, int>> out;
  for (int n : ns)
    for (int k = 1; k <= max_degree; ++k) out.emplace_back(n, k);
  return out;
}

// ---------------------------------------------------------------------------

int cmd_witt(const RankSelection& sel, const Common& c, Emitter& em, std::ostream& err) {
  const auto cs = cells(sel.ranks(1), sel.degree());
  bool ok = true;
  run_cells(
      cs.size(), c, err,
      [&](std::size_t i) {
        const auto [n, k] = cs[i];
        const std::size_t computed = lyndon_words(n, k).size();
        const std::int64_t formula = witt_rank(n, k);
        return json{{"n", n}, {"k", k}, {"computed", num(computed)}, {"formula", num(formula)},
                    {"match", static_cast<std::int64_t>(computed) == formula}};
      },
      [&](std::size_t, const json& row) {
        ok = ok && row["match"].get<bool>();
        em.row("witt", row);
      });
  return ok ? 0 : 1;
}

struct RankObject {
  std::function<std::size_t(int, int)> computed;
  std::function<std::int64_t(int, int)> formula;
};

const std::map<std::string, RankObject>& rank_objects() {
  static const std::map<std::string, RankObject> objects = {
      {"der-t-boundary", {[](int n, int k) { return braidlike_lattice(n, k).rank(); }, braidlike_rank_formula}},
      {"dk", {[](int n, int k) { return dk_component(n, k).lattice.rank(); }, dk_rank_formula}},
      {"ev-boundary-image",
       {[](int n, int k) { return ev_boundary_image(n, k).rank(); }, [](int n, int k) { return witt_rank(n, k + 1); }}},
      {"inner-cap",
       {[](int n, int k) { return inner_cap_braidlike(n, k).rank(); }, [](int, int k) -> std::int64_t { return k == 1 ? 1 : 0; }}},
  };
  return objects;
}

int cmd_ranks(const std::string& object, const RankSelection& sel, const Common& c, Emitter& em, std::ostream& err) {
  const RankObject& obj = rank_objects().at(object);
  const auto cs = cells(sel.ranks(2), sel.degree());
  bool ok = true;
  run_cells(
      cs.size(), c, err,
      [&](std::size_t i) {
        const auto [n, k] = cs[i];
        const std::size_t computed = obj.computed(n, k);
        const std::int64_t formula = obj.formula(n, k);
        return json{{"object", object}, {"n", n}, {"k", k}, {"computed", num(computed)}, {"formula", num(formula)},
                    {"match", static_cast<std::int64_t>(computed) == formula}};
      },
      [&](std::size_t, const json& row) {
        ok = ok && row["match"].get<bool>();
        em.row("ranks", row);
      });
  return ok ? 0 : 1;
}

int cmd_census(const RankSelection& sel, int k, const Common& c, Emitter& em, std::ostream& err) {
  if (k < 1) throw UsageError("--degree must be >= 1");
  const auto ns = sel.ranks(2);
  bool ok = true;
  bool closed_form_agrees = true;
  run_cells(
      ns.size(), c, err,
      [&](std::size_t i) {
        const CensusRow r = cokernel_census(ns[i], k);
        const bool match = static_cast<std::int64_t>(r.rank_braidlike) == r.formula_braidlike &&
                           static_cast<std::int64_t>(r.rank_dk) == r.formula_dk;
        json row = {{"n", r.n},
                    {"k", r.k},
                    {"rank_braidlike", num(r.rank_braidlike)},
                    {"rank_dk", num(r.rank_dk)},
                    {"gap", num(r.gap)},
                    {"formula_braidlike", num(r.formula_braidlike)},
                    {"formula_dk", num(r.formula_dk)},
                    {"formula_gap", num(r.formula_braidlike - r.formula_dk)},
                    {"match", match}};
        if (r.closed_form_dk) {
          row["closed_form_dk"] = num(*r.closed_form_dk);
          row["closed_form_agrees"] = *r.closed_form_dk == static_cast<std::int64_t>(r.rank_dk);
        }
        return row;
      },
      [&](std::size_t, const json& row) {
        ok = ok && row["match"].get<bool>();
        if (row.contains("closed_form_agrees")) closed_form_agrees = closed_form_agrees && row["closed_form_agrees"].get<bool>();
        em.row("census", row);
      });

  // Conventions and published constants next to what the computation gives.
  const auto poly = cokernel_rank_polynomial(k);
  json coeffs = json::array();
  for (const auto& q : poly) coeffs.push_back(num(q));
  json notes = {{"k", k}, {"gap_polynomial_coeffs", coeffs}};
  if (k >= 3) {
    notes["gap_leading_coefficient"] = num(poly.back());
    notes["gap_leading_coefficient_quoted"] = num(Rational(3, 2 * k));
    notes["gap_leading_agrees"] = poly.back() == Rational(3, 2 * k);
  }
  notes["bernoulli_b1"] = num(bernoulli(1));
  notes["faulhaber_second_coefficient"] = num(FaulhaberPoly(k).coeffs().at(static_cast<std::size_t>(k)));
  notes["faulhaber_second_coefficient_displayed"] = "-1/2";
  notes["faulhaber_display_agrees"] = FaulhaberPoly(k).coeffs().at(static_cast<std::size_t>(k)) == Rational(-1, 2);
  if (k == 3) {
    notes["closed_form_dk"] = "(n-3)(n-2)n(n-1)/12";
    notes["closed_form_agrees"] = closed_form_agrees;
  }
  em.row("census-notes", notes);
  return ok ? 0 : 1;
}

int cmd_center(const std::string& object, const RankSelection& sel, const Common& c, Emitter& em, std::ostream& err) {
  const auto ns = sel.ranks(object == "dk" ? 2 : 3);
  const int D = sel.degree();
  bool ok = true;
  run_cells(
      ns.size(), c, err,
      [&](std::size_t i) {
        const int n = ns[i];
        json rows = json::array();
        const auto lat = object == "dk" ? dk_center(n, D) : dk_star_center(n, D);
        const IntLattice xi = IntLattice::from_generators(derivation_dim(n, 1), std::vector{derivation_coordinates(xi_bar(n))});
        for (int k = 1; k <= D; ++k) {
          const IntLattice& l = lat[static_cast<std::size_t>(k - 1)];
          const std::int64_t expected = object == "dk" && k == 1 ? 1 : 0;
          json basis = json::array();
          const bool star_degree1 = object == "dk-star" && k == 1;
          for (const auto& v : l.rows())
            basis.push_back(star_degree1 ? vector_json(v, l.ambient_dim()) : derivation_json(derivation_from_coordinates(n, k, v)));
          json row = {{"object", object}, {"n", n}, {"k", k}, {"rank", num(l.rank())}, {"expected", num(expected)}};
          bool match = static_cast<std::int64_t>(l.rank()) == expected;
          if (object == "dk" && k == 1) {
            row["spans_xi_bar"] = l == xi;
            match = match && l == xi;
          }
          row["match"] = match;
          row["basis"] = std::move(basis);
          rows.push_back(std::move(row));
        }
        return rows;
      },
      [&](std::size_t, const json& rows) {
        for (const auto& row : rows) {
          ok = ok && row["match"].get<bool>();
          em.row("center", row);
        }
      });
  return ok ? 0 : 1;
}

int cmd_degree(int n, int D, const std::string& word, const std::string& aut, Emitter& em) {
  if (n < 1) throw UsageError("--n is required");
  if (D < 1) throw UsageError("--max-degree must be >= 1");
  if (word.empty() == aut.empty()) throw UsageError("give exactly one of --word and --aut");
  json row = {{"n", n}, {"max_degree", D}};
  if (!word.empty()) {
    const ReducedWord w = ReducedWord::parse(n, word);
    const FiltrationDegree g = gamma_degree(w, D);
    row["word"] = w.str();
    row["gamma_degree"] = g.str(D);
    row["lie_class"] = g.is_finite() ? lie_json(lie_class(w, D), g.value) : json(nullptr);
  } else {
    if (D < 2) throw UsageError("--max-degree must be >= 2 for automorphisms");
    const AutWord a = AutWord::parse(n, aut);
    const EndoTable e = evaluate(a);
    const FiltrationDegree j = a_degree(e, D);
    row["aut"] = a.str();
    row["a_degree"] = j.str(D);
    row["johnson_image"] = j.is_finite() ? derivation_json(johnson_component(e, j.value)) : json(nullptr);
  }
  em.row("degree", row);
  return 0;
}

int cmd_expand(int n, int D, const std::string& word, const std::string& aut, Emitter& em) {
  if (n < 1) throw UsageError("--n is required");
  if (word.empty() == aut.empty()) throw UsageError("give exactly one of --word and --aut");
  json row = {{"n", n}};
  if (!word.empty()) {
    if (D < 1) throw UsageError("--max-degree must be >= 1");
    const ReducedWord w = ReducedWord::parse(n, word);
    const TruncSeries s = magnus_expand(w, D);
    json terms = json::object();
    for (int d = 0; d <= D; ++d) {
      const NCPolynomial part = s.degree_part(d);
      for (const auto& [mono, c] : part.terms()) {
        std::string key;
        for (int t = 0; t < mono.size(); ++t) key += "X" + std::to_string(mono[t]);
        terms[key.empty() ? "1" : key] = num(c);
      }
    }
    row["max_degree"] = D;
    row["word"] = w.str();
    row["series"] = std::move(terms);
  } else {
    const AutWord a = AutWord::parse(n, aut);
    const EndoTable e = evaluate(a);
    json images = json::object();
    for (int i = 1; i <= n; ++i) images["x" + std::to_string(i)] = e.image(i).str();
    row["aut"] = a.str();
    row["images"] = std::move(images);
  }
  em.row("expand", row);
  return 0;
}

struct VerifyOptions {
  std::string suite;
  int n = 0;
  int max_degree = 4;
  int samples = 200;
  std::uint64_t seed = 42;
  std::string family = "all";
};

void emit_report(const SuiteReport& r, bool tsv, Emitter& em) {
  if (!tsv) {
    em.row("verify", r.to_json());
    return;
  }
  for (const auto& c : r.checks)
    em.row("verify", json{{"suite", r.suite}, {"description", c.description}, {"expected", c.expected}, {"computed", c.computed},
                          {"pass", c.pass}});
}

int cmd_verify(const VerifyOptions& v, const Common& c, Emitter& em) {
  if (v.n < 2) throw UsageError("--n must be >= 2");
  const bool tsv = c.format == "tsv";
  std::vector<Family> families;
  if (v.family == "all") families = {Family::Inn, Family::Pn, Family::FnPn};
  else families = {parse_family(v.family)};

  using Job = std::function<SuiteReport()>;
  const int n = v.n, D = v.max_degree;
  std::vector<std::pair<std::string, Job>> jobs;
  std::vector<std::string> skipped;
  const bool all = v.suite == "all";
  auto want = [&](const std::string& name, bool applicable, Job job) {
    if (!all && v.suite != name) return;
    if (all && !applicable) {
      skipped.push_back(name);
      return;
    }
    jobs.emplace_back(name, std::move(job));
  };
  want("inner", D >= 3, [&] { return verify_inner_equality(n, D, v.samples, v.seed, c.jobs); });
  want("center-pn", n <= 6, [&] { return verify_center_pn(n); });
  want("quotient", n >= 3 && n <= 6, [&] { return verify_quotient_action(n); });
  for (Family f : families)
    want("johnson", n <= 4 && D <= 4, [&, f] { return verify_johnson_injectivity(f, n, D, c.jobs); });
  want("key-theorem", n >= 3 && n <= 4 && D <= 4, [&] { return verify_key_theorem_hypothesis(n, D); });
  want("triangular", n >= 3 && n <= 4, [&] { return verify_triangular_degree1(n); });
  want("partial-inner", true, [&] { return verify_partial_inner(n); });

  bool ok = true;
  json failed = json::array();
  for (const auto& [name, job] : jobs) {
    const SuiteReport r = job();
    emit_report(r, tsv, em);
    if (!r.pass()) {
      ok = false;
      failed.push_back(name);
    }
  }
  if (all) {
    json skip = json::array();
    for (const auto& s : skipped) skip.push_back(s);
    em.row("verify-summary", json{{"n", n}, {"max_degree", D}, {"pass", ok}, {"reports", num(jobs.size())},
                                  {"failed", std::move(failed)}, {"skipped", std::move(skip)}});
  }
  return ok ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with free Lie rings, braid automorphisms and Johnson images.", "lieforge"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_option("--format", common.format, "json (one object per line) or tsv")->check(CLI::IsMember({"json", "tsv"}));
  app.add_option("--jobs", common.jobs, "worker threads")->envname("LIEFORGE_JOBS")->check(CLI::Range(1, 1024));
  app.add_flag("-v,--verbose", common.verbose, "timings on stderr");

  RankSelection witt_sel, ranks_sel, census_sel, center_sel;
  auto* witt = app.add_subcommand("witt", "Lyndon counts against the Witt formula");
  witt_sel.attach(witt);

  std::string ranks_object;
  auto* ranks = app.add_subcommand("ranks", "lattice ranks with a formula cross-check");
  ranks->add_option("--object", ranks_object)->required()->check(CLI::IsMember({"der-t-boundary", "dk", "ev-boundary-image", "inner-cap"}));
  ranks_sel.attach(ranks);

  int census_degree = 0;
  auto* census = app.add_subcommand("census", "braid-like versus Drinfeld-Kohno ranks and their gap");
  census_sel.attach(census, false);
  census->add_option("--degree", census_degree)->required();

  std::string center_object;
  auto* center = app.add_subcommand("center", "degreewise centers");
  center->add_option("--object", center_object)->required()->check(CLI::IsMember({"dk", "dk-star"}));
  center_sel.attach(center);

  int deg_n = 0, deg_d = 0;
  std::string deg_word, deg_aut;
  auto* degree = app.add_subcommand("degree", "lower central series degree of a word, or Andreadakis degree of an automorphism");
  degree->add_option("--n", deg_n)->required();
  degree->add_option("--max-degree", deg_d)->required();
  degree->add_option("--word", deg_word);
  degree->add_option("--aut", deg_aut);

  int exp_n = 0, exp_d = 0;
  std::string exp_word, exp_aut;
  auto* expand = app.add_subcommand("expand", "Magnus expansion of a word, or images of an automorphism");
  expand->add_option("--n", exp_n)->required();
  expand->add_option("--max-degree", exp_d);
  expand->add_option("--word", exp_word);
  expand->add_option("--aut", exp_aut);

  VerifyOptions vopt;
  auto* verify = app.add_subcommand("verify", "verification suites");
  verify->add_option("suite", vopt.suite)
      ->required()
      ->check(CLI::IsMember({"inner", "center-pn", "quotient", "johnson", "key-theorem", "triangular", "partial-inner", "all"}));
  verify->add_option("--n", vopt.n)->required();
  verify->add_option("--max-degree", vopt.max_degree)->capture_default_str();
  verify->add_option("--samples", vopt.samples)->capture_default_str()->check(CLI::NonNegativeNumber);
  verify->add_option("--seed", vopt.seed)->capture_default_str();
  verify->add_option("--family", vopt.family)->capture_default_str()->check(CLI::IsMember({"Inn", "Pn", "FnPn", "all"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    const CLI::App* target = &app;
    while (!target->get_subcommands().empty()) target = target->get_subcommands().front();
    out << target->help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "lieforge: " << e.what() << "\n";
    return 2;
  }

  Emitter em(out, common.format == "tsv");
  try {
    if (*witt) return cmd_witt(witt_sel, common, em, err);
    if (*ranks) return cmd_ranks(ranks_object, ranks_sel, common, em, err);
    if (*census) return cmd_census(census_sel, census_degree, common, em, err);
    if (*center) return cmd_center(center_object, center_sel, common, em, err);
    if (*degree) return cmd_degree(deg_n, deg_d, deg_word, deg_aut, em);
    if (*expand) return cmd_expand(exp_n, exp_d, exp_word, exp_aut, em);
    if (*verify) return cmd_verify(vopt, common, em);
  } catch (const UsageError& e) {
    err << "lieforge: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "lieforge: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    err << "lieforge: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "lieforge: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "lieforge: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace lieforge::cli
