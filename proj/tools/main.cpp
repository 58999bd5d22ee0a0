// Command-line front end: evaluate the kernel and bound families, list and
// verify catalog claims, probe sharp boundaries, and dump reports as JSON
// or per-sample CSV. Exit codes: 0 pass, 1 fail, 2 usage, 3 inconclusive.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cusa/bounds.hpp"
#include "cusa/claims.hpp"
#include "cusa/constants.hpp"
#include "cusa/invtrig.hpp"
#include "cusa/kernel.hpp"
#include "cusa/means.hpp"
#include "cusa/series.hpp"
#include "cusa/verify.hpp"

using nlohmann::json;

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_sink(const std::string& path, const std::string& content) {
  if (path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << content;
}

int status_rc(const std::string& status) {
  if (status == "pass") return 0;
  if (status == "fail") return 1;
  return 3;
}

// ---------------------------------------------------------------------------
// CUSA_CONFIG: optional JSON defaults {grid, random, seed, delta}; explicit
// flags win, with a notice on stderr so silent shadowing cannot happen.
// ---------------------------------------------------------------------------

struct Config {
  bool loaded = false;
  std::string path;
  std::optional<int> grid, random;
  std::optional<std::uint64_t> seed;
  std::optional<std::vector<double>> delta;
};

Config load_config() {
  Config cfg;
  const char* env = std::getenv("CUSA_CONFIG");
  if (!env || !*env) return cfg;
  std::ifstream in(env);
  if (!in) throw std::runtime_error(std::string("CUSA_CONFIG: cannot open ") + env);
  json j = json::parse(in);
  cfg.loaded = true;
  cfg.path = env;
  if (j.contains("grid")) cfg.grid = j.at("grid").get<int>();
  if (j.contains("random")) cfg.random = j.at("random").get<int>();
  if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("delta")) {
    if (j.at("delta").is_array())
      cfg.delta = j.at("delta").get<std::vector<double>>();
    else
      cfg.delta = std::vector<double>{j.at("delta").get<double>()};
  }
  return cfg;
}

struct SamplingFlags {
  int grid = 4096;
  int random = 4096;
  std::uint64_t seed = 1;
  CLI::Option* grid_opt = nullptr;
  CLI::Option* random_opt = nullptr;
  CLI::Option* seed_opt = nullptr;

  void attach(CLI::App* sub) {
    grid_opt = sub->add_option("--grid", grid, "grid sample count (>= 16)");
    random_opt = sub->add_option("--random", random, "random sample count");
    seed_opt = sub->add_option("--seed", seed, "random-stream seed");
  }

  cusa::SampleSpec spec(const Config& cfg) const {
    cusa::SampleSpec s;
    s.grid_points = grid;
    s.random_points = random;
    s.seed = seed;
    if (cfg.loaded) {
      if (cfg.grid) {
        if (grid_opt->count())
          std::cerr << "note: --grid overrides config grid = " << *cfg.grid
                    << " from " << cfg.path << "\n";
        else
          s.grid_points = *cfg.grid;
      }
      if (cfg.random) {
        if (random_opt->count())
          std::cerr << "note: --random overrides config random = "
                    << *cfg.random << " from " << cfg.path << "\n";
        else
          s.random_points = *cfg.random;
      }
      if (cfg.seed) {
        if (seed_opt->count())
          std::cerr << "note: --seed overrides config seed = " << *cfg.seed
                    << " from " << cfg.path << "\n";
        else
          s.seed = *cfg.seed;
      }
    }
    return s;
  }
};

// Claim-parameter flags shared by verify/probe.
struct ParamFlags {
  std::map<std::string, double> vals;
  std::map<std::string, CLI::Option*> opts;

  void attach(CLI::App* sub) {
    for (const char* name :
         {"p", "q", "k", "p1", "p2", "q1", "q2", "eta", "xi"}) {
      vals[name] = 0.0;
      opts[name] = sub->add_option(std::string("--") + name, vals[name],
                                   std::string("claim parameter ") + name);
    }
  }

  cusa::ParamMap overrides() const {
    cusa::ParamMap out;
    for (const auto& [name, opt] : opts)
      if (opt->count()) out[name] = vals.at(name);
    return out;
  }
};

// ---------------------------------------------------------------------------
// JSON shapes
// ---------------------------------------------------------------------------

json report_json(const cusa::Report& rep) {
  json v = json::array();
  for (const auto& viol : rep.violations)
    v.push_back({{"x", viol.x}, {"lhs", viol.lhs}, {"rhs", viol.rhs}});
  return json{{"claim", rep.claim_id},
              {"params", rep.param_values},
              {"samples", rep.samples_evaluated},
              {"min_margin", rep.min_margin},
              {"argmin", rep.argmin},
              {"inconclusive", rep.inconclusive_count},
              {"violations", std::move(v)},
              {"status", rep.status},
              {"seed", rep.seed}};
}

void print_report(const cusa::Report& rep) {
  std::cout << "claim = " << rep.claim_id << "\n";
  if (!rep.param_values.empty()) {
    std::cout << "params:";
    for (const auto& [name, value] : rep.param_values)
      std::cout << " " << name << " = " << fmt(value);
    std::cout << "\n";
  }
  std::cout << "samples = " << rep.samples_evaluated
            << ", inconclusive = " << rep.inconclusive_count
            << ", seed = " << rep.seed << "\n";
  std::cout << "status = " << rep.status
            << ", min_margin = " << fmt(rep.min_margin)
            << " at x = " << fmt(rep.argmin) << "\n";
  std::size_t shown = 0;
  for (const auto& v : rep.violations) {
    if (shown++ == 8) {
      std::cout << "  ... " << rep.violations.size() << " recorded\n";
      break;
    }
    std::cout << "  violation: x = " << fmt(v.x) << ", lhs = " << fmt(v.lhs)
              << ", rhs = " << fmt(v.rhs) << "\n";
  }
}

std::string rows_csv(const std::vector<cusa::SampleRow>& rows) {
  std::ostringstream out;
  out << "x,lhs,rhs,margin\n";
  for (const auto& r : rows)
    out << fmt17(r.x) << "," << fmt17(r.lhs) << "," << fmt17(r.rhs) << ","
        << fmt17(r.margin) << "\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// subcommand bodies
// ---------------------------------------------------------------------------

int run_eval(const std::string& fn, double p, double q, double x, double t,
             const std::string& json_out) {
  double value = 0.0;
  std::string branch = "direct";
  json extra;
  if (fn == "T" || fn == "D") {
    const cusa::ParamPoint pp(p, q);
    const cusa::BranchedValue bv =
        fn == "T" ? cusa::t_pq_branched(pp, x) : cusa::d_pq_branched(pp, x);
    value = bv.value;
    branch = cusa::to_string(bv.branch);
    extra["region"] = cusa::to_string(pp.monotonicity_region);
    extra["in_E"] = pp.in_E;
  } else if (fn == "g1") {
    value = cusa::g1(q, x);
  } else if (fn == "g2") {
    value = cusa::g2(x);
  } else if (fn == "f2") {
    value = cusa::f2(cusa::ParamPoint(p, q), x);
  } else if (fn == "A" || fn == "B" || fn == "C") {
    const cusa::ABC v = cusa::abc(x);
    value = fn == "A" ? v.A : fn == "B" ? v.B : v.C;
  } else if (fn == "u") {
    value = cusa::u_p(p, t);
  } else {
    throw std::invalid_argument("eval: unknown --fn " + fn +
                                " (T, D, g1, g2, f2, A, B, C, u)");
  }

  if (!json_out.empty()) {
    json j{{"fn", fn}, {"value", value}, {"branch", branch}};
    if (fn == "T" || fn == "D" || fn == "f2") {
      j["p"] = p;
      j["q"] = q;
    }
    if (fn == "g1") j["q"] = q;
    j[fn == "u" ? "t" : "x"] = fn == "u" ? t : x;
    for (auto& [k, v] : extra.items()) j[k] = v;
    write_sink(json_out, j.dump(2) + "\n");
  } else {
    std::cout << fn << " = " << fmt(value) << " (branch: " << branch << ")\n";
    if (extra.contains("region"))
      std::cout << "region = " << extra["region"].get<std::string>()
                << ", in_E = " << (extra["in_E"].get<bool>() ? "yes" : "no")
                << "\n";
  }
  return 0;
}

int run_bound(const std::string& family, double t, double p, double q,
              double k, const std::string& json_out) {
  cusa::BranchedValue bv;
  if (family == "M")
    bv = cusa::bound_M_branched(t, p, q);
  else if (family == "N")
    bv = cusa::bound_N_branched(t, p, q);
  else if (family == "M_kq")
    bv = cusa::bound_M_kq_branched(t, k, q);
  else if (family == "M_line")
    bv = cusa::bound_M_line_branched(t, q);
  else
    throw std::invalid_argument("bound: unknown --family " + family +
                                " (M, N, M_kq, M_line)");
  if (!json_out.empty()) {
    json j{{"family", family},
           {"t", t},
           {"value", bv.value},
           {"branch", cusa::to_string(bv.branch)}};
    if (family == "M" || family == "N") j["p"] = p;
    if (family == "M_kq") j["k"] = k;
    j["q"] = q;
    write_sink(json_out, j.dump(2) + "\n");
  } else {
    std::cout << family << "(t = " << fmt(t) << ") = " << fmt17(bv.value)
              << " (branch: " << cusa::to_string(bv.branch) << ")\n";
  }
  return 0;
}

int run_constants(const std::string& json_out) {
  const cusa::SolvedConstant solved[] = {cusa::solve_p0(), cusa::solve_p0star(),
                                         cusa::solve_q0()};
  const std::pair<const char*, double> derived[] = {
      {"q_of_p(0)", cusa::q_of_p(0.0)},
      {"q_of_p(1)", cusa::q_of_p(1.0)},
      {"q_of_p(2)", cusa::q_of_p(2.0)},
      {"q_of_k(1)", cusa::q_of_k(1.0)},
      {"q_of_k(3/2)", cusa::q_of_k(1.5)},
      {"q_of_k(2)", cusa::q_of_k(2.0)},
      {"v_line(1)", cusa::v_line(1.0)},
      {"c_pq(0,0)", cusa::c_pq(0.0, 0.0)},
      {"c_pq(1,1)", cusa::c_pq(1.0, 1.0)},
  };
  if (!json_out.empty()) {
    json js = json::array();
    for (const auto& s : solved)
      js.push_back({{"name", s.name},
                    {"value", s.value},
                    {"residual", s.residual},
                    {"bracket", {s.bracket_lo, s.bracket_hi}}});
    json jd = json::array();
    for (const auto& [name, value] : derived)
      jd.push_back({{"name", name}, {"value", value}});
    write_sink(json_out,
               json{{"solved", js}, {"derived", jd}}.dump(2) + "\n");
  } else {
    for (const auto& s : solved)
      std::cout << s.name << " = " << fmt17(s.value)
                << "  (residual " << fmt(s.residual) << ", bracket ["
                << fmt(s.bracket_lo) << ", " << fmt(s.bracket_hi) << "])\n";
    for (const auto& [name, value] : derived)
      std::cout << name << " = " << fmt17(value) << "\n";
  }
  return 0;
}

int run_claims(const std::string& claim_id, const std::string& json_out) {
  const auto describe = [](const cusa::Claim& c) {
    json j{{"id", c.id},
           {"anchor", c.anchor},
           {"variable", std::string(1, c.variable)},
           {"domain", {c.lo, c.hi}},
           {"exprs", c.exprs},
           {"equivalent_to", c.equivalent_to}};
    json params = json::array();
    for (const auto& ps : c.params)
      params.push_back({{"name", ps.name},
                        {"default", ps.default_value},
                        {"constraint", ps.constraint_desc}});
    j["params"] = params;
    json bounds = json::array();
    for (const auto& b : c.sharp_boundaries)
      bounds.push_back(
          {{"param", b.param},
           {"boundary", b.boundary_name},
           {"fails", b.fails == cusa::SharpBoundary::FailSide::above
                         ? "above"
                         : "below"},
           {"orientation",
            b.orientation == cusa::SharpBoundary::Orientation::primary
                ? "primary"
                : "reversed"}});
    j["sharp_boundaries"] = bounds;
    j["instances"] = c.instances;
    return j;
  };

  if (!claim_id.empty()) {
    const cusa::Claim& c = cusa::lookup(claim_id);
    if (!json_out.empty()) {
      write_sink(json_out, describe(c).dump(2) + "\n");
      return 0;
    }
    std::cout << c.id << "  [" << c.anchor << "]\n";
    std::cout << "  domain: " << c.variable << " in (" << fmt(c.lo) << ", "
              << fmt(c.hi) << ")\n";
    std::cout << "  chain:  ";
    for (std::size_t i = 0; i < c.exprs.size(); ++i)
      std::cout << (i ? " < " : "") << c.exprs[i];
    std::cout << "\n";
    for (const auto& ps : c.params)
      std::cout << "  param " << ps.name << " = " << fmt(ps.default_value)
                << "  (" << ps.constraint_desc << ")\n";
    for (const auto& b : c.sharp_boundaries)
      std::cout << "  sharp: " << b.param << " at " << b.boundary_name
                << ", fails "
                << (b.fails == cusa::SharpBoundary::FailSide::above ? "above"
                                                                    : "below")
                << (b.orientation ==
                            cusa::SharpBoundary::Orientation::reversed
                        ? " (reversed chain)"
                        : "")
                << "\n";
    if (!c.equivalent_to.empty())
      std::cout << "  equivalent to: " << c.equivalent_to << "\n";
    for (const auto& inst : c.instances) {
      std::cout << "  instance:";
      if (inst.empty()) std::cout << " (defaults)";
      for (const auto& [name, value] : inst)
        std::cout << " " << name << " = " << fmt(value);
      std::cout << "\n";
    }
    return 0;
  }

  if (!json_out.empty()) {
    json all = json::array();
    for (const auto& c : cusa::catalog()) all.push_back(describe(c));
    write_sink(json_out, all.dump(2) + "\n");
    return 0;
  }
  for (const auto& c : cusa::catalog()) {
    std::cout << c.id;
    for (std::size_t i = c.id.size(); i < 20; ++i) std::cout << ' ';
    std::cout << c.variable << "  ";
    for (std::size_t i = 0; i < c.exprs.size(); ++i)
      std::cout << (i ? " < " : "") << c.exprs[i];
    std::cout << "\n";
  }
  std::cout << cusa::catalog().size() << " claims\n";
  return 0;
}

int run_verify(const std::string& claim_id, const ParamFlags& pf,
               const SamplingFlags& sf, const Config& cfg,
               const std::string& json_out, const std::string& csv_out) {
  const cusa::SampleSpec spec = sf.spec(cfg);
  const cusa::ParamMap overrides = pf.overrides();
  const cusa::Report rep = cusa::verify(claim_id, overrides, spec);
  if (!csv_out.empty())
    write_sink(csv_out, rows_csv(cusa::sample_rows(claim_id, overrides, spec)));
  if (!json_out.empty())
    write_sink(json_out, report_json(rep).dump(2) + "\n");
  if (json_out != "-") print_report(rep);
  return status_rc(rep.status);
}

int run_probe(const std::string& claim_id, const std::string& param,
              std::vector<double> deltas, CLI::Option* delta_opt,
              const SamplingFlags& sf, const Config& cfg,
              const std::string& json_out) {
  if (!delta_opt->count()) {
    if (cfg.loaded && cfg.delta)
      deltas = *cfg.delta;
    else
      deltas = {0.0, 1e-2};
  } else if (cfg.loaded && cfg.delta) {
    std::cerr << "note: --delta overrides config delta from " << cfg.path
              << "\n";
  }
  const cusa::SampleSpec spec = sf.spec(cfg);
  const auto results = cusa::probe_sharpness(claim_id, param, deltas, spec);

  bool all_ok = true;
  json jout = json::array();
  for (const auto& pr : results) {
    const bool expect_fail = pr.delta > 0.0;
    const std::string expected = expect_fail ? "fail" : "pass";
    const bool ok = pr.report.status == expected;
    all_ok = all_ok && ok;
    if (json_out.empty()) {
      std::cout << "probe " << claim_id << " " << pr.param << " at "
                << pr.boundary_name << (pr.reversed ? " (reversed chain)" : "")
                << ": delta = " << fmt(pr.delta) << " -> " << pr.param << " = "
                << fmt17(pr.pushed_value) << "\n";
      std::cout << "  status = " << pr.report.status << " (expected "
                << expected << ") " << (ok ? "OK" : "MISMATCH")
                << "; min_margin = " << fmt(pr.report.min_margin)
                << " at x = " << fmt(pr.report.argmin)
                << ", violations = " << pr.report.violations.size() << "\n";
    } else {
      jout.push_back({{"boundary", pr.boundary_name},
                      {"param", pr.param},
                      {"delta", pr.delta},
                      {"pushed", pr.pushed_value},
                      {"reversed", pr.reversed},
                      {"expected", expected},
                      {"matched", ok},
                      {"report", report_json(pr.report)}});
    }
  }
  if (!json_out.empty()) write_sink(json_out, jout.dump(2) + "\n");
  return all_ok ? 0 : 1;
}

int run_chain(const std::string& name, const SamplingFlags& sf,
              const Config& cfg, const std::string& json_out) {
  const cusa::Report rep = cusa::verify_chain(name, sf.spec(cfg));
  if (!json_out.empty())
    write_sink(json_out, report_json(rep).dump(2) + "\n");
  if (json_out != "-") print_report(rep);
  return status_rc(rep.status);
}

int run_invtrig(const std::string& kind, double t, double p, double q,
                const std::string& json_out) {
  cusa::InverseBoundPair b;
  if (kind == "arcsin-basic")
    b = cusa::arcsin_bounds_basic(t, p, q);
  else if (kind == "arcsin-halfangle")
    b = cusa::arcsin_bounds_halfangle(t, p, q);
  else if (kind == "arccos-basic")
    b = cusa::arccos_bounds(t, p, q, "basic");
  else if (kind == "arccos-halfangle")
    b = cusa::arccos_bounds(t, p, q, "halfangle");
  else if (kind == "arccos-carlson")
    b = cusa::arccos_bounds(t, p, q, "carlson_classic");
  else
    throw std::invalid_argument(
        "invtrig: unknown --kind " + kind +
        " (arcsin-basic, arcsin-halfangle, arccos-basic, arccos-halfangle, "
        "arccos-carlson)");
  const bool ok = b.lower <= b.target && b.target <= b.upper;
  if (!json_out.empty()) {
    write_sink(json_out, json{{"kind", kind},
                              {"family", b.family},
                              {"t", t},
                              {"p", b.p},
                              {"q", b.q},
                              {"lower", b.lower},
                              {"target", b.target},
                              {"upper", b.upper},
                              {"enclosed", ok}}
                                 .dump(2) +
                             "\n");
  } else {
    std::cout << kind << ": t = " << fmt(t) << ", p = " << fmt(b.p)
              << ", q = " << fmt(b.q) << "\n";
    std::cout << "lower = " << fmt17(b.lower) << "\ntarget = "
              << fmt17(b.target) << "\nupper = " << fmt17(b.upper) << "\n"
              << (ok ? "enclosed" : "NOT ENCLOSED") << "\n";
  }
  return ok ? 0 : 1;
}

std::int64_t ulp_distance(double x, double y) {
  // Both operands positive in every use; bit patterns order like magnitudes.
  std::int64_t xi, yi;
  std::memcpy(&xi, &x, sizeof xi);
  std::memcpy(&yi, &y, sizeof yi);
  return xi > yi ? xi - yi : yi - xi;
}

int run_means(double a, double b, bool have_pq, double p, double q,
              const std::string& json_out) {
  using cusa::MeanKind;
  const MeanKind kinds[] = {MeanKind::G, MeanKind::A, MeanKind::Q,
                            MeanKind::P, MeanKind::T, MeanKind::U,
                            MeanKind::SB};
  json j{{"a", a}, {"b", b}};
  for (const MeanKind kind : kinds) {
    std::string shown;
    try {
      const double v = kind == MeanKind::SB ? cusa::schwab_borchardt(a, b)
                                            : cusa::classical_mean(kind, a, b).value;
      shown = fmt17(v);
      j[cusa::to_string(kind)] = v;
    } catch (const std::invalid_argument& e) {
      shown = std::string("undefined (") + e.what() + ")";
      j[cusa::to_string(kind)] = nullptr;
    }
    if (json_out.empty())
      std::cout << cusa::to_string(kind) << " = " << shown << "\n";
  }
  if (have_pq) {
    const double v = cusa::sine_mean(p, q, std::min(a, b), std::max(a, b));
    j["S_pq"] = v;
    if (json_out.empty())
      std::cout << "S_{" << fmt(p) << "," << fmt(q) << "} = " << fmt17(v)
                << "\n";
  }
  if (!json_out.empty()) write_sink(json_out, j.dump(2) + "\n");
  return 0;
}

int run_means_check(double a, double b, const std::string& json_out) {
  using cusa::MeanKind;
  const double G = cusa::classical_mean(MeanKind::G, a, b).value;
  const double A = cusa::classical_mean(MeanKind::A, a, b).value;
  const double Q = cusa::classical_mean(MeanKind::Q, a, b).value;
  struct Row {
    const char* name;
    double direct, via_sb;
  };
  const Row rows[] = {
      {"P = SB(G, A)", cusa::classical_mean(MeanKind::P, a, b).value,
       cusa::schwab_borchardt(G, A)},
      {"T = SB(A, Q)", cusa::classical_mean(MeanKind::T, a, b).value,
       cusa::schwab_borchardt(A, Q)},
      {"U = SB(G, Q)", cusa::classical_mean(MeanKind::U, a, b).value,
       cusa::schwab_borchardt(G, Q)},
  };
  bool ok = true;
  json jr = json::array();
  for (const Row& r : rows) {
    const std::int64_t ulps = ulp_distance(r.direct, r.via_sb);
    ok = ok && ulps <= 4;
    if (json_out.empty())
      std::cout << r.name << ": " << fmt17(r.direct) << " vs "
                << fmt17(r.via_sb) << "  (" << ulps << " ulps)\n";
    else
      jr.push_back({{"identity", r.name},
                    {"direct", r.direct},
                    {"via_sb", r.via_sb},
                    {"ulps", ulps}});
  }
  if (!json_out.empty())
    write_sink(json_out,
               json{{"a", a}, {"b", b}, {"identities", jr}, {"ok", ok}}
                       .dump(2) +
                   "\n");
  else
    std::cout << (ok ? "identities hold to 4 ulps" : "IDENTITY MISMATCH")
              << "\n";
  return ok ? 0 : 1;
}

int run_series(const std::string& name, double x, int terms, double q,
               const std::string& json_out) {
  if (name == "g1_ratio" || name == "g2_ratio") {
    json jr = json::array();
    const int n_lo = name == "g1_ratio" ? 2 : 3;
    for (int n = n_lo; n <= 40; ++n) {
      const double r = name == "g1_ratio" ? cusa::g1_coeff_ratio(n, q)
                                          : cusa::g2_coeff_ratio(n);
      if (json_out.empty())
        std::cout << "n = " << n << ": " << fmt17(r) << "\n";
      else
        jr.push_back({{"n", n}, {"ratio", r}});
    }
    if (!json_out.empty())
      write_sink(json_out, json{{"name", name}, {"ratios", jr}}.dump(2) + "\n");
    return 0;
  }

  cusa::SeriesKind kind;
  double reference;
  if (name == "csc") {
    kind = cusa::SeriesKind::csc;
    reference = 1.0 / std::sin(x);
  } else if (name == "cot") {
    kind = cusa::SeriesKind::cot;
    reference = std::cos(x) / std::sin(x);
  } else if (name == "csc_sq") {
    kind = cusa::SeriesKind::csc_sq;
    reference = 1.0 / (std::sin(x) * std::sin(x));
  } else if (name == "tan") {
    kind = cusa::SeriesKind::tan;
    reference = std::tan(x);
  } else {
    throw std::invalid_argument(
        "series: unknown --name " + name +
        " (csc, cot, csc_sq, tan, g1_ratio, g2_ratio)");
  }
  const double value = cusa::elementary_series(kind, x, terms);
  if (!json_out.empty()) {
    write_sink(json_out, json{{"name", name},
                              {"x", x},
                              {"terms", terms},
                              {"series", value},
                              {"reference", reference},
                              {"abs_error", std::abs(value - reference)}}
                                 .dump(2) +
                             "\n");
  } else {
    std::cout << name << "(" << fmt(x) << ") series = " << fmt17(value)
              << "\nreference = " << fmt17(reference)
              << "\nabs error = " << fmt(std::abs(value - reference)) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical verifier for sharp Cusa-type bounds on sin x / x"};
  app.require_subcommand(1);
  int rc = 0;

  Config cfg;

  // --- eval ---
  auto* eval = app.add_subcommand("eval", "evaluate T, D, g1, g2, f2, A/B/C, u");
  std::string eval_fn;
  double eval_p = 1.0, eval_q = 1.0, eval_x = 0.5, eval_t = 0.5;
  std::string eval_json;
  eval->add_option("--fn", eval_fn, "function name")->required();
  eval->add_option("--p", eval_p, "parameter p");
  eval->add_option("--q", eval_q, "parameter q");
  eval->add_option("--x", eval_x, "evaluation point in (0, pi/2)");
  eval->add_option("--t", eval_t, "argument for u in (0, 1]");
  eval->add_option("--json", eval_json, "write JSON to path ('-' = stdout)");
  eval->callback([&] { rc = run_eval(eval_fn, eval_p, eval_q, eval_x, eval_t, eval_json); });

  // --- bound ---
  auto* bound = app.add_subcommand("bound", "evaluate a bound family at t");
  std::string bound_family;
  double bound_t = 0.5, bound_p = 1.0, bound_q = 1.0, bound_k = 1.0;
  std::string bound_json;
  bound->add_option("--family", bound_family, "M, N, M_kq, M_line")->required();
  bound->add_option("--t", bound_t, "t = cos x in [0, 1]")->required();
  bound->add_option("--p", bound_p, "parameter p");
  bound->add_option("--q", bound_q, "parameter q");
  bound->add_option("--k", bound_k, "parameter k (M_kq)");
  bound->add_option("--json", bound_json, "write JSON to path ('-' = stdout)");
  bound->callback([&] { rc = run_bound(bound_family, bound_t, bound_p, bound_q, bound_k, bound_json); });

  // --- constants ---
  auto* constants = app.add_subcommand("constants", "solved thresholds and derived values");
  std::string constants_json;
  constants->add_option("--json", constants_json, "write JSON to path ('-' = stdout)");
  constants->callback([&] { rc = run_constants(constants_json); });

  // --- claims ---
  auto* claims = app.add_subcommand("claims", "list the claim catalog");
  std::string claims_id, claims_json;
  claims->add_option("--claim", claims_id, "show one claim in detail");
  claims->add_option("--json", claims_json, "write JSON to path ('-' = stdout)");
  claims->callback([&] { rc = run_claims(claims_id, claims_json); });

  // --- verify ---
  auto* verify = app.add_subcommand("verify", "sample a claim's chain");
  std::string verify_claim, verify_json, verify_csv;
  ParamFlags verify_params;
  SamplingFlags verify_sampling;
  verify->add_option("--claim", verify_claim, "claim id")->required();
  verify_params.attach(verify);
  verify_sampling.attach(verify);
  verify->add_option("--json", verify_json, "write JSON report ('-' = stdout)");
  verify->add_option("--csv", verify_csv, "write per-sample CSV ('-' = stdout)");
  verify->callback([&] {
    rc = run_verify(verify_claim, verify_params, verify_sampling, cfg,
                    verify_json, verify_csv);
  });

  // --- probe ---
  auto* probe = app.add_subcommand("probe", "push a sharp boundary by deltas");
  std::string probe_claim, probe_param, probe_json;
  std::vector<double> probe_deltas;
  SamplingFlags probe_sampling;
  probe->add_option("--claim", probe_claim, "claim id")->required();
  probe->add_option("--param", probe_param, "boundary parameter")->required();
  CLI::Option* probe_delta_opt =
      probe->add_option("--delta", probe_deltas,
                        "offsets past the boundary (default 0 and 1e-2)");
  probe_sampling.attach(probe);
  probe->add_option("--json", probe_json, "write JSON ('-' = stdout)");
  probe->callback([&] {
    rc = run_probe(probe_claim, probe_param, probe_deltas, probe_delta_opt,
                   probe_sampling, cfg, probe_json);
  });

  // --- chain ---
  auto* chain = app.add_subcommand("chain", "verify a named inequality chain");
  std::string chain_name, chain_json;
  SamplingFlags chain_sampling;
  chain->add_option("--name", chain_name,
                    "final, neuman1, yang1, yang2, yang3, klenyang, mc, "
                    "huygens, or a claim id")
      ->required();
  chain_sampling.attach(chain);
  chain->add_option("--json", chain_json, "write JSON report ('-' = stdout)");
  chain->callback([&] { rc = run_chain(chain_name, chain_sampling, cfg, chain_json); });

  // --- invtrig ---
  auto* invtrig = app.add_subcommand("invtrig", "arcsin/arccos bound pairs");
  std::string invtrig_kind, invtrig_json;
  double invtrig_t = 0.5, invtrig_p = 1.0, invtrig_q = 1.0;
  invtrig->add_option("--kind", invtrig_kind, "bound family")->required();
  invtrig->add_option("--t", invtrig_t, "argument in (0, 1]")->required();
  invtrig->add_option("--p", invtrig_p, "parameter p");
  invtrig->add_option("--q", invtrig_q, "parameter q");
  invtrig->add_option("--json", invtrig_json, "write JSON ('-' = stdout)");
  invtrig->callback([&] {
    rc = run_invtrig(invtrig_kind, invtrig_t, invtrig_p, invtrig_q,
                     invtrig_json);
  });

  // --- means ---
  auto* means = app.add_subcommand("means", "bivariate means of (a, b)");
  double means_a = 1.0, means_b = 2.0, means_p = 1.0, means_q = 0.0;
  std::string means_json;
  means->add_option("--a", means_a, "first argument")->required();
  means->add_option("--b", means_b, "second argument")->required();
  CLI::Option* means_p_opt = means->add_option("--p", means_p, "sine-mean p");
  means->add_option("--q", means_q, "sine-mean q");
  means->add_option("--json", means_json, "write JSON ('-' = stdout)");
  auto* means_check = means->add_subcommand(
      "check", "cross-check P, T, U against their SB representations");
  means_check->fallthrough();
  means->callback([&] {
    if (means_check->parsed()) {
      rc = run_means_check(means_a, means_b, means_json);
      return;
    }
    rc = run_means(means_a, means_b, means_p_opt->count() > 0, means_p,
                   means_q, means_json);
  });

  // --- series ---
  auto* series = app.add_subcommand("series", "elementary expansions and coefficient ratios");
  std::string series_name, series_json;
  double series_x = 0.5, series_q = 1.0;
  int series_terms = 30;
  series->add_option("--name", series_name, "csc, cot, csc_sq, tan, g1_ratio, g2_ratio")->required();
  series->add_option("--x", series_x, "evaluation point");
  series->add_option("--terms", series_terms, "number of series terms");
  series->add_option("--q", series_q, "q for g1_ratio");
  series->add_option("--json", series_json, "write JSON ('-' = stdout)");
  series->callback([&] { rc = run_series(series_name, series_x, series_terms, series_q, series_json); });

  try {
    cfg = load_config();
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
