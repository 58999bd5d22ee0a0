#include "cusa/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "cusa/kernel.hpp"

namespace cusa {

// ---------------------------------------------------------------------------
// deterministic sampling
// ---------------------------------------------------------------------------

std::uint64_t splitmix64_next(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double splitmix64_unit(std::uint64_t& state) {
  return static_cast<double>(splitmix64_next(state) >> 11) * 0x1.0p-53;
}

namespace {

std::vector<double> sample_points(double lo, double hi,
                                  const SampleSpec& spec) {
  if (spec.grid_points < 16)
    throw std::invalid_argument("sample spec: need at least 16 grid points");
  if (spec.random_points < 0)
    throw std::invalid_argument("sample spec: random count must be >= 0");
  const double a = lo + spec.endpoint_gap;
  const double b = hi - spec.endpoint_gap;
  if (!(a < b))
    throw std::invalid_argument("sample spec: endpoint gap swallows domain");
  const double span = b - a;
  std::vector<double> xs;
  xs.reserve(static_cast<std::size_t>(spec.grid_points) + spec.random_points);
  for (int i = 0; i < spec.grid_points; ++i)
    xs.push_back(a + span * i / (spec.grid_points - 1));
  std::uint64_t state = spec.seed;
  for (int i = 0; i < spec.random_points; ++i)
    xs.push_back(a + span * splitmix64_unit(state));
  return xs;
}

// Walk the chain at every sample point; the point's margin is its weakest
// adjacent pair. Serial and order-stable so reports are reproducible.
Report run_chain(const std::string& claim_id,
                 const std::vector<std::string>& exprs, double lo, double hi,
                 const ParamMap& pm, const SampleSpec& spec,
                 std::vector<SampleRow>* rows) {
  if (exprs.size() < 2)
    throw std::invalid_argument("claim " + claim_id +
                                ": chain needs at least two expressions");
  Report rep;
  rep.claim_id = claim_id;
  rep.param_values = pm;
  rep.seed = spec.seed;

  const std::vector<double> xs = sample_points(lo, hi, spec);
  const double tol = spec.inconclusive_margin;
  double min_margin = std::numeric_limits<double>::infinity();
  double argmin = 0.0;
  bool conclusive_seen = false;

  for (const double x : xs) {
    double weakest = std::numeric_limits<double>::infinity();
    double wl = 0.0, wr = 0.0;
    bool nan_seen = false;
    double prev = eval_expr(exprs.front(), x, pm);
    for (std::size_t j = 1; j < exprs.size(); ++j) {
      const double cur = eval_expr(exprs[j], x, pm);
      const double margin = cur - prev;
      if (std::isnan(margin)) {
        nan_seen = true;
        wl = prev;
        wr = cur;
        weakest = margin;
        break;
      }
      if (margin < weakest) {
        weakest = margin;
        wl = prev;
        wr = cur;
      }
      prev = cur;
    }
    ++rep.samples_evaluated;
    if (rows) rows->push_back({x, wl, wr, weakest});

    if (nan_seen || std::abs(weakest) <= tol) {
      ++rep.inconclusive_count;
      continue;
    }
    if (weakest < -tol && rep.violations.size() < 64)
      rep.violations.push_back({x, wl, wr});
    if (weakest < min_margin) {
      min_margin = weakest;
      argmin = x;
    }
    conclusive_seen = true;
  }

  rep.min_margin = conclusive_seen ? min_margin : 0.0;
  rep.argmin = conclusive_seen ? argmin : 0.0;
  rep.status = !rep.violations.empty() ? "fail"
               : conclusive_seen       ? "pass"
                                       : "inconclusive";
  return rep;
}

}  // namespace

// ---------------------------------------------------------------------------
// public entry points
// ---------------------------------------------------------------------------

Report verify(const std::string& claim_id, const ParamMap& overrides,
              const SampleSpec& spec) {
  const Claim& c = lookup(claim_id);
  const ParamMap pm = resolve_params(c, overrides);
  if (c.validate) c.validate(pm);
  return run_chain(c.id, c.exprs, c.lo, c.hi, pm, spec, nullptr);
}

std::vector<SampleRow> sample_rows(const std::string& claim_id,
                                   const ParamMap& overrides,
                                   const SampleSpec& spec) {
  const Claim& c = lookup(claim_id);
  const ParamMap pm = resolve_params(c, overrides);
  if (c.validate) c.validate(pm);
  std::vector<SampleRow> rows;
  run_chain(c.id, c.exprs, c.lo, c.hi, pm, spec, &rows);
  return rows;
}

std::vector<ProbeResult> probe_sharpness(const std::string& claim_id,
                                         const std::string& boundary_param,
                                         const std::vector<double>& deltas,
                                         const SampleSpec& spec) {
  const Claim& c = lookup(claim_id);
  std::vector<const SharpBoundary*> matched;
  for (const SharpBoundary& b : c.sharp_boundaries)
    if (b.param == boundary_param) matched.push_back(&b);
  if (matched.empty())
    throw std::invalid_argument("claim " + c.id +
                                " has no sharp boundary on parameter " +
                                boundary_param);

  std::vector<ProbeResult> out;
  for (const SharpBoundary* b : matched) {
    for (const double delta : deltas) {
      if (!(delta >= 0.0))
        throw std::invalid_argument("probe deltas must be >= 0");
      ParamMap pm = resolve_params(c, {});
      const double at_boundary = b->boundary_value(pm);
      const double pushed = b->fails == SharpBoundary::FailSide::above
                                ? at_boundary + delta
                                : at_boundary - delta;
      pm[b->param] = pushed;
      if (c.validate) c.validate(pm);

      std::vector<std::string> exprs = c.exprs;
      const bool reversed =
          b->orientation == SharpBoundary::Orientation::reversed;
      if (reversed) std::reverse(exprs.begin(), exprs.end());

      ProbeResult pr;
      pr.boundary_name = b->boundary_name;
      pr.param = b->param;
      pr.delta = delta;
      pr.pushed_value = pushed;
      pr.reversed = reversed;
      pr.report = run_chain(c.id, exprs, c.lo, c.hi, pm, spec, nullptr);
      out.push_back(std::move(pr));
    }
  }
  return out;
}

double check_expansion(double p, double q, const std::vector<double>& xs) {
  if (xs.empty())
    throw std::invalid_argument("check_expansion: need at least one point");
  const ParamPoint pp(p, q);
  const LimitCoeffs lc = limit_coeffs(pp);
  double worst = 0.0;
  for (const double x : xs) {
    if (!(x > 0.0 && x <= 0.1))
      throw std::invalid_argument("check_expansion: x must lie in (0, 0.1]");
    const double x2 = x * x;
    const double approx = lc.L2 + lc.L4 * x2;
    const double exact = d_pq(pp, x) / x2;
    const double scale = std::abs(lc.L2) + std::abs(lc.L4) * x2 + 1e-30;
    worst = std::max(worst, std::abs(exact - approx) / scale);
  }
  return worst;
}

Report verify_chain(const std::string& chain_id, const SampleSpec& spec) {
  static const std::map<std::string, std::string> alias = {
      {"final", "C-CHAIN-FINAL"}, {"neuman1", "C-NEUMAN1"},
      {"yang1", "C-YANG1"},       {"yang2", "C-YANG2"},
      {"yang3", "C-YANG3"},       {"klenyang", "C-KLENYANG"},
      {"mc", "C-MC"},             {"huygens", "C-HUYGENS"}};
  const auto it = alias.find(chain_id);
  return verify(it != alias.end() ? it->second : chain_id, {}, spec);
}

}  // namespace cusa
