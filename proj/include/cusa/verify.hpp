#pragma once
// Deterministic sampling verifier: checks a claim's expression chain over a
// grid plus seeded random points, reports margins and violations, probes
// sharp boundaries, and cross-checks the local expansion of D_{p,q}.

#include "cusa/claims.hpp"

#include <cstdint>
#include <vector>

namespace cusa {

struct SampleSpec {
  int grid_points = 4096;     // >= 16
  int random_points = 4096;
  std::uint64_t seed = 1;
  double endpoint_gap = 1e-6;       // open-domain shrink
  double inconclusive_margin = 1e-13;
};

struct Violation {
  double x = 0.0, lhs = 0.0, rhs = 0.0;
};

struct Report {
  std::string claim_id;
  ParamMap param_values;
  long samples_evaluated = 0;
  double min_margin = 0.0;  // over conclusive points; negative iff fail
  double argmin = 0.0;
  std::vector<Violation> violations;  // capped at 64 entries
  long inconclusive_count = 0;
  std::string status;  // pass | fail | inconclusive
  std::uint64_t seed = 0;
};

struct ProbeResult {
  std::string boundary_name;
  std::string param;
  double delta = 0.0;
  double pushed_value = 0.0;
  bool reversed = false;  // probe ran against the flipped chain
  Report report;
};

// Margin = rhs - lhs per adjacent pair; a point's margin is its weakest
// pair. Violation iff margin < -inconclusive_margin; |margin| below the
// threshold counts as inconclusive. Throws std::invalid_argument for
// unknown claims or parameter-constraint violations (usage errors).
Report verify(const std::string& claim_id, const ParamMap& overrides,
              const SampleSpec& spec);

// For each sharp boundary registered for boundary_param and each delta,
// re-verify with the parameter pushed delta past the boundary on its
// failing side (delta = 0 probes the boundary itself, expected pass).
// Reversed-orientation boundaries verify the flipped chain.
std::vector<ProbeResult> probe_sharpness(const std::string& claim_id,
                                         const std::string& boundary_param,
                                         const std::vector<double>& deltas,
                                         const SampleSpec& spec);

// max over x in xs of |d_pq(x)/x^2 - (L2 + L4 x^2)| / (|L2| + |L4| x^2 + 1e-30);
// xs must lie in (0, 0.1].
double check_expansion(double p, double q, const std::vector<double>& xs);

// Short names (final, neuman1, yang1, yang2, yang3, klenyang, mc, huygens)
// or any claim id.
Report verify_chain(const std::string& chain_id, const SampleSpec& spec);

// Per-point dump row for CSV output: weakest pair at each sample.
struct SampleRow {
  double x = 0.0, lhs = 0.0, rhs = 0.0, margin = 0.0;
};
std::vector<SampleRow> sample_rows(const std::string& claim_id,
                                   const ParamMap& overrides,
                                   const SampleSpec& spec);

// splitmix64: the fixed, documented generator behind random sampling.
std::uint64_t splitmix64_next(std::uint64_t& state);
double splitmix64_unit(std::uint64_t& state);  // in [0, 1)

}  // namespace cusa
