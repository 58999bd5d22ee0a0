#pragma once
// Data-driven catalog of the inequality claims: each entry names its source,
// its open domain in x or t, its parameters with validity predicates, an
// ordered strictly-increasing expression chain, and sharp-boundary metadata
// for the if-and-only-if thresholds.

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace cusa {

using ParamMap = std::map<std::string, double>;

struct ParamSpec {
  std::string name;
  double default_value = 0.0;
  std::string constraint_desc;  // human-readable validity condition
};

struct SharpBoundary {
  std::string param;          // parameter being pushed
  std::string boundary_name;  // e.g. "34/35", "q_of_p(p)"
  std::function<double(const ParamMap&)> boundary_value;
  enum class FailSide { above, below } fails = FailSide::above;
  // primary: the chain as stored fails past the boundary;
  // reversed: the flipped chain is the one the boundary governs.
  enum class Orientation { primary, reversed } orientation = Orientation::primary;
};

struct Claim {
  std::string id;
  std::string anchor;    // author-year citation for the source statement
  char variable = 'x';   // 'x' (angle) or 't' (ratio/argument)
  double lo = 0.0, hi = 0.0;  // open domain
  std::vector<ParamSpec> params;
  std::vector<std::string> exprs;  // ordered chain, adjacent pairs strict <
  std::vector<SharpBoundary> sharp_boundaries;
  std::string equivalent_to;          // nonempty: algebraic restatement of that id
  std::vector<ParamMap> instances;    // anchored parameter points for the suite
  // Throws std::invalid_argument naming the violated condition.
  std::function<void(const ParamMap&)> validate;
};

const std::vector<Claim>& catalog();
const Claim& lookup(const std::string& id);
bool has_claim(const std::string& id);

// Fill unspecified parameters with the claim's defaults; rejects names the
// claim does not declare.
ParamMap resolve_params(const Claim& c, const ParamMap& overrides);

// Evaluate a registered expression tag at x (or t) under the given
// parameters. Unknown tags throw std::invalid_argument.
double eval_expr(const std::string& tag, double x, const ParamMap& pm);

}  // namespace cusa
