#pragma once
// Shafer-Fink-type bounds for arcsin and Carlson-type bounds for arccos:
// the basic family t/M, t/N at sqrt(1-t^2), the refined half-angle family
// with constants 3 and c_{p,q}, and the classical Carlson baseline.

#include <string>

namespace cusa {

struct InverseBoundPair {
  double lower = 0.0;
  double upper = 0.0;
  double target = 0.0;  // true arcsin t or arccos t
  std::string family;
  double p = 0.0, q = 0.0;
};

// lower = t / M(sqrt(1-t^2); p, q), upper = t / N(...) for the primary
// clause (q >= 1, p <= 3q - 8/5, (p,q) in E); the reversed clauses swap
// the sides, and q <= 0 keeps only the upper bound (lower = 0).
// Parameter points outside every clause are rejected naming the clauses.
InverseBoundPair arcsin_bounds_basic(double t, double p, double q);

// Half-angle family built from u = sqrt(1+t) - sqrt(1-t) and
// v = (sqrt(1+t) + sqrt(1-t))/2: bound_m = u * (1 - (p/m) U_q(v))^(-1/p)
// with m = 3 on the tight side and m = c_{p,q} on the endpoint-exact side.
// Requires the admissibility condition p < 3q/(1 - 2^{-q/2}) (p < 6/ln 2
// at q = 0) plus a directional clause.
InverseBoundPair arcsin_bounds_halfangle(double t, double p, double q);

// family: "basic" mirrors the arcsin bounds through
// arccos t = arcsin(sqrt(1-t^2)); "halfangle" uses u = sqrt(2) sqrt(1-t),
// v = sqrt((1+t)/2); "carlson_classic" is parameter-free:
// 6 sqrt(1-t)/(2 sqrt2 + sqrt(1+t)) < arccos t < 2^(2/3) (1-t)^(1/2) (1+t)^(-1/6).
InverseBoundPair arccos_bounds(double t, double p, double q,
                               const std::string& family);

// Single half-angle bound with an explicit normalizer m (3 or c_{p,q});
// no clause checks, used to assemble chains side by side.
double halfangle_arcsin_bound(double t, double p, double q, double m);
double halfangle_arccos_bound(double t, double p, double q, double m);

}  // namespace cusa
