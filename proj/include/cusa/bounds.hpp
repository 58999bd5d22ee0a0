#pragma once
// The two-parameter bound families for sin x / x expressed in t = cos x:
//   M(t;p,q)      weight p/(3q), defined on the region E (p <= 0 or p <= 3q)
//   N(t;p,q)      weight 1 - (2/pi)^p, q > 0
//   M(t;kq,q)     the p = kq section
//   M(t;3q-8/5,q) the p = 3q - 8/5 section (defined for every real q)
// plus the underlying two-point weighted power mean.

#include "cusa/kernel.hpp"

namespace cusa {

// (1 - w + w t^q)^(1/p) with w = p/(3q); parameter-limit branches at
// |p| < 1e-12 and |q| < 1e-12. Requires t in [0, 1] and (p,q) in E.
BranchedValue bound_M_branched(double t, double p, double q);
double bound_M(double t, double p, double q);

// ((2/pi)^p + (1 - (2/pi)^p) t^q)^(1/p); q > 0; limit branch at p = 0.
BranchedValue bound_N_branched(double t, double p, double q);
double bound_N(double t, double p, double q);

// (1 - k/3 + (k/3) t^q)^(1/(kq)) on E_kq = {q <= 0, k >= 0} u {q >= 0, k <= 3};
// limit branches: k = 0 -> exp((t^q - 1)/(3q)), q = 0 -> t^(1/3).
BranchedValue bound_M_kq_branched(double t, double k, double q);
double bound_M_kq(double t, double k, double q);

// (8/(15q) + (1 - 8/(15q)) t^q)^(5/(15q-8)) for all real q; limit branches
// at q = 0 and q = 8/15; increasing in q with limits t^(1/3) and 1.
BranchedValue bound_M_line_branched(double t, double q);
double bound_M_line(double t, double q);

// (1 - w + w (a/b)^q)^(1/q) * b, the w-weighted power mean of order q of
// a and b. Requires a, b > 0 and (q >= 0, w <= 1) or (q <= 0, w >= 0);
// rejects at runtime if the inner argument leaves (0, inf).
double weighted_power_mean(double a, double b, double q, double w);

}  // namespace cusa
