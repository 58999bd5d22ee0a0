#pragma once
// Core ratio T_{p,q}(x) = U_p(sin x / x) / U_q(cos x) with U_p(t) =
// (1 - t^p)/p (-ln t at p = 0), its shifted form D = T - 1/3, the local
// expansion coefficients, and the auxiliary functions A, B, C, f2, g1, g2
// that drive all monotonicity classifications.

#include <string>

namespace cusa {

enum class MonotonicityRegion {
  increasing_i,             // q > 1,  p <= 3q - 8/5
  increasing_decreasing_ii, // q = 1,  p <= 7/5 or p >= pi^2/4 - 1
  decreasing_iii,           // 34/35 < q < 1,  p >= pi^2/4 - 1
  decreasing_iv,            // q <= 34/35,     p >= 3q - 8/5
  unclassified,
};

const char* to_string(MonotonicityRegion r);

struct ParamPoint {
  double p = 0.0;
  double q = 0.0;
  bool in_E = false;  // p <= 0 or 0 < p <= 3q
  MonotonicityRegion monotonicity_region = MonotonicityRegion::unclassified;

  ParamPoint(double p_, double q_);
};

enum class EvalBranch { direct, series, limit };

const char* to_string(EvalBranch b);

struct BranchedValue {
  double value = 0.0;
  EvalBranch branch = EvalBranch::direct;
};

// Quadratic/quartic coefficients of D_{p,q} near 0 and its limit at pi/2.
struct LimitCoeffs {
  double L2 = 0.0;  // -(5p - 15q + 8)/180
  double L4 = 0.0;  // (70p^2 + 315q^2 - 315pq + 126p + 126q - 304)/45360
  double endpoint = 0.0;
};

// Below x_switch, t_pq/d_pq switch to the degree-8 local expansion.
inline constexpr double x_switch = 1e-2;

// U_p(t) = (1 - t^p)/p for p != 0, -ln t at p = 0; t in (0, 1].
// Evaluated through expm1(p ln t)/(p ln t) so p = 0 needs no division.
double u_p(double p, double t);

// T_{p,q}(x) on (0, pi/2); branch reports series/limit/direct.
BranchedValue t_pq_branched(const ParamPoint& pp, double x);
double t_pq(const ParamPoint& pp, double x);

// D_{p,q}(x) = T_{p,q}(x) - 1/3 (series branch avoids the 1/3 cancellation).
BranchedValue d_pq_branched(const ParamPoint& pp, double x);
double d_pq(const ParamPoint& pp, double x);

LimitCoeffs limit_coeffs(const ParamPoint& pp);

// A = (sin x - x cos x)^2 cos x,  B = x (sin x - x cos x) sin^2 x,
// C = -(2x^2 cos x - x sin x - cos x sin^2 x); all positive on (0, pi/2).
struct ABC {
  double A = 0.0, B = 0.0, C = 0.0;
};
ABC abc(double x);

// f2 = p A - q B + C; f2 <= 0 on (0, pi/2) forces T_{p,q} increasing.
double f2(const ParamPoint& pp, double x);

// g1 = (q B - C)/A; increasing on (0, pi/2) for q >= 1, decreasing for
// q <= 34/35, with infimum/supremum 3q - 8/5 at 0.
double g1(double q, double x);

// g2 = (C - (8/5) A)/(B - 3A); increasing from 34/35 to 1 on (0, pi/2).
double g2(double x);

}  // namespace cusa
