#pragma once
// Best-constant thresholds: the endpoint curve q(p) with its inverse p(q),
// the p = kq analogue q(k), the line-family root q0, and the half-angle
// normalizer c_{p,q}. Solved constants carry their bracket and residual.

#include <string>

namespace cusa {

struct SolvedConstant {
  std::string name;
  double value = 0.0;
  double residual = 0.0;  // |defining function at value|
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
};

// T_{p,q}(pi/2^-): q (1 - (2/pi)^p)/p for q > 0 (q ln(pi/2) at p = 0),
// 0 for q <= 0.
double endpoint_T(double p, double q);

// q(p) = p / (3 (1 - (2/pi)^p)), the unique q with endpoint_T = 1/3;
// strictly increasing, q(0) = 1/(3 ln(pi/2)).
double q_of_p(double p);

// Inverse of q_of_p by bracketed bisection; requires q > 0.
double p_of_q(double q);

// q(k) = ln(1 - k/3)/(k ln(2/pi)) for 0 < k < 3, where the p = kq section
// meets sin x/x at pi/2; strictly increasing.
double q_of_k(double k);

// v(q) = ln(8/(15q)) - (3q - 8/5) ln(2/pi) for q > 0; v(q0) = 0 with
// q0 in (0.74, 1) (the root q = 8/15 is a removable branch coincidence).
double v_line(double q);

// c_{p,q} = 1/T_{p,q}(pi/4) = (p/q)(1 - 2^{-q/2})/(1 - (2 sqrt2/pi)^p),
// with all four p,q -> 0 limits built in.
double c_pq(double p, double q);

// Solved thresholds (memoized): q_of_p(p0) = 1, q_of_p(p0star) = 34/35,
// v_line(q0) = 0.
SolvedConstant solve_p0();
SolvedConstant solve_p0star();
SolvedConstant solve_q0();
double p0();
double p0star();
double q0();

}  // namespace cusa
