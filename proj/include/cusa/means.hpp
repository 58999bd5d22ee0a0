#pragma once
// Bivariate means: G, A, Q, the Seiffert means P and T, the arctangent mean U,
// the Schwab-Borchardt mean SB, the two-parameter sine mean S_{p,q}, and
// the mean-inequality bound expressions built from the M families.

#include <string>

namespace cusa {

enum class MeanKind { G, A, Q, P, T, U, SB, S_pq };

MeanKind mean_kind_from_string(const std::string& s);
const char* to_string(MeanKind k);

struct MeanValue {
  MeanKind kind = MeanKind::A;
  double value = 0.0;
  double a = 0.0, b = 0.0;
  double p = 0.0, q = 0.0;  // set for S_pq only
};

// G, A, Q, P, T, U. a, b > 0; P, T, U use a stable series when
// the normalized gap is below 1e-8.
MeanValue classical_mean(MeanKind kind, double a, double b);

// sqrt(b^2-a^2)/arccos(a/b) for a < b, a at a = b, sqrt(a^2-b^2)/arccosh(a/b)
// for a > b. Requires a >= 0, b > 0.
double schwab_borchardt(double a, double b);

// b * S~(p, q, arccos(a/b)) with the five-branch S~; requires
// p, q in [-2,2], 0 <= p+q <= 3, b >= a > 0. S_{p,q}(a,a) = a.
double sine_mean(double p, double q, double a, double b);

// b^(1-1/k) ((1-k/3) b^q + (k/3) a^q)^(1/(kq)) = b * bound_M_kq(a/b; k, q);
// requires b > a > 0, k in (0,3), and one of the sharp-bound clauses:
//   (i) k in [7/5, 3), q >= 8/(5(3-k));      (ii) k in (p0, 3), q <= q_of_k(k);
// (iii) k in (0, 23/17], q <= 8/(5(3-k));    (iv) k in (0, p0star), q >= q_of_k(k).
double sb_bound_kq(double a, double b, double k, double q);

// A * bound_M_line(G/A; q): bounds the Seiffert mean P from below for
// q <= 34/35 and from above for q >= q0. Requires a, b > 0, a != b.
double seiffert_p_bounds(double a, double b, double q);

}  // namespace cusa
