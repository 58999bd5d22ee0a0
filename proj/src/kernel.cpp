#include "cusa/kernel.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "cusa/constants.hpp"
#include "cusa/series.hpp"
#include "stable.hpp"

namespace cusa {

using detail::kPi;
using detail::kPiHalf;

namespace {

constexpr double kParamEps = 1e-12;
// Seam between the near-zero polynomial branch and direct evaluation.
constexpr double kSeriesSplit = 0.7;

void require_interior_x(double x, const char* who) {
  if (!(x > 0.0) || !(x < kPiHalf))
    throw std::domain_error(std::string(who) + ": x must be in (0, pi/2)");
}

// Degree-8 expansion of the ratio around x = 0; remainder is O(x^10).
double ratio_taylor(double p, double q, double x, bool with_constant) {
  const double c2 = -(5.0 * p - 15.0 * q + 8.0) / 180.0;
  const double c4 = (70.0 * p * p + 315.0 * q * q - 315.0 * p * q +
                     126.0 * p + 126.0 * q - 304.0) /
                    45360.0;
  const double c6 = -p * p * p / 15552.0 + p * p * q / 2592.0 -
                    p * p / 9720.0 - p * q * q / 1728.0 - p * q / 2160.0 +
                    53.0 * p / 85050.0 + q * q / 720.0 + q / 5670.0 -
                    23.0 / 17010.0;
  const double c8 =
      p * p * p * p / 466560.0 - p * p * p * q / 62208.0 +
      p * p * p / 466560.0 + p * p * q * q / 31104.0 + p * p * q / 25920.0 -
      149.0 * p * p / 4082400.0 - 7.0 * p * q * q / 51840.0 -
      101.0 * p * q / 2721600.0 + 11.0 * p / 81648.0 - q * q * q * q / 34560.0 +
      197.0 * q * q / 544320.0 + q / 75600.0 - 619.0 / 1871100.0;
  const double x2 = x * x;
  const double tail = x2 * (c2 + x2 * (c4 + x2 * (c6 + x2 * c8)));
  return with_constant ? 1.0 / 3.0 + tail : tail;
}

// sin x - x cos x, by series below 1 where the direct form cancels.
double sin_minus_xcos(double x) {
  if (x >= 1.0) return std::sin(x) - x * std::cos(x);
  const double x2 = x * x;
  double sum = 0.0;
  double xp = x * x2;      // x^{2k+1}, k = 1
  double fact = 6.0;       // (2k+1)!
  for (int k = 1; k <= 10; ++k) {
    const double term = 2.0 * k / fact * xp;
    sum += (k & 1) ? term : -term;
    xp *= x2;
    fact *= (2.0 * k + 2.0) * (2.0 * k + 3.0);
  }
  return sum;
}

}  // namespace

// ---------------------------------------------------------------------------
// enums and parameter point
// ---------------------------------------------------------------------------

const char* to_string(MonotonicityRegion r) {
  switch (r) {
    case MonotonicityRegion::increasing_i: return "increasing_i";
    case MonotonicityRegion::increasing_decreasing_ii: return "increasing_decreasing_ii";
    case MonotonicityRegion::decreasing_iii: return "decreasing_iii";
    case MonotonicityRegion::decreasing_iv: return "decreasing_iv";
    case MonotonicityRegion::unclassified: return "unclassified";
  }
  return "unclassified";
}

const char* to_string(EvalBranch b) {
  switch (b) {
    case EvalBranch::direct: return "direct";
    case EvalBranch::series: return "series";
    case EvalBranch::limit: return "limit";
  }
  return "direct";
}

ParamPoint::ParamPoint(double p_, double q_) : p(p_), q(q_) {
  in_E = p <= 0.0 || p <= 3.0 * q;
  const double line = 3.0 * q - 8.0 / 5.0;
  const double knee = kPi * kPi / 4.0 - 1.0;
  if (q > 1.0 && p <= line) {
    monotonicity_region = MonotonicityRegion::increasing_i;
  } else if (q == 1.0 && (p <= 7.0 / 5.0 || p >= knee)) {
    monotonicity_region = MonotonicityRegion::increasing_decreasing_ii;
  } else if (q > 34.0 / 35.0 && q < 1.0 && p >= knee) {
    monotonicity_region = MonotonicityRegion::decreasing_iii;
  } else if (q <= 34.0 / 35.0 && p >= line) {
    monotonicity_region = MonotonicityRegion::decreasing_iv;
  } else {
    monotonicity_region = MonotonicityRegion::unclassified;
  }
}

// ---------------------------------------------------------------------------
// generalized logarithmic difference and the central ratio
// ---------------------------------------------------------------------------

double u_p(double p, double t) {
  if (!(t > 0.0) || t > 1.0)
    throw std::domain_error("u_p: t must be in (0, 1]");
  const double lt = detail::log_near1(t);
  // (1 - t^p)/p written as -ln t * phi(p ln t); exact limit -ln t at p = 0.
  return -lt * detail::phi(p * lt);
}

BranchedValue t_pq_branched(const ParamPoint& pt, double x) {
  require_interior_x(x, "t_pq");
  if (x < x_switch)
    return {ratio_taylor(pt.p, pt.q, x, true), EvalBranch::series};
  const double value = u_p(pt.p, std::sin(x) / x) / u_p(pt.q, std::cos(x));
  const bool limit =
      std::fabs(pt.p) < kParamEps || std::fabs(pt.q) < kParamEps;
  return {value, limit ? EvalBranch::limit : EvalBranch::direct};
}

double t_pq(const ParamPoint& pt, double x) { return t_pq_branched(pt, x).value; }

BranchedValue d_pq_branched(const ParamPoint& pt, double x) {
  require_interior_x(x, "d_pq");
  if (x < x_switch)
    return {ratio_taylor(pt.p, pt.q, x, false), EvalBranch::series};
  BranchedValue v = t_pq_branched(pt, x);
  v.value -= 1.0 / 3.0;
  return v;
}

double d_pq(const ParamPoint& pt, double x) { return d_pq_branched(pt, x).value; }

LimitCoeffs limit_coeffs(const ParamPoint& pt) {
  LimitCoeffs lc;
  lc.L2 = -(5.0 * pt.p - 15.0 * pt.q + 8.0) / 180.0;
  lc.L4 = (70.0 * pt.p * pt.p + 315.0 * pt.q * pt.q - 315.0 * pt.p * pt.q +
           126.0 * pt.p + 126.0 * pt.q - 304.0) /
          45360.0;
  // On the critical line with q <= 0 the ratio diverges to -infinity at the
  // right endpoint; everywhere else the endpoint value is finite.
  if (std::fabs(pt.p - (3.0 * pt.q - 8.0 / 5.0)) < kParamEps && pt.q <= 0.0)
    lc.endpoint = -std::numeric_limits<double>::infinity();
  else
    lc.endpoint = endpoint_T(pt.p, pt.q) - 1.0 / 3.0;
  return lc;
}

// ---------------------------------------------------------------------------
// kernel triple A, B, C and derived ratios
// ---------------------------------------------------------------------------

ABC abc(double x) {
  require_interior_x(x, "abc");
  const double s = std::sin(x), c = std::cos(x);
  const double d = sin_minus_xcos(x);
  ABC r;
  r.A = d * d * c;
  r.B = x * d * s * s;
  if (x < kSeriesSplit) {
    const SeriesTable& tab = default_series_table();
    const double x2 = x * x;
    double sum = 0.0, xp = x2 * x2;  // x^{2n} from n = 2
    for (int n = 2; n <= tab.n_max; ++n) {
      sum += tab.c_f[n] * xp;
      xp *= x2;
    }
    r.C = s * s * c * sum;
  } else {
    r.C = -(2.0 * x * x * c - x * s - c * s * s);
  }
  return r;
}

double f2(const ParamPoint& pt, double x) {
  require_interior_x(x, "f2");
  if (x < kSeriesSplit) {
    const SeriesTable& tab = default_series_table();
    const double s = std::sin(x), c = std::cos(x);
    const double x2 = x * x;
    double sum = 0.0, xp = x2 * x2;
    for (int n = 2; n <= tab.n_max; ++n) {
      sum += (pt.p * tab.a_f[n] - pt.q * tab.b_f[n] + tab.c_f[n]) * xp;
      xp *= x2;
    }
    return s * s * c * sum;
  }
  const ABC v = abc(x);
  return pt.p * v.A - pt.q * v.B + v.C;
}

double g1(double q, double x) {
  require_interior_x(x, "g1");
  if (x < kSeriesSplit) {
    const SeriesTable& tab = default_series_table();
    const double x2 = x * x;
    double num = 0.0, den = 0.0, xp = 1.0;  // common factor x^4 cancels
    for (int n = 2; n <= tab.n_max; ++n) {
      num += (q * tab.b_f[n] - tab.c_f[n]) * xp;
      den += tab.a_f[n] * xp;
      xp *= x2;
    }
    return num / den;
  }
  const double s = std::sin(x), c = std::cos(x);
  const double d = sin_minus_xcos(x);
  // (qB - C)/A with the q = 1 cosine cancellation pulled out analytically:
  // B - C = cos x * (x cos x * d - (x - sin x)(x + sin x)) - (q-1 term).
  const double beta = -x * c * d + (x - s) * (x + s);
  const double A = d * d * c, B = x * d * s * s;
  return ((q - 1.0) * B + c * beta) / A;
}

double g2(double x) {
  require_interior_x(x, "g2");
  if (x < kSeriesSplit) {
    const SeriesTable& tab = default_series_table();
    const double x2 = x * x;
    double num = 0.0, den = 0.0, xp = 1.0;  // common factor x^6 cancels
    for (int n = 3; n <= tab.n_max; ++n) {
      num += tab.c85a_f[n] * xp;
      den += tab.b3a_f[n] * xp;
      xp *= x2;
    }
    return num / den;
  }
  const ABC v = abc(x);
  return (v.C - 1.6 * v.A) / (v.B - 3.0 * v.A);
}

}  // namespace cusa
