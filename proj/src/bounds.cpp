#include "cusa/bounds.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "stable.hpp"

namespace cusa {

using detail::exp_scaled_log_base;
using detail::kPi;

namespace {

constexpr double kParamEps = 1e-12;

const double kLn2OverPi = std::log(2.0 / kPi);  // negative

// ln t for t in [0, 1]; t = 0 yields -inf so that all families take their
// finite (or zero) endpoint limits through ordinary IEEE arithmetic.
double log_t(double t, const char* who) {
  if (!(t >= 0.0) || t > 1.0)
    throw std::domain_error(std::string(who) + ": t must be in [0, 1]");
  if (t == 0.0) return -std::numeric_limits<double>::infinity();
  return detail::log_near1(t);
}

}  // namespace

BranchedValue bound_M_branched(double t, double p, double q) {
  const double lt = log_t(t, "bound_M");
  if (!(p <= 0.0 || p <= 3.0 * q))
    throw std::domain_error("bound_M: need p <= 0 or p <= 3q");
  const bool p_zero = std::fabs(p) < kParamEps;
  const bool q_zero = std::fabs(q) < kParamEps;
  if (p_zero && q_zero)
    return {std::exp(lt / 3.0), EvalBranch::limit};  // t^{1/3}
  if (q_zero) {
    // (1 + (p/3) ln t)^{1/p}; p < 0 here, so the base may hit zero.
    const double z = p / 3.0 * lt;
    if (!(z > -1.0)) throw std::domain_error("bound_M: base nonpositive at q = 0");
    return {std::exp(std::log1p(z) / p), EvalBranch::limit};
  }
  if (p_zero)
    return {std::exp(std::expm1(q * lt) / (3.0 * q)), EvalBranch::limit};
  return {exp_scaled_log_base(p / (3.0 * q), q * lt, 1.0 / p),
          EvalBranch::direct};
}

double bound_M(double t, double p, double q) {
  return bound_M_branched(t, p, q).value;
}

BranchedValue bound_N_branched(double t, double p, double q) {
  const double lt = log_t(t, "bound_N");
  if (!(q > 0.0)) throw std::domain_error("bound_N: q must be > 0");
  const double s = q * lt;  // <= 0
  if (std::fabs(p) < kParamEps) {
    // (2/pi)^(1 - t^q)
    return {std::exp(-std::expm1(s) * kLn2OverPi), EvalBranch::limit};
  }
  const double lw = p * kLn2OverPi;        // ln((2/pi)^p)
  const double w = -std::expm1(lw);        // 1 - (2/pi)^p, sign of p
  if (s < -50.0) {
    // base = (2/pi)^p (1 + w e^s / (2/pi)^p); switch forms when t^q is so
    // small that even the rescaled correction overflows.
    const double z = w * std::exp(s - lw);
    const double ln_base =
        z < 1e15 ? lw + std::log1p(z) : std::log(w) + s;
    return {std::exp(ln_base / p), EvalBranch::direct};
  }
  return {exp_scaled_log_base(w, s, 1.0 / p), EvalBranch::direct};
}

double bound_N(double t, double p, double q) {
  return bound_N_branched(t, p, q).value;
}

BranchedValue bound_M_kq_branched(double t, double k, double q) {
  const double lt = log_t(t, "bound_M_kq");
  if (!((q <= 0.0 && k >= 0.0) || (q >= 0.0 && k <= 3.0)))
    throw std::domain_error(
        "bound_M_kq: need (q <= 0 and k >= 0) or (q >= 0 and k <= 3)");
  if (std::fabs(q) < kParamEps)
    return {std::exp(lt / 3.0), EvalBranch::limit};  // t^{1/3}
  if (std::fabs(k) < kParamEps)
    return {std::exp(std::expm1(q * lt) / (3.0 * q)), EvalBranch::limit};
  return {exp_scaled_log_base(k / 3.0, q * lt, 1.0 / (k * q)),
          EvalBranch::direct};
}

double bound_M_kq(double t, double k, double q) {
  return bound_M_kq_branched(t, k, q).value;
}

BranchedValue bound_M_line_branched(double t, double q) {
  const double lt = log_t(t, "bound_M_line");
  if (std::fabs(q) < kParamEps) {
    // (1 - (8/15) ln t)^(-5/8)
    return {std::exp(-5.0 / 8.0 * std::log1p(-8.0 / 15.0 * lt)),
            EvalBranch::limit};
  }
  if (std::fabs(q - 8.0 / 15.0) < kParamEps) {
    // exp((5/8)(t^{8/15} - 1)), the vanishing-exponent limit
    return {std::exp(5.0 / 8.0 * std::expm1(8.0 / 15.0 * lt)),
            EvalBranch::limit};
  }
  const double w = 1.0 - 8.0 / (15.0 * q);
  return {exp_scaled_log_base(w, q * lt, 5.0 / (15.0 * q - 8.0)),
          EvalBranch::direct};
}

double bound_M_line(double t, double q) {
  return bound_M_line_branched(t, q).value;
}

double weighted_power_mean(double a, double b, double q, double w) {
  if (!(a > 0.0) || !(b > 0.0))
    throw std::domain_error("weighted_power_mean: a, b must be > 0");
  if (!((q >= 0.0 && w <= 1.0) || (q <= 0.0 && w >= 0.0)))
    throw std::domain_error(
        "weighted_power_mean: need (q >= 0, w <= 1) or (q <= 0, w >= 0)");
  if (std::fabs(q) < kParamEps)
    return std::exp(w * std::log(a) + (1.0 - w) * std::log(b));
  const double s = q * std::log(a / b);
  const double z = w * std::expm1(s);
  if (!(z > -1.0))
    throw std::domain_error("weighted_power_mean: mixed power nonpositive");
  return b * std::exp(std::log1p(z) / q);
}

}  // namespace cusa
