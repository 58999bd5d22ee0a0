#pragma once
// Internal numerically-stable primitives shared by the kernel, bound,
// constants, and means implementations. Not part of the public API.

#include <cmath>
#include <stdexcept>

namespace cusa::detail {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kPiHalf = kPi / 2.0;

// expm1(y)/y with the removable singularity filled in.
inline double phi(double y) {
  if (std::fabs(y) < 1e-4)
    return 1.0 + y * (0.5 + y * (1.0 / 6.0 + y / 24.0));
  return std::expm1(y) / y;
}

// ln t evaluated as log1p(t - 1) near 1 to keep full relative accuracy.
inline double log_near1(double t) {
  return t > 0.5 ? std::log1p(t - 1.0) : std::log(t);
}

// ln(1 - w + w e^s) without overflow or cancellation for any s; the
// callers guarantee the base is positive (w > 0 when s -> +inf, w <= 1
// when s -> -inf).
inline double stable_log_base(double w, double s) {
  if (s > 50.0) {
    if (!(w > 0.0))
      throw std::domain_error("stable_log_base: nonpositive weight with s > 50");
    return std::log(w) + s + std::log1p((1.0 - w) * std::exp(-s) / w);
  }
  if (s < -50.0) {
    const double omw = 1.0 - w;
    if (omw > 0.0) return std::log1p(-w) + std::log1p(w * std::exp(s) / omw);
    if (omw == 0.0) return s;  // base collapses to e^s
    throw std::domain_error("stable_log_base: base nonpositive (w > 1, s << 0)");
  }
  const double z = w * std::expm1(s);
  if (!(z > -1.0)) throw std::domain_error("stable_log_base: base nonpositive");
  return std::log1p(z);
}

// (1 - w + w e^s)^exponent. Small exponents with a well-conditioned base go
// through pow directly (cheapest and tightest); everything else through the
// guarded log domain.
inline double exp_scaled_log_base(double w, double s, double exponent) {
  if (std::fabs(s) <= 50.0 && std::fabs(exponent) <= 2.0) {
    const double base = 1.0 + w * std::expm1(s);
    if (base >= 1e-3 && base <= 1e3) return std::pow(base, exponent);
  }
  return std::exp(stable_log_base(w, s) * exponent);
}

}  // namespace cusa::detail
