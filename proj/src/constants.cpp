#include "cusa/constants.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

#include "stable.hpp"

namespace cusa {

using detail::kPi;
using detail::phi;

namespace {

const double kLn2OverPi = std::log(2.0 / kPi);   // negative
const double kLnPiOver2 = -kLn2OverPi;

// Bisect fn (increasing) to the root of fn(x) = target inside [lo, hi];
// expands the bracket geometrically if the initial one misses.
SolvedConstant bisect_increasing(const std::string& name,
                                 const std::function<double(double)>& fn,
                                 double target, double lo, double hi,
                                 bool allow_expand) {
  double step = hi - lo;
  while (fn(lo) > target) {
    if (!allow_expand || lo < -1e6)
      throw std::runtime_error(name + ": bracket failure (low side)");
    hi = lo;
    lo -= step;
    step *= 2.0;
  }
  while (fn(hi) < target) {
    if (!allow_expand || hi > 1e6)
      throw std::runtime_error(name + ": bracket failure (high side)");
    lo = hi;
    hi += step;
    step *= 2.0;
  }
  const double blo = lo, bhi = hi;
  while (hi - lo > 1e-13) {
    const double mid = 0.5 * (lo + hi);
    (fn(mid) < target ? lo : hi) = mid;
  }
  const double value = 0.5 * (lo + hi);
  return {name, value, std::fabs(fn(value) - target), blo, bhi};
}

}  // namespace

double endpoint_T(double p, double q) {
  if (q <= 0.0) return 0.0;
  // q (1 - (2/pi)^p) / p, with the p = 0 limit q ln(pi/2) built in.
  return q * kLnPiOver2 * phi(p * kLn2OverPi);
}

double q_of_p(double p) {
  // p / (3 (1 - (2/pi)^p)) = -1 / (3 ln(2/pi) phi(p ln(2/pi)))
  return -1.0 / (3.0 * kLn2OverPi * phi(p * kLn2OverPi));
}

double p_of_q(double q) {
  if (!(q > 0.0)) throw std::domain_error("p_of_q: q must be > 0");
  return bisect_increasing("p_of_q", q_of_p, q, 0.1, 10.0, true).value;
}

double q_of_k(double k) {
  if (!(k > 0.0 && k < 3.0))
    throw std::domain_error("q_of_k: k must be in (0, 3)");
  return std::log1p(-k / 3.0) / (k * kLn2OverPi);
}

double v_line(double q) {
  if (!(q > 0.0)) throw std::domain_error("v_line: q must be > 0");
  return std::log(8.0 / (15.0 * q)) - (3.0 * q - 8.0 / 5.0) * kLn2OverPi;
}

double c_pq(double p, double q) {
  const double ln2 = std::log(2.0);
  const double lnpi22 = std::log(kPi) - 1.5 * ln2;  // ln(pi / (2 sqrt 2)) > 0
  const double num = 0.5 * ln2 * phi(-0.5 * q * ln2);
  const double den = lnpi22 * phi(-p * lnpi22);
  return num / den;
}

SolvedConstant solve_p0() {
  return bisect_increasing("p0", q_of_p, 1.0, 1.0, 2.0, false);
}

SolvedConstant solve_p0star() {
  return bisect_increasing("p0star", q_of_p, 34.0 / 35.0, 1.0, 2.0, false);
}

SolvedConstant solve_q0() {
  // v is increasing on [0.74, 1]; the bracket deliberately excludes the
  // spurious sign change of the raw logarithm at q = 8/15.
  return bisect_increasing("q0", v_line, 0.0, 0.74, 1.0, false);
}

double p0() {
  static const double value = solve_p0().value;
  return value;
}

double p0star() {
  static const double value = solve_p0star().value;
  return value;
}

double q0() {
  static const double value = solve_q0().value;
  return value;
}

}  // namespace cusa
