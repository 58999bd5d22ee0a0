#include "cusa/invtrig.hpp"

#include <cmath>
#include <stdexcept>

#include "cusa/bounds.hpp"
#include "cusa/constants.hpp"
#include "cusa/kernel.hpp"
#include "stable.hpp"

namespace cusa {

using detail::kPi;

namespace {

constexpr double kParamEps = 1e-12;

void require_t(double t, const char* who) {
  if (!(t > 0.0) || t > 1.0)
    throw std::domain_error(std::string(who) + ": t must be in (0, 1]");
}

// 1 = bracket (M side low), 2/3 = bracket reversed, 4 = upper only.
int basic_clause(double p, double q) {
  if (!(p <= 0.0 || p <= 3.0 * q))
    throw std::invalid_argument("inverse bounds: need p <= 0 or p <= 3q");
  const double line = 3.0 * q - 8.0 / 5.0;
  const double knee = kPi * kPi / 4.0 - 1.0;
  if (q >= 1.0 && p <= line) return 1;
  if (q > 34.0 / 35.0 && q <= 1.0 && p >= knee) return 2;
  if (q > 0.0 && q <= 34.0 / 35.0 && p >= line) return 3;
  if (q <= 0.0 && p >= line) return 4;
  throw std::invalid_argument(
      "inverse bounds: (p, q) fits none of the clauses: "
      "(i) q >= 1 and p <= 3q - 8/5; "
      "(ii) 34/35 < q <= 1 and p >= pi^2/4 - 1; "
      "(iii) 0 < q <= 34/35 and p >= 3q - 8/5; "
      "(iv) q <= 0 and p >= 3q - 8/5");
}

// Largest admissible p for the half-angle family: 3q/(1 - 2^{-q/2}),
// continued through q = 0 as 6/ln 2.
double halfangle_p_limit(double q) {
  if (std::fabs(q) < kParamEps) return 6.0 / std::log(2.0);
  return 3.0 * q / -std::expm1(-0.5 * q * std::log(2.0));
}

// u (1 - (p/m) U_q(v))^{-1/p}, the common half-angle bound shape.
double halfangle_shape(double u, double v, double p, double q, double m) {
  const double uq = u_p(q, v);
  if (std::fabs(p) < kParamEps) return u * std::exp(uq / m);
  const double z = -(p / m) * uq;
  if (!(z > -1.0))
    throw std::domain_error("half-angle bound: inner factor nonpositive");
  return u * std::exp(-std::log1p(z) / p);
}

}  // namespace

double halfangle_arcsin_bound(double t, double p, double q, double m) {
  require_t(t, "halfangle_arcsin_bound");
  const double u = std::sqrt(1.0 + t) - std::sqrt(1.0 - t);
  const double v = 0.5 * (std::sqrt(1.0 + t) + std::sqrt(1.0 - t));
  return halfangle_shape(u, v, p, q, m);
}

double halfangle_arccos_bound(double t, double p, double q, double m) {
  require_t(t, "halfangle_arccos_bound");
  const double u = std::sqrt(2.0) * std::sqrt(1.0 - t);
  const double v = std::sqrt(0.5 * (1.0 + t));
  return halfangle_shape(u, v, p, q, m);
}

InverseBoundPair arcsin_bounds_basic(double t, double p, double q) {
  require_t(t, "arcsin_bounds_basic");
  const int clause = basic_clause(p, q);
  const double s = std::sqrt((1.0 - t) * (1.0 + t));
  InverseBoundPair r;
  r.family = "basic";
  r.p = p;
  r.q = q;
  r.target = std::asin(t);
  const double over_m = t / bound_M(s, p, q);
  if (clause == 1) {
    r.lower = over_m;
    r.upper = t / bound_N(s, p, q);
  } else if (clause == 4) {
    r.lower = 0.0;
    r.upper = over_m;
  } else {
    r.lower = t / bound_N(s, p, q);
    r.upper = over_m;
  }
  return r;
}

InverseBoundPair arcsin_bounds_halfangle(double t, double p, double q) {
  require_t(t, "arcsin_bounds_halfangle");
  const int clause = basic_clause(p, q);
  if (clause == 3)
    throw std::invalid_argument(
        "arcsin_bounds_halfangle: clause (iii) parameters are not covered; "
        "need one of (i), (ii), (iv)");
  if (!(p < halfangle_p_limit(q)))
    throw std::invalid_argument(
        "arcsin_bounds_halfangle: admissibility requires p < 3q/(1 - 2^{-q/2})");
  InverseBoundPair r;
  r.family = "halfangle";
  r.p = p;
  r.q = q;
  r.target = std::asin(t);
  const double c = c_pq(p, q);
  const double at3 = halfangle_arcsin_bound(t, p, q, 3.0);
  const double atc = halfangle_arcsin_bound(t, p, q, c);
  if (clause == 1) {
    r.lower = at3;
    r.upper = atc;
  } else {
    r.lower = atc;
    r.upper = at3;
  }
  return r;
}

InverseBoundPair arccos_bounds(double t, double p, double q,
                               const std::string& family) {
  require_t(t, "arccos_bounds");
  InverseBoundPair r;
  r.family = family;
  r.p = p;
  r.q = q;
  r.target = std::acos(t);
  if (family == "carlson_classic") {
    r.lower = 6.0 * std::sqrt(1.0 - t) /
              (2.0 * std::sqrt(2.0) + std::sqrt(1.0 + t));
    r.upper = std::pow(2.0, 2.0 / 3.0) * std::sqrt(1.0 - t) *
              std::pow(1.0 + t, -1.0 / 6.0);
    return r;
  }
  if (family == "basic") {
    const int clause = basic_clause(p, q);
    const double s = std::sqrt((1.0 - t) * (1.0 + t));
    const double over_m = s / bound_M(t, p, q);
    if (clause == 1) {
      r.lower = over_m;
      r.upper = s / bound_N(t, p, q);
    } else if (clause == 4) {
      r.lower = 0.0;
      r.upper = over_m;
    } else {
      r.lower = s / bound_N(t, p, q);
      r.upper = over_m;
    }
    return r;
  }
  if (family == "halfangle") {
    const int clause = basic_clause(p, q);
    if (clause == 3)
      throw std::invalid_argument(
          "arccos_bounds: half-angle clause (iii) parameters are not covered");
    if (!(p < halfangle_p_limit(q)))
      throw std::invalid_argument(
          "arccos_bounds: admissibility requires p < 3q/(1 - 2^{-q/2})");
    const double c = c_pq(p, q);
    const double at3 = halfangle_arccos_bound(t, p, q, 3.0);
    const double atc = halfangle_arccos_bound(t, p, q, c);
    if (clause == 1) {
      r.lower = at3;
      r.upper = atc;
    } else {
      r.lower = atc;
      r.upper = at3;
    }
    return r;
  }
  throw std::invalid_argument(
      "arccos_bounds: family must be basic, halfangle, or carlson_classic");
}

}  // namespace cusa
