#include "cusa/means.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "cusa/bounds.hpp"
#include "cusa/constants.hpp"
#include "stable.hpp"

namespace cusa {

namespace {

constexpr double kParamEps = 1e-12;

void require_positive_pair(double a, double b, const char* who) {
  if (!(a > 0.0) || !(b > 0.0))
    throw std::domain_error(std::string(who) + ": a, b must be > 0");
}

// arccosh(x) for x >= 1 without cancellation near 1.
double arccosh(double x) {
  const double r = x - 1.0;
  return std::log1p(r + std::sqrt(r * (x + 1.0)));
}

// ln(sin z / z), even in z, finite on (-pi, pi).
double h_log_sinc(double z) {
  if (z == 0.0) return 0.0;
  return std::log(std::sin(z) / z);
}

// theta * d/dz[ln(sin z / z)] at z = m*theta, i.e. (z cot z - 1)/m, with a
// series form near zero where it would be 0/0.
double h_prime_scaled(double m, double theta) {
  const double z = m * theta;
  if (std::fabs(z) < 0.5) {
    // (z cot z - 1)/m = -theta (z/3 + z^3/45 + 2 z^5/945 + z^7/4725 + ...)
    const double z2 = z * z;
    return -theta * z *
           (1.0 / 3.0 + z2 * (1.0 / 45.0 + z2 * (2.0 / 945.0 + z2 / 4725.0)));
  }
  return (z * std::cos(z) / std::sin(z) - 1.0) / m;
}

}  // namespace

MeanKind mean_kind_from_string(const std::string& name) {
  if (name == "G") return MeanKind::G;
  if (name == "A") return MeanKind::A;
  if (name == "Q") return MeanKind::Q;
  if (name == "P") return MeanKind::P;
  if (name == "T") return MeanKind::T;
  if (name == "U") return MeanKind::U;
  if (name == "SB") return MeanKind::SB;
  if (name == "S_pq") return MeanKind::S_pq;
  throw std::invalid_argument("unknown mean kind: " + name);
}

const char* to_string(MeanKind k) {
  switch (k) {
    case MeanKind::G: return "G";
    case MeanKind::A: return "A";
    case MeanKind::Q: return "Q";
    case MeanKind::P: return "P";
    case MeanKind::T: return "T";
    case MeanKind::U: return "U";
    case MeanKind::SB: return "SB";
    case MeanKind::S_pq: return "S_pq";
  }
  return "?";
}

MeanValue classical_mean(MeanKind kind, double a, double b) {
  require_positive_pair(a, b, "classical_mean");
  MeanValue mv{kind, 0.0, a, b, 0.0, 0.0};
  const double z = (a - b) / (a + b);
  switch (kind) {
    case MeanKind::G:
      mv.value = std::sqrt(a) * std::sqrt(b);
      return mv;
    case MeanKind::A:
      mv.value = 0.5 * (a + b);
      return mv;
    case MeanKind::Q:
      mv.value = std::hypot(a, b) / std::sqrt(2.0);
      return mv;
    case MeanKind::P: {
      if (a == b) { mv.value = a; return mv; }
      mv.value = std::fabs(z) < 1e-8
                     ? 0.5 * (a + b) / (1.0 + z * z / 6.0)
                     : (a - b) / (2.0 * std::asin(z));
      return mv;
    }
    case MeanKind::T: {
      if (a == b) { mv.value = a; return mv; }
      mv.value = std::fabs(z) < 1e-8
                     ? 0.5 * (a + b) / (1.0 - z * z / 3.0)
                     : (a - b) / (2.0 * std::atan(z));
      return mv;
    }
    case MeanKind::U: {
      if (a == b) { mv.value = a; return mv; }
      const double zu = (a - b) / std::sqrt(2.0 * a * b);
      const double g = std::sqrt(a) * std::sqrt(b);
      mv.value = std::fabs(zu) < 1e-8
                     ? g / (1.0 - zu * zu / 3.0)
                     : (a - b) / (std::sqrt(2.0) * std::atan(zu));
      return mv;
    }
    case MeanKind::SB:
      mv.value = schwab_borchardt(a, b);
      return mv;
    case MeanKind::S_pq:
      throw std::invalid_argument("classical_mean: S_pq needs sine_mean(p, q, a, b)");
  }
  throw std::invalid_argument("classical_mean: unknown kind");
}

double schwab_borchardt(double a, double b) {
  if (!(a >= 0.0) || !(b > 0.0))
    throw std::domain_error("schwab_borchardt: need a >= 0 and b > 0");
  if (a == b) return a;
  if (a < b) {
    const double c = std::sqrt((b - a) * (b + a));
    return c / std::atan2(c, a);  // atan2(c, a) = arccos(a/b)
  }
  return std::sqrt((a - b) * (a + b)) / arccosh(a / b);
}

double sine_mean(double p, double q, double a, double b) {
  if (!(a > 0.0) || !(b >= a))
    throw std::domain_error("sine_mean: need b >= a > 0");
  if (!(p >= -2.0 && p <= 2.0 && q >= -2.0 && q <= 2.0))
    throw std::domain_error("sine_mean: need p, q in [-2, 2]");
  if (!(p + q >= 0.0 && p + q <= 3.0))
    throw std::domain_error("sine_mean: need 0 <= p + q <= 3");
  if (a == b) return a;
  const double theta = std::atan2(std::sqrt((b - a) * (b + a)), a);
  double log_ratio;  // ln(value / b)
  if (std::fabs(p - q) < kParamEps) {
    if (std::fabs(p) < kParamEps) return b;
    log_ratio = h_prime_scaled(p, theta);
  } else if (std::fabs(p - q) < 1e-4) {
    log_ratio = h_prime_scaled(0.5 * (p + q), theta);
  } else {
    log_ratio = (h_log_sinc(p * theta) - h_log_sinc(q * theta)) / (p - q);
  }
  return b * std::exp(log_ratio);
}

double sb_bound_kq(double a, double b, double k, double q) {
  if (!(a > 0.0) || !(b > a))
    throw std::domain_error("sb_bound_kq: need b > a > 0");
  if (!(k > 0.0 && k < 3.0))
    throw std::domain_error("sb_bound_kq: need k in (0, 3)");
  const bool upper_i = k >= 7.0 / 5.0 && q >= 8.0 / (5.0 * (3.0 - k));
  const bool upper_iv = k < p0star() && q >= q_of_k(k);
  const bool lower_ii = k > p0() && q <= q_of_k(k);
  const bool lower_iii = k <= 23.0 / 17.0 && q <= 8.0 / (5.0 * (3.0 - k));
  if (!(upper_i || upper_iv || lower_ii || lower_iii))
    throw std::domain_error(
        "sb_bound_kq: (k, q) satisfies none of the four sharp clauses: "
        "(i) k in [7/5, 3) and q >= 8/(5(3-k)); "
        "(ii) k in (p0, 3) and q <= q_of_k(k); "
        "(iii) k in (0, 23/17] and q <= 8/(5(3-k)); "
        "(iv) k in (0, p0star) and q >= q_of_k(k)");
  return std::pow(b, 1.0 - 1.0 / k) *
         std::pow((1.0 - k / 3.0) * std::pow(b, q) + k / 3.0 * std::pow(a, q),
                  1.0 / (k * q));
}

double seiffert_p_bounds(double a, double b, double q) {
  require_positive_pair(a, b, "seiffert_p_bounds");
  if (a == b)
    throw std::domain_error("seiffert_p_bounds: a and b must be distinct");
  const double am = 0.5 * (a + b);
  const double gm = std::sqrt(a) * std::sqrt(b);
  return am * bound_M_line(gm / am, q);
}

}  // namespace cusa
