#include "cusa/series.hpp"

#include <cmath>
#include <stdexcept>

namespace cusa {

namespace {

using boost::multiprecision::cpp_int;

// Bernoulli numbers by the classical recurrence
//   B_m = -1/(m+1) * sum_{k=0}^{m-1} C(m+1, k) B_k,  B_0 = 1.
std::vector<rational> bernoulli_list(int m_max) {
  std::vector<rational> bern(m_max + 1);
  bern[0] = 1;
  for (int m = 1; m <= m_max; ++m) {
    rational acc = 0;
    cpp_int binom = 1;  // C(m+1, 0)
    for (int k = 0; k < m; ++k) {
      acc += rational(binom) * bern[k];
      binom = binom * (m + 1 - k) / (k + 1);  // -> C(m+1, k+1)
    }
    bern[m] = -acc / (m + 1);
  }
  return bern;
}

}  // namespace

SeriesTable build_series_table(int n_max) {
  if (n_max < 2 || n_max > 64)
    throw std::invalid_argument("build_series_table: n_max must be in [2, 64]");

  SeriesTable t;
  t.n_max = n_max;
  auto bern = bernoulli_list(2 * n_max);

  auto resize_all = [&](auto&... v) { (v.resize(n_max + 1), ...); };
  resize_all(t.bern_abs, t.a, t.b, t.c, t.b3a, t.c85a);
  resize_all(t.a_f, t.b_f, t.c_f, t.b3a_f, t.c85a_f);

  rational fact = 1;  // (2n)!
  rational p4 = 1;    // 4^n
  for (int n = 0; n <= n_max; ++n) {
    if (n > 0) {
      fact *= rational(2 * n - 1) * (2 * n);
      p4 *= 4;
    }
    rational babs = boost::multiprecision::abs(bern[2 * n]);
    t.bern_abs[n] = babs;
    rational base = p4 * babs / fact;
    t.a[n] = rational(2 * n + 1) * base;
    t.b[n] = (p4 - 1) * base;
    t.c[n] = (p4 - 4 * n) * base;
    t.b3a[n] = t.b[n] - 3 * t.a[n];
    t.c85a[n] = t.c[n] - rational(8, 5) * t.a[n];
    t.a_f[n] = static_cast<double>(t.a[n]);
    t.b_f[n] = static_cast<double>(t.b[n]);
    t.c_f[n] = static_cast<double>(t.c[n]);
    t.b3a_f[n] = static_cast<double>(t.b3a[n]);
    t.c85a_f[n] = static_cast<double>(t.c85a[n]);
  }
  return t;
}

const SeriesTable& default_series_table() {
  static const SeriesTable table = build_series_table(40);
  return table;
}

double elementary_series(SeriesKind kind, double x, int n_terms) {
  if (n_terms < 1) throw std::invalid_argument("elementary_series: n_terms < 1");
  const double pi = 3.14159265358979323846;
  const double radius = kind == SeriesKind::tan ? pi / 2 : pi;
  if (kind != SeriesKind::tan && x == 0.0)
    throw std::domain_error("elementary_series: x = 0 outside domain");
  if (!(std::fabs(x) < radius))
    throw std::domain_error(
        "elementary_series: |x| at or beyond the radius of convergence");

  const SeriesTable& tab = default_series_table();
  const int nmax = std::min(n_terms, tab.n_max);
  const double x2 = x * x;

  // The coefficient 4^n |B_{2n}|/(2n)! is a_f[n]/(2n+1); each expansion is a
  // rescaling of it:
  //   csc:    (2^{2n} - 2)  |B|/(2n)! y^{2n-1}  = core (1 - 2/4^n) y^{2n-1}
  //   cot:    2^{2n}        |B|/(2n)! y^{2n-1}  = core             y^{2n-1}
  //   csc^2:  (2n-1) 2^{2n} |B|/(2n)! y^{2n-2}  = core (2n-1)      y^{2n-2}
  //   tan:    (2^{2n}-1) 2^{2n} |B|/(2n)! y^{2n-1} = b_n           y^{2n-1}
  double sum = 0.0;
  double odd_pow = x;  // x^(2n-1) at n = 1
  for (int n = 1; n <= nmax; ++n) {
    const double core = tab.a_f[n] / (2 * n + 1);
    switch (kind) {
      case SeriesKind::csc:
        sum += core * (1.0 - 2.0 * std::ldexp(1.0, -2 * n)) * odd_pow;
        break;
      case SeriesKind::cot:
        sum -= core * odd_pow;
        break;
      case SeriesKind::csc_sq:
        sum += core * (2 * n - 1) * (odd_pow / x);
        break;
      case SeriesKind::tan:
        sum += tab.b_f[n] * odd_pow;
        break;
    }
    odd_pow *= x2;
  }
  switch (kind) {
    case SeriesKind::csc:
    case SeriesKind::cot:
      return 1.0 / x + sum;
    case SeriesKind::csc_sq:
      return 1.0 / (x * x) + sum;
    case SeriesKind::tan:
      return sum;
  }
  throw std::logic_error("elementary_series: unreachable");
}

double g1_coeff_ratio(int n, double q) {
  if (n < 2) throw std::invalid_argument("g1_coeff_ratio: n must be >= 2");
  // 4^n overflows the 53-bit mantissa past n = 26, so stay in rationals.
  const rational p4 = rational(cpp_int(1) << (2 * n));
  const rational r = ((p4 - 1) * rational(q) - (p4 - 4 * n)) / (2 * n + 1);
  return r.convert_to<double>();
}

double g2_coeff_ratio(int n) {
  if (n < 3) throw std::invalid_argument("g2_coeff_ratio: n must be >= 3");
  const rational p4 = rational(cpp_int(1) << (2 * n));
  const rational num = p4 - rational(36 * n, 5) - rational(8, 5);
  return (num / (p4 - 6 * n - 4)).convert_to<double>();
}

}  // namespace cusa
