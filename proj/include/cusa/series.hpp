#pragma once
// Exact-rational Taylor machinery: Bernoulli numbers, the even-order
// coefficient tables a_n, b_n, c_n shared by the kernel ratios, and the
// elementary csc/cot/csc^2/tan expansions they come from.

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

namespace cusa {

using rational = boost::multiprecision::cpp_rational;

enum class SeriesKind { csc, cot, csc_sq, tan };

// Tables indexed directly by n (entries 0..n_max; a/b/c start being nonzero
// at n = 2, the difference tables at n = 3).
struct SeriesTable {
  int n_max = 0;
  std::vector<rational> bern_abs;  // |B_{2n}|
  std::vector<rational> a;         // (2n+1)       * 4^n |B_{2n}| / (2n)!
  std::vector<rational> b;         // (4^n - 1)    * 4^n |B_{2n}| / (2n)!
  std::vector<rational> c;         // (4^n - 4n)   * 4^n |B_{2n}| / (2n)!
  std::vector<rational> b3a;       // b_n - 3 a_n       (exactly 0 at n = 2)
  std::vector<rational> c85a;      // c_n - (8/5) a_n   (exactly 0 at n = 2)
  // double shadows for fast summation
  std::vector<double> a_f, b_f, c_f, b3a_f, c85a_f;
};

// Build a table up to n_max (2 <= n_max <= 64).
SeriesTable build_series_table(int n_max);

// Shared table with n_max = 40, built once.
const SeriesTable& default_series_table();

// Sum the classical expansion of the requested function at x.
//   csc, cot, csc_sq: 0 < |x| < pi;  tan: |x| < pi/2.
// Values outside the radius of convergence are rejected.
double elementary_series(SeriesKind kind, double x, int n_terms = 30);

// (q*b_n - c_n)/a_n = ((4^n - 1) q - (4^n - 4n)) / (2n + 1),  n >= 2.
double g1_coeff_ratio(int n, double q);

// (c_n - (8/5) a_n)/(b_n - 3 a_n),  n >= 3; equals 34/35 at n = 3 and
// increases strictly toward 1.
double g2_coeff_ratio(int n);

}  // namespace cusa
