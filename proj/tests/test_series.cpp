// Exact-rational coefficient tables and the classical expansions they feed.
// Reference values were computed independently at 50-digit precision and
// truncated to the digits shown.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cusa/series.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>

using namespace cusa;

namespace {

rational rat(long num, long den) { return rational(num) / den; }

// splitmix64, re-stated locally so the sampling here does not depend on the
// verifier module.
std::uint64_t mix(std::uint64_t& s) {
  s += 0x9E3779B97f4A7C15ULL;
  std::uint64_t z = s;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double unit(std::uint64_t& s) { return (mix(s) >> 11) * 0x1.0p-53; }

}  // namespace

TEST_CASE("Bernoulli magnitudes are exact rationals") {
  const SeriesTable& tab = default_series_table();
  REQUIRE(tab.n_max >= 40);
  CHECK(tab.bern_abs[0] == rational(1));
  CHECK(tab.bern_abs[1] == rat(1, 6));
  CHECK(tab.bern_abs[2] == rat(1, 30));
  CHECK(tab.bern_abs[3] == rat(1, 42));
  CHECK(tab.bern_abs[4] == rat(1, 30));
  CHECK(tab.bern_abs[5] == rat(5, 66));
  CHECK(tab.bern_abs[6] == rat(691, 2730));
}

TEST_CASE("coefficient tables at n = 2 and n = 3 are the hand-computed rationals") {
  const SeriesTable& tab = default_series_table();
  // n = 2: |B_4| = 1/30, (2n)! = 24, 4^n = 16.
  CHECK(tab.a[2] == rat(1, 9));      // 5 * 16 / (30 * 24)
  CHECK(tab.b[2] == rat(1, 3));      // 15 * 16 / (30 * 24)
  CHECK(tab.c[2] == rat(8, 45));     // 8 * 16 / (30 * 24)
  // n = 3: |B_6| = 1/42, (2n)! = 720, 4^n = 64.
  CHECK(tab.a[3] == rat(2, 135));    // 7 * 64 / (42 * 720)
  CHECK(tab.b[3] == rat(2, 15));     // 63 * 64 / (42 * 720)
  CHECK(tab.c[3] == rat(104, 945));  // 52 * 64 / (42 * 720)
}

TEST_CASE("difference tables vanish exactly at n = 2 and stay positive after") {
  const SeriesTable& tab = default_series_table();
  CHECK(tab.b3a[2] == rational(0));
  CHECK(tab.c85a[2] == rational(0));
  for (int n = 3; n <= tab.n_max; ++n) {
    CHECK(tab.b3a[n] > 0);
    CHECK(tab.c85a[n] > 0);
  }
  // The n = 3 quotient is exactly 34/35; it drives the lower end of g2.
  CHECK(tab.c85a[3] / tab.b3a[3] == rat(34, 35));
  // Double shadows agree with the rationals they shadow.
  for (int n = 2; n <= tab.n_max; ++n) {
    CHECK(tab.a_f[n] == doctest::Approx(static_cast<double>(tab.a[n])).epsilon(1e-15));
    CHECK(tab.b3a_f[n] == doctest::Approx(static_cast<double>(tab.b3a[n])).epsilon(1e-15));
  }
}

TEST_CASE("table construction rejects out-of-range sizes") {
  CHECK_THROWS_AS(build_series_table(1), std::invalid_argument);
  CHECK_THROWS_AS(build_series_table(65), std::invalid_argument);
  CHECK(build_series_table(2).n_max == 2);
}

TEST_CASE("expansions reproduce reference values at fixed points") {
  // 50-digit references: csc 1 = 1.1883951057781212163...,
  // cot 1.5 = 0.070914844302652448789..., csc^2 2 = 1.2094504370630379189...,
  // tan 1.2 = 2.5721516221263189354...
  CHECK(elementary_series(SeriesKind::csc, 1.0) ==
        doctest::Approx(1.1883951057781212163).epsilon(1e-14));
  CHECK(elementary_series(SeriesKind::cot, 1.5) ==
        doctest::Approx(0.070914844302652448789).epsilon(1e-12));
  CHECK(elementary_series(SeriesKind::csc_sq, 2.0) ==
        doctest::Approx(1.2094504370630379189).epsilon(1e-10));
  CHECK(elementary_series(SeriesKind::tan, 1.0) ==
        doctest::Approx(1.5574077246549022305).epsilon(1e-10));
}

TEST_CASE("expansions track the closed forms over seeded samples") {
  std::uint64_t s = 2024;
  for (int i = 0; i < 100; ++i) {
    // Stay inside 55% of the radius so 30 terms converge well below 1e-10.
    const double pi = 3.14159265358979323846;
    double x = (0.05 + 0.50 * unit(s)) * pi;
    CHECK(std::fabs(elementary_series(SeriesKind::csc, x) - 1.0 / std::sin(x)) <= 1e-10);
    CHECK(std::fabs(elementary_series(SeriesKind::cot, x) -
                    std::cos(x) / std::sin(x)) <= 1e-10);
    CHECK(std::fabs(elementary_series(SeriesKind::csc_sq, x) -
                    1.0 / (std::sin(x) * std::sin(x))) <= 1e-10);
    double y = x / 2.0;  // inside the tan radius
    CHECK(std::fabs(elementary_series(SeriesKind::tan, y) - std::tan(y)) <= 1e-10);
  }
}

TEST_CASE("odd expansions respect the sign of x") {
  CHECK(elementary_series(SeriesKind::csc, -1.0) ==
        -elementary_series(SeriesKind::csc, 1.0));
  CHECK(elementary_series(SeriesKind::cot, -1.5) ==
        -elementary_series(SeriesKind::cot, 1.5));
  CHECK(elementary_series(SeriesKind::csc_sq, -2.0) ==
        elementary_series(SeriesKind::csc_sq, 2.0));
  CHECK(elementary_series(SeriesKind::tan, 0.0) == 0.0);
}

TEST_CASE("expansions reject arguments at or beyond the radius") {
  const double pi = 3.14159265358979323846;
  CHECK_THROWS_AS(elementary_series(SeriesKind::csc, 0.0), std::domain_error);
  CHECK_THROWS_AS(elementary_series(SeriesKind::csc, pi), std::domain_error);
  CHECK_THROWS_AS(elementary_series(SeriesKind::cot, 3.5), std::domain_error);
  CHECK_THROWS_AS(elementary_series(SeriesKind::tan, pi / 2), std::domain_error);
  CHECK_THROWS_AS(elementary_series(SeriesKind::csc, 1.0, 0), std::invalid_argument);
}

TEST_CASE("g1 coefficient ratio has the closed small-n values") {
  // r_n(q) = ((4^n - 1) q - (4^n - 4n)) / (2n + 1).
  CHECK(g1_coeff_ratio(2, 1.0) == doctest::Approx(7.0 / 5.0).epsilon(1e-15));
  CHECK(g1_coeff_ratio(2, 34.0 / 35.0) == doctest::Approx(46.0 / 35.0).epsilon(1e-14));
  // At q = 34/35 the first two ratios tie; this is the knife edge between
  // the monotone-increasing and monotone-decreasing coefficient regimes.
  CHECK(g1_coeff_ratio(3, 34.0 / 35.0) == doctest::Approx(46.0 / 35.0).epsilon(1e-14));
  CHECK_THROWS_AS(g1_coeff_ratio(1, 1.0), std::invalid_argument);
}

TEST_CASE("g1 coefficient ratio profile is strictly increasing for q >= 1") {
  for (double q : {1.0, 1.2}) {
    double prev = g1_coeff_ratio(2, q);
    for (int n = 3; n <= 40; ++n) {
      double r = g1_coeff_ratio(n, q);
      CHECK(r > prev);
      prev = r;
    }
  }
  // Below the tie point the tail is eventually decreasing (it heads to -inf).
  CHECK(g1_coeff_ratio(10, 0.9) < g1_coeff_ratio(4, 0.9));
}

TEST_CASE("g2 coefficient ratio rises from 34/35 toward 1") {
  CHECK(g2_coeff_ratio(3) == doctest::Approx(34.0 / 35.0).epsilon(1e-15));
  double prev = g2_coeff_ratio(3);
  for (int n = 4; n <= 40; ++n) {
    double r = g2_coeff_ratio(n);
    CHECK(r >= prev);          // double rounding may tie near 1
    if (n <= 20) CHECK(r > prev);
    CHECK(r <= 1.0);
    prev = r;
  }
  CHECK(g2_coeff_ratio(40) > 1.0 - 1e-12);
  CHECK_THROWS_AS(g2_coeff_ratio(2), std::invalid_argument);
}
