#include <cmath>

#include "doctest.h"
#include "lgcy/oscillatory.hpp"

using namespace lgcy;

namespace {

constexpr double kPi = 3.14159265358979323846;

// Lanczos approximation, g = 7, nine coefficients; used only as an oracle.
double lanczos_gamma(double x) {
  static const double c[] = {0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
                             771.32342877765313,   -176.61502916214059,   12.507343278686905,
                             -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
  if (x < 0.5) return kPi / (std::sin(kPi * x) * lanczos_gamma(1.0 - x));
  x -= 1.0;
  double a = c[0];
  const double t = x + 7.5;
  for (int i = 1; i < 9; ++i) a += c[i] / (x + i);
  return std::sqrt(2.0 * kPi) * std::pow(t, x + 0.5) * std::exp(-t) * a;
}

}  // namespace

TEST_CASE("Gamma oracle sanity") {
  CHECK(lanczos_gamma(0.5) == doctest::Approx(std::sqrt(kPi)).epsilon(1e-14));
  CHECK(lanczos_gamma(5.0) == doctest::Approx(24.0).epsilon(1e-13));
  CHECK(lanczos_gamma(1.0 / 3.0) / 3.0 == doctest::Approx(0.8929795).epsilon(1e-7));
  CHECK(lanczos_gamma(2.0 / 3.0) / 3.0 == doctest::Approx(0.45137265).epsilon(1e-8));
}

TEST_CASE("Thimble rays") {
  for (long d = 2; d <= 7; ++d)
    for (long a = 0; a < d; ++a) {
      auto ray = ThimbleRay::make(d, a);
      CHECK(std::abs(ray.direction) == doctest::Approx(1.0));
      Complex fd = std::pow(ray.direction, static_cast<double>(d));
      CHECK(std::abs(fd + 1.0) <= 1e-12);
      for (long b = 0; b < a; ++b) CHECK(std::abs(ray.direction - ThimbleRay::make(d, b).direction) > 1e-3);
    }
  CHECK_THROWS_AS(ThimbleRay::make(3, 3), Error);
}

TEST_CASE("Thimble integrals against the Gamma oracle") {
  auto g20 = thimble_integral(2, 0, 0, 1e-12);
  CHECK(std::abs(std::abs(g20.value) - std::sqrt(kPi) / 2.0) <= 1e-10);
  CHECK(g20.error_estimate <= 1e-12);
  CHECK(g20.tail_bound <= 1.000001e-13);

  for (long d = 2; d <= 6; ++d)
    for (long k = 0; k <= d - 2; ++k)
      for (long a = 0; a < d; ++a) {
        auto r = thimble_integral(d, k, a, 1e-11);
        Complex w = std::polar(1.0, kPi * (2 * a + 1) / d);
        Complex oracle = std::pow(w, static_cast<double>(k + 1)) * lanczos_gamma((k + 1.0) / d) / static_cast<double>(d);
        CHECK(std::abs(r.value - oracle) <= 1e-10);
        CHECK(r.deviation <= 1e-10);
      }
  CHECK(std::abs(std::abs(thimble_integral(3, 0, 0, 1e-10).value) - 0.8929795) <= 1e-7);
  CHECK(std::abs(std::abs(thimble_integral(3, 1, 0, 1e-10).value) - 0.45137265) <= 1e-8);
}

TEST_CASE("Rotating the thimble index multiplies by a root of unity") {
  for (long d = 2; d <= 6; ++d)
    for (long k = 0; k <= d - 2; ++k) {
      Complex step = std::polar(1.0, 2.0 * kPi * (k + 1) / d);
      for (long a = 0; a + 1 < d; ++a) {
        auto lo = thimble_integral(d, k, a, 1e-12);
        auto hi = thimble_integral(d, k, a + 1, 1e-12);
        CHECK(std::abs(hi.value - step * lo.value) <= 1e-10);
      }
    }
}

TEST_CASE("Error budget and preconditions") {
  auto coarse = thimble_integral(4, 1, 0, 1e-4);
  auto fine = thimble_integral(4, 1, 0, 1e-12);
  CHECK(coarse.error_estimate <= 1e-4);
  CHECK(fine.error_estimate <= 1e-12);
  CHECK(fine.cutoff > coarse.cutoff);
  CHECK_THROWS_AS(thimble_integral(3, 2, 0, 1e-8), Error);
  CHECK_THROWS_AS(thimble_integral(1, 0, 0, 1e-8), Error);
  try {
    thimble_integral(3, 0, 0, 1e-300);
    FAIL("expected ToleranceNotMet");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ToleranceNotMet);
  }
}

TEST_CASE("Scaling law of the fiber quotient") {
  // Q(1, t) = 1/(3 z(t)^2) on the cubic.
  for (double t : {-1.0, -0.5, -8.0}) {
    Complex z = std::pow(-t, 1.0 / 3.0) * std::polar(1.0, kPi / 3.0);
    CHECK(std::abs(fiber_quotient(3, 0, t) - 1.0 / (3.0 * z * z)) <= 1e-14);
  }
  auto r = scaling_law_check(3, 0, {-1.0, -0.25, -2.0, -27.0});
  CHECK(r.exponent == doctest::Approx(-2.0 / 3.0));
  CHECK(r.max_deviation <= 1e-12);
  CHECK(r.matching_exponent == "(deg A + N)/d");
  CHECK(std::abs(r.samples[0].ratio - 1.0) <= 1e-15);

  auto q = scaling_law_check(2, 0, {-1.0, -2.0, -4.0});
  CHECK(q.max_deviation <= 1e-12);
  CHECK(std::abs(q.samples[2].ratio - 0.5) <= 1e-12);

  for (long d = 2; d <= 6; ++d)
    for (long k = 0; k <= d - 2; ++k) CHECK(scaling_law_check(d, k, {-0.3, -1.7, -9.0}).max_deviation <= 1e-12);
}

TEST_CASE("Gamma-argument probe") {
  auto p3 = gamma_factor_probe(3, 0);
  CHECK(!p3.coincident);
  CHECK(!p3.candidates[0].matches);
  CHECK(p3.candidates[1].matches);
  CHECK(std::abs(p3.candidates[1].ratio + 1.0) <= 1e-8);
  CHECK(p3.finding.rfind("(N+k)/d matches", 0) == 0);

  auto p2 = gamma_factor_probe(2, 0);
  CHECK(p2.candidates[1].matches);
  CHECK(!p2.candidates[0].matches);
  CHECK(p2.candidates[1].argument == doctest::Approx(0.5));

  auto same = gamma_factor_probe(3, 1, 3);
  CHECK(same.coincident);
  CHECK(same.finding == "coincident candidates");
}
