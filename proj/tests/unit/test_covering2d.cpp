#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <numbers>

#include "orthocover/covering2d.hpp"

using namespace orthocover;

namespace {
const double kLower = std::sqrt(12.0) / std::numbers::pi;

double grid_t(Covering2DType type, double a, int j, int n) {
  const double lo = type == Covering2DType::One ? 0.0 : 1.0;
  return lo + (t_upper_bound(type, a) - lo) * (j + 0.5) / n;
}
}  // namespace

TEST_CASE("closed form and generic construction agree on a 50x50 grid") {
  for (Covering2DType type : {Covering2DType::One, Covering2DType::Two}) {
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
      const double a = 0.02 + 0.96 * i / 49.0;
      for (int j = 0; j < 50; ++j) {
        const double t = grid_t(type, a, j, 50);
        const double generic = build_covering2d(type, a, t).density;
        worst = std::max(worst, std::abs(generic - density_closed_form(type, a, t)));
      }
    }
    CHECK(worst <= 1e-9);
  }
}

TEST_CASE("configuration points sit on their cycles") {
  const auto c = build_covering2d(Covering2DType::Two, 0.4, 1.2);
  CHECK(std::abs(horosphere_lhs(c.horoball, c.t_point) - 1.0) < 1e-12);
  CHECK(std::abs(horosphere_lhs(c.horoball, c.m) - 1.0) < 1e-12);
  CHECK(c.m[1] == doctest::Approx(0.4));
  CHECK(c.m[2] >= 0.0);
  CHECK(std::tanh(c.hyperball.h) == doctest::Approx(c.s2[2]));
  const auto c1 = build_covering2d(Covering2DType::One, 0.4, 0.5);
  CHECK(c1.m[1] == c1.t_point[1]);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(build_covering2d(Covering2DType::One, 1.0, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(build_covering2d(Covering2DType::One, 0.5, 1.5), std::invalid_argument);
  CHECK_THROWS_AS(density_c2(0.5, t_upper_bound(Covering2DType::Two, 0.5)), std::invalid_argument);
  CHECK_THROWS_AS(build_covering2d(Covering2DType::Two, 0.5, 0.5), std::domain_error);
  CHECK(t_upper_bound(Covering2DType::Two, 0.5) == doctest::Approx(2.0 / (1.0 + 0.5 - 0.0625)));
}

TEST_CASE("valid coverings have density above one") {
  for (Covering2DType type : {Covering2DType::One, Covering2DType::Two}) {
    for (double a : {0.1, 0.4, 0.8}) {
      for (int j = 0; j < 10; ++j) {
        const auto c = build_covering2d(type, a, grid_t(type, a, j, 10));
        if (verify_coverage_2d(c).overall) CHECK(c.density > 1.0);
      }
    }
  }
}

TEST_CASE("tiny cycles do not cover") {
  auto c = build_covering2d(Covering2DType::One, 0.5, 0.5);
  c.horoball.s = 0.999;
  c.hyperball.h = 0.0;
  const auto rep = verify_coverage_2d(c, 100);
  CHECK_FALSE(rep.overall);
  REQUIRE(rep.witness.has_value());
}

TEST_CASE("type-1 density at t = 1/2 stays above the lower bound and tends to it") {
  // The closed form gives values above sqrt(12)/pi; the bound is approached from above.
  double prev = 1e9;
  for (double a : {0.9, 0.5, 0.1, 0.01, 0.001}) {
    const double d = density_c1(a, 0.5);
    CHECK(d > kLower);
    CHECK(d < prev);
    prev = d;
  }
  CHECK(std::abs(density_c1(1e-3, 0.5) - kLower) < 1e-3);
  CHECK(std::abs(density_c1(1e-3, 0.5) - kLower) < 1e-6);
}

TEST_CASE("type-1 optimum is t = 1/2 for small a") {
  const auto opt = optimize2d(Covering2DType::One, 1e-3);
  CHECK(opt.t == doctest::Approx(0.5).epsilon(1e-3));
  for (int k = -10; k <= 10; ++k) {
    const double t = opt.t + 0.02 * k;
    if (t <= 0.0 || t > 1.0) continue;
    const auto c = build_covering2d(Covering2DType::One, 1e-3, t);
    if (verify_coverage_2d(c).overall) CHECK(density_c1(1e-3, t) >= opt.density - 1e-12);
  }
}

TEST_CASE("type-2 optimum at small a") {
  const auto opt = optimize2d(Covering2DType::Two, 1e-3);
  CHECK(std::abs(opt.t - 1.142) < 1e-2);
  CHECK(std::abs(opt.density - kLower) < 1e-3);
  CHECK(verify_coverage_2d(build_covering2d(Covering2DType::Two, 1e-3, opt.t)).overall);
}

TEST_CASE("optimal density decreases as a shrinks") {
  for (Covering2DType type : {Covering2DType::One, Covering2DType::Two}) {
    double prev = 1e9;
    for (double a : {0.8, 0.4, 0.1, 0.01}) {
      const double d = optimize2d(type, a).density;
      CHECK(d < prev);
      prev = d;
    }
  }
}
