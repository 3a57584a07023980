#include <doctest.h>
#include <gsl/gsl_sf_clausen.h>

#include <cmath>
#include <stdexcept>
#include <numbers>
#include <string>

#include "orthocover/orthoscheme.hpp"

using namespace orthocover;

namespace {

constexpr double kPi = std::numbers::pi;

double gsl_lob(double x) { return 0.5 * gsl_sf_clausen(2.0 * x); }

// Frustum volume from the essential angles, evaluated with GSL's Clausen
// function and an independently written theta.
double oracle_volume(double p, double q, double r) {
  const double a = kPi / p, b = kPi / q, c = kPi / r;
  const double th = std::atan(std::sqrt(std::cos(b) * std::cos(b) - std::sin(a) * std::sin(a) * std::sin(c) * std::sin(c)) /
                              (std::cos(a) * std::cos(c)));
  return 0.25 * (gsl_lob(a + th) - gsl_lob(a - th) + gsl_lob(kPi / 2 + b - th) + gsl_lob(kPi / 2 - b - th) +
                 gsl_lob(c + th) - gsl_lob(c - th) + 2.0 * gsl_lob(kPi / 2 - th));
}

}  // namespace

TEST_CASE("existence bounds and parsing") {
  CHECK(existence_bound({3, 6}) == 7);
  CHECK(existence_bound({4, 4}) == 5);
  CHECK(existence_bound({6, 3}) == 4);
  CHECK(parse_family("4,4") == Family{4, 4});
  CHECK_THROWS_AS(parse_family("5,5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_family("3;6"), std::invalid_argument);
  try {
    build_schlafli(6, {3, 6});
    FAIL("expected an exception");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("below existence bound") != std::string::npos);
  }
  CHECK_THROWS_AS(build_schlafli(7.5, {3, 6}), std::invalid_argument);
  CHECK_THROWS_AS(build_schlafli(6.5, {4, 4}, TilingMode::RealP), std::invalid_argument);
  CHECK_NOTHROW(build_schlafli(6.5, {3, 6}, TilingMode::RealP));
}

TEST_CASE("signature conditions agree with the integer bounds") {
  for (Family f : kFamilies) {
    const int b = existence_bound(f);
    for (int p = b; p <= b + 10; ++p) CHECK(signature_admissible(p, f));
    CHECK_FALSE(signature_admissible(b - 1, f));
  }
}

TEST_CASE("coordinate residuals vanish for every supported tiling") {
  for (Family f : kFamilies) {
    const int b = existence_bound(f);
    for (int p = b; p <= b + 8; ++p) {
      const auto o = make_orthoscheme(p, f);
      for (double r : coordinate_residuals(o)) CHECK(std::abs(r) <= 1e-10);
    }
  }
  for (double p : {6.05, 6.4596, 6.95}) {
    const auto o = make_orthoscheme(p, {3, 6}, TilingMode::RealP);
    for (double r : coordinate_residuals(o)) CHECK(std::abs(r) <= 1e-10);
  }
}

TEST_CASE("vertex distances from H agree with model coordinates") {
  for (Family f : kFamilies) {
    const auto o = make_orthoscheme(existence_bound(f) + 1, f);
    const auto a = proper_vertex_cosh_from_schlafli(o.ctx);
    const auto b = proper_vertex_cosh_from_coordinates(o);
    for (int i = 0; i < 5; ++i) {
      for (int j = 0; j < 5; ++j) CHECK(a[i][j] == doctest::Approx(b[i][j]).epsilon(1e-10));
    }
  }
}

TEST_CASE("face Gram matrix equals the Coxeter matrix") {
  for (Family f : kFamilies) {
    const auto o = make_orthoscheme(existence_bound(f), f);
    const auto faces = face_covectors(o);
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        const double g = bilinear(faces[i], faces[j]) /
                         std::sqrt(bilinear(faces[i], faces[i]) * bilinear(faces[j], faces[j]));
        CHECK(g == doctest::Approx(o.ctx.c(i, j)).epsilon(1e-10));
      }
    }
  }
}

TEST_CASE("A0 ideal, A1 A2 P proper, A3 outer") {
  const auto o = make_orthoscheme(7, {3, 6});
  CHECK(classify(o.a0) == PointClass::Ideal);
  for (const auto* v : {&o.a1, &o.a2, &o.p0, &o.p1, &o.p2}) CHECK(classify(*v) == PointClass::Proper);
  CHECK(classify(o.a3()) == PointClass::Outer);
  CHECK(o.z1 > o.z2);
}

TEST_CASE("volume matches an independent Clausen evaluation") {
  CHECK(volume3(build_schlafli(7, {3, 6})) == doctest::Approx(0.3178116447).epsilon(1e-9));
  for (Family f : kFamilies) {
    for (int p = existence_bound(f); p <= existence_bound(f) + 5; ++p) {
      CHECK(volume3(build_schlafli(p, f)) == doctest::Approx(oracle_volume(p, f.q, f.r)).epsilon(1e-13));
    }
  }
}

TEST_CASE("volume grows with p") {
  for (Family f : kFamilies) {
    double prev = 0.0;
    for (int p = existence_bound(f); p <= existence_bound(f) + 6; ++p) {
      const double v = volume3(build_schlafli(p, f));
      CHECK(v > prev);
      prev = v;
    }
  }
}

TEST_CASE("base triangle angles") {
  for (Family f : kFamilies) {
    for (int p = existence_bound(f); p <= existence_bound(f) + 4; ++p) {
      const auto o = make_orthoscheme(p, f);
      const auto ang = base_triangle_angles(o);
      CHECK(ang[0] == doctest::Approx(kPi / f.q).epsilon(1e-10));
      CHECK(ang[1] == doctest::Approx(kPi / 2).epsilon(1e-10));
      CHECK(ang[2] == doctest::Approx(kPi / p).epsilon(1e-10));
      CHECK(base_triangle_area(o) == doctest::Approx(kPi / 2 - kPi / p - kPi / f.q).epsilon(1e-10));
    }
  }
  // The angle at P2 is pi/p, so the area increases with p.
  CHECK(base_triangle_area(make_orthoscheme(8, {3, 6})) > base_triangle_area(make_orthoscheme(7, {3, 6})));
}

TEST_CASE("Lambert quadrilateral") {
  for (double a : {0.01, 0.3, 0.7, 0.95}) {
    const auto d = lambert_domain(a);
    const auto ang = lambert_angles(d);
    CHECK(ang[0] == doctest::Approx(0.0).epsilon(1e-7));
    CHECK(ang[1] == doctest::Approx(kPi / 2));
    CHECK(ang[2] == doctest::Approx(kPi / 2));
    CHECK(ang[3] == doctest::Approx(kPi / 2));
    CHECK(lambert_area_from_angles(d) == doctest::Approx(area2(d)).epsilon(1e-7));
    CHECK(classify(d.a0) == PointClass::Ideal);
    CHECK(classify(d.a2) == PointClass::Outer);
    // P0 and P1 lie on the polar of A2.
    CHECK(std::abs(bilinear(d.truncating_line(), d.p0)) < 1e-14);
    CHECK(std::abs(bilinear(d.truncating_line(), d.p1)) < 1e-14);
  }
  CHECK_THROWS_AS(lambert_domain(1.0), std::invalid_argument);
}
