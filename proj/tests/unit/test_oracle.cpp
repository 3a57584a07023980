#include <doctest.h>

#include <array>
#include <cmath>
#include <stdexcept>
#include <cstring>
#include <numbers>
#include <vector>

#include "orthocover/oracle.hpp"

using namespace orthocover;

namespace {
const TruncatedOrthoscheme& o736() {
  static const auto o = make_orthoscheme(7, {3, 6});
  return o;
}

std::vector<double> chart(const LorentzVec& v) {
  const auto c = v.normalized().chart();
  return {c.begin(), c.begin() + static_cast<long>(v.dim())};
}
}  // namespace

TEST_CASE("empty region has zero volume") {
  Box box{{-0.1, -0.1, -0.1}, {0.1, 0.1, 0.1}};
  const auto e = mc_volume([](std::span<const double>) { return false; }, box, 3, 10000, 1);
  CHECK(e.value == 0.0);
  CHECK(e.std_error == 0.0);
  CHECK(e.samples == 10000);
}

TEST_CASE("small Euclidean box around the centre has nearly Euclidean volume") {
  Box box{{-0.01, -0.01}, {0.01, 0.01}};
  const auto e = mc_volume([](std::span<const double>) { return true; }, box, 2, 20000, 2);
  CHECK(e.value == doctest::Approx(4e-4).epsilon(1e-3));
}

TEST_CASE("hyperbolic disc area from the Klein weight") {
  // Disc of chart radius r has hyperbolic radius artanh r and area 4 pi sinh^2(R/2).
  const double r = 0.6;
  const double big_r = std::atanh(r);
  Box box{{-r, -r}, {r, r}};
  const auto e = mc_volume([&](std::span<const double> x) { return x[0] * x[0] + x[1] * x[1] <= r * r; }, box, 2,
                           400000, 3);
  const double exact = 4.0 * std::numbers::pi * std::sinh(big_r / 2) * std::sinh(big_r / 2);
  CHECK(std::abs(e.value - exact) <= 4.0 * e.std_error);
}

TEST_CASE("same seed gives identical bits, different seeds differ") {
  const auto a = mc_cell_volume(o736(), 20000, 42);
  const auto b = mc_cell_volume(o736(), 20000, 42);
  const auto c = mc_cell_volume(o736(), 20000, 43);
  CHECK(std::memcmp(&a.value, &b.value, sizeof(double)) == 0);
  CHECK(std::memcmp(&a.std_error, &b.std_error, sizeof(double)) == 0);
  CHECK(a.value != c.value);
  CHECK(a.seed == 42);
}

TEST_CASE("standard error scales like 1/sqrt(N)") {
  const auto small = mc_base_triangle_area(o736(), 40000, 5);
  const auto large = mc_base_triangle_area(o736(), 640000, 5);
  const double ratio = small.std_error / large.std_error;
  CHECK(ratio > 3.0);
  CHECK(ratio < 5.3);
}

TEST_CASE("membership oracles") {
  const auto& o = o736();
  const auto cell = orthoscheme_membership(o);
  const auto centroid = (o.a1 + o.a2 + o.p0 + o.p1 + o.p2) * 0.2;
  CHECK(cell(chart(centroid)));
  CHECK_FALSE(cell(std::vector<double>{o.x * 0.3, o.y * 0.5, -0.01}));
  CHECK_FALSE(cell(std::vector<double>{-0.01, o.y * 0.5, 0.1}));
  const auto tri = base_triangle_membership(o);
  CHECK(tri(std::vector<double>{o.x / 3, 2 * o.y / 3}));
  CHECK_FALSE(tri(std::vector<double>{o.x, 0.0}));
  const auto d = lambert_domain(0.5);
  const auto quad = lambert_membership(d);
  CHECK(quad(std::vector<double>{0.25, 0.3}));
  CHECK_FALSE(quad(std::vector<double>{0.6, 0.3}));
  CHECK_FALSE(quad(std::vector<double>{0.25, -0.01}));
}

TEST_CASE("piece memberships stay inside the balls") {
  const auto& o = o736();
  const auto pair = balls_from_point(o, case_point(o, CoveringCase::OnA1A2, 0.3324288));
  const auto hm = horoball_piece_membership(o, pair);
  const auto ym = hyperball_piece_membership(o, pair);
  // Just below A0 on the axis of the cone: inside the horoball piece only if in the cone.
  CHECK(hm(std::vector<double>{o.x * 0.01, o.y * 0.5, 0.999}) == contains(pair.horoball, LorentzVec{1.0, o.x * 0.01, o.y * 0.5, 0.999}));
  CHECK_FALSE(hm(std::vector<double>{0.0, 0.0, 0.0}));
  CHECK(ym(std::vector<double>{o.x / 3, 2 * o.y / 3, 1e-3}));
  CHECK_FALSE(ym(std::vector<double>{o.x / 3, 2 * o.y / 3, -1e-3}));
}

TEST_CASE("an unclipped box reaching the sphere is rejected") {
  Box box{{-1.0, -1.0}, {1.0, 1.0}, 1.0};
  CHECK_THROWS_AS(mc_volume([](std::span<const double>) { return true; }, box, 2, 100, 1), std::domain_error);
}

TEST_CASE("cone sampler reproduces the cell volume") {
  const auto e = mc_cell_volume(o736(), 400000, 9);
  CHECK(std::abs(e.value - o736().volume) <= 4.0 * e.std_error);
  const auto l = mc_lambert_area(lambert_domain(0.3), 400000, 9);
  CHECK(std::abs(l.value - std::numbers::pi / 2) <= 4.0 * l.std_error);
}

TEST_CASE("oracle suite at small sample count") {
  const auto ev = density(o736(), CoveringCase::OnA1A2, 0.3324288);
  const auto suite = oracle_suite(ev, 200000, kDefaultSeed);
  REQUIRE(suite.size() == 5);
  for (const auto& c : suite) {
    INFO(c.name);
    CHECK(c.within(4.0));
    CHECK(c.estimate.std_error > 0.0);
  }
}
