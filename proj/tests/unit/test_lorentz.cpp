#include <doctest.h>

#include <array>
#include <cmath>
#include <stdexcept>
#include <numbers>
#include <random>

#include "orthocover/lorentz.hpp"

using namespace orthocover;

namespace {

LorentzVec random_proper(std::mt19937_64& g) {
  std::uniform_real_distribution<double> u(-0.55, 0.55);
  return LorentzVec{1.0, u(g), u(g), u(g)};
}

}  // namespace

TEST_CASE("bilinear form has signature (1,n)") {
  const LorentzVec e0{1.0, 0.0, 0.0, 0.0};
  const LorentzVec e3{0.0, 0.0, 0.0, 1.0};
  CHECK(bilinear(e0, e0) == -1.0);
  CHECK(bilinear(e3, e3) == 1.0);
  CHECK(bilinear(e0, e3) == 0.0);
  CHECK_THROWS_AS(bilinear(LorentzVec{1.0, 0.0, 0.0}, e0), std::invalid_argument);
}

TEST_CASE("classification of points") {
  CHECK(classify(LorentzVec{1.0, 0.1, 0.2, 0.3}) == PointClass::Proper);
  CHECK(classify(LorentzVec{1.0, 0.0, 0.0, 1.0}) == PointClass::Ideal);
  CHECK(classify(LorentzVec{1.0, 0.0, 0.9, 0.9}) == PointClass::Outer);
  CHECK(classify(LorentzVec{0.0, 0.0, 0.0, 1.0}) == PointClass::Outer);
  CHECK(classify(LorentzVec{2.0, 0.0, 2.0}) == PointClass::Ideal);
}

TEST_CASE("distance from the centre along an axis is artanh of the radius") {
  const LorentzVec o{1.0, 0.0, 0.0, 0.0};
  for (double r : {0.0, 0.1, 0.5, 0.9, 0.999}) {
    CHECK(distance(o, LorentzVec{1.0, 0.0, r, 0.0}) == doctest::Approx(std::atanh(r)).epsilon(1e-12));
  }
  CHECK_THROWS_AS(distance(o, LorentzVec{1.0, 0.0, 0.0, 1.0}), std::domain_error);
}

TEST_CASE("distance is a metric on random proper points") {
  std::mt19937_64 g(7);
  for (int i = 0; i < 500; ++i) {
    const auto x = random_proper(g), y = random_proper(g), z = random_proper(g);
    CHECK(distance(x, y) == doctest::Approx(distance(y, x)));
    CHECK(distance(x, z) <= distance(x, y) + distance(y, z) + 1e-12);
    CHECK(distance(x, x * 3.0) == doctest::Approx(0.0).epsilon(1e-7));
  }
}

TEST_CASE("polar of a point is its covector") {
  const LorentzVec a3{0.0, 0.0, 0.0, 1.0};
  const LorentzVec u = polar(a3);
  CHECK(u.role() == VecRole::Covector);
  // The polar of the point at infinity of the z axis is the plane z = 0.
  CHECK(bilinear(u, LorentzVec{1.0, 0.3, -0.2, 0.0}) == 0.0);
}

TEST_CASE("point-plane distance matches distance to the foot point") {
  const LorentzVec plane = polar(LorentzVec{0.0, 0.0, 0.0, 1.0});
  for (double z : {0.0, 0.2, 0.6}) {
    const LorentzVec x{1.0, 0.0, 0.0, z};
    CHECK(point_plane_distance(x, plane) == doctest::Approx(distance(x, LorentzVec{1.0, 0.0, 0.0, 0.0})).epsilon(1e-12));
  }
  // Off axis: sinh d = z / sqrt(1 - r^2).
  const LorentzVec x{1.0, 0.3, 0.4, 0.5};
  CHECK(std::sinh(point_plane_distance(x, plane)) == doctest::Approx(0.5 / std::sqrt(0.5)).epsilon(1e-12));
}

TEST_CASE("hyperplane through points contains them") {
  std::mt19937_64 g(11);
  for (int i = 0; i < 100; ++i) {
    const std::array<LorentzVec, 3> pts{random_proper(g), random_proper(g), random_proper(g)};
    const LorentzVec u = hyperplane_through(pts);
    for (const auto& p : pts) CHECK(std::abs(bilinear(u, p)) < 1e-12);
  }
  const std::array<LorentzVec, 2> line{LorentzVec{1.0, 0.0, 0.0}, LorentzVec{1.0, 0.5, 0.0}};
  const LorentzVec l = hyperplane_through(line);
  CHECK(std::abs(bilinear(l, LorentzVec{1.0, -0.7, 0.0})) < 1e-15);
}

TEST_CASE("dihedral angle of orthogonal and parallel planes") {
  const LorentzVec centre{1.0, 0.1, 0.1, 0.1};
  const LorentzVec px = orient_outward(LorentzVec({0.0, 1.0, 0.0, 0.0}, VecRole::Covector), centre);
  const LorentzVec py = orient_outward(LorentzVec({0.0, 0.0, 1.0, 0.0}, VecRole::Covector), centre);
  CHECK(bilinear(px, centre) < 0.0);
  CHECK(dihedral_angle(px, py) == doctest::Approx(std::numbers::pi / 2));
  // Two lines of the plane meeting at an ideal point: angle 0.
  const std::array<LorentzVec, 2> l1{LorentzVec{1.0, 0.0, 1.0}, LorentzVec{1.0, 0.0, 0.0}};
  const std::array<LorentzVec, 2> l2{LorentzVec{1.0, 0.0, 1.0}, LorentzVec{1.0, 0.5, 0.0}};
  const LorentzVec inside{1.0, 0.1, 0.2};
  CHECK(dihedral_angle(orient_outward(hyperplane_through(l1), inside), orient_outward(hyperplane_through(l2), inside)) ==
        doctest::Approx(0.0).epsilon(1e-7));
}

TEST_CASE("normalization and chart") {
  const LorentzVec v{2.0, 1.0, 0.5, 0.0};
  const auto c = v.normalized().chart();
  CHECK(c[0] == 0.5);
  CHECK(c[1] == 0.25);
  CHECK_THROWS_AS(LorentzVec({0.0, 1.0, 0.0}).normalized(), std::domain_error);
}
