#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <random>

#include "orthocover/covering3d.hpp"

using namespace orthocover;

namespace {
const TruncatedOrthoscheme& o736() {
  static const auto o = make_orthoscheme(7, {3, 6});
  return o;
}
}  // namespace

TEST_CASE("case tags") {
  for (CoveringCase c : kAllCases) {
    CHECK(parse_case(to_string(c)) == c);
    const bool expected = c == CoveringCase::OnA0A1 || c == CoveringCase::OnA1A2 || c == CoveringCase::OnA2P2;
    CHECK(is_realizable(c) == expected);
  }
  CHECK_THROWS_AS(parse_case("a3p3"), std::invalid_argument);
  CHECK_THROWS_AS(case_point(o736(), CoveringCase::OnA0A2, 0.5), std::invalid_argument);
}

TEST_CASE("case parametrizations hit the edge endpoints") {
  const auto& o = o736();
  auto same = [](const LorentzVec& a, const LorentzVec& b) {
    for (std::size_t i = 0; i < 4; ++i) CHECK(a[i] == doctest::Approx(b[i]).epsilon(1e-14));
  };
  same(case_point(o, CoveringCase::OnA0A1, 0.0), o.a0);
  same(case_point(o, CoveringCase::OnA1A2, 1.0), o.a2);
  same(case_point(o, CoveringCase::OnA2P2, 0.0), o.p2);
  same(case_point(o, CoveringCase::OnA1A2, 0.0), o.a1);
  // U(u) = (1, u x, y, u z2 + (1 - u) z1).
  const auto u = case_point(o, CoveringCase::OnA1A2, 0.25);
  CHECK(u[1] == doctest::Approx(0.25 * o.x));
  CHECK(u[2] == doctest::Approx(o.y));
  CHECK(u[3] == doctest::Approx(0.25 * o.z2 + 0.75 * o.z1));
  for (Edge e : kAllEdges) {
    const auto ends = endpoints(e);
    same(edge_point(o, e, 0.0), o.vertex(ends[0]));
    same(edge_point(o, e, 1.0), o.vertex(ends[1]));
  }
}

TEST_CASE("both balls pass through the case point") {
  std::mt19937_64 g(23);
  std::uniform_real_distribution<double> u(0.05, 0.95);
  for (Family f : kFamilies) {
    const auto o = make_orthoscheme(existence_bound(f), f);
    for (CoveringCase c : kRealizableCases) {
      for (int i = 0; i < 20; ++i) {
        const auto pt = case_point(o, c, u(g));
        const auto pair = balls_from_point(o, pt);
        CHECK(std::abs(horosphere_lhs(pair.horoball, pt) - 1.0) < 1e-10);
        CHECK(std::abs(point_plane_distance(pt, o.base_plane()) - pair.hyperball.h) < 1e-10);
      }
    }
  }
  CHECK(balls_from_point(o736(), o736().p2).hyperball.h == doctest::Approx(0.0).epsilon(1e-15));
  CHECK_THROWS_AS(balls_from_point(o736(), o736().a0), std::domain_error);
}

TEST_CASE("optimal configuration at {7,3,6}") {
  const auto ev = density(o736(), CoveringCase::OnA1A2, 0.3324288);
  CHECK(ev.valid());
  CHECK(ev.coverage.structural_ok());
  CHECK(ev.density == doctest::Approx(1.27297329).epsilon(1e-6));
  CHECK(std::abs(ev.density * ev.cell_volume - ev.pieces.horoball - ev.pieces.hyperball) <= 1e-10);
  CHECK(ev.cell_volume == doctest::Approx(0.3178116447).epsilon(1e-9));
}

TEST_CASE("reference single evaluations") {
  const auto e1 = density(make_orthoscheme(4, {6, 3}), CoveringCase::OnA0A1, 0.7369142);
  CHECK(std::abs(e1.density - 1.3482413) < 1e-5);
  CHECK(e1.valid());
  const auto e2 = density(make_orthoscheme(5, {4, 4}), CoveringCase::OnA2P2, 0.8114832);
  CHECK(std::abs(e2.density - 1.8383911) < 1e-5);
  CHECK(e2.valid());
}

TEST_CASE("covering evaluations have density above one") {
  for (Family f : kFamilies) {
    const auto o = make_orthoscheme(existence_bound(f) + 1, f);
    for (CoveringCase c : kRealizableCases) {
      for (int i = 1; i < 20; ++i) {
        try {
          const auto ev = density(o, c, i / 20.0, 65);
          if (ev.valid()) CHECK(ev.density > 1.0);
          CHECK(std::abs(ev.density * ev.cell_volume - ev.pieces.horoball - ev.pieces.hyperball) <= 1e-10);
        } catch (const std::domain_error&) {
          // piece construction can fail far from the valid region
        }
      }
    }
  }
}

TEST_CASE("tiny balls do not cover") {
  BallPair pair;
  pair.horoball = Horoball{3, 0.9999};
  pair.hyperball.h = 0.0;
  const auto rep = verify_coverage(o736(), pair, 33);
  CHECK_FALSE(rep.overall);
  bool any_witness = false;
  for (const auto& e : rep.edges) any_witness = any_witness || (!e.covered && e.witness.has_value());
  CHECK(any_witness);
}

TEST_CASE("coverage sampling agrees with the exact intervals") {
  for (double u : {0.1, 0.3324288, 0.6, 0.9}) {
    const auto pt = case_point(o736(), CoveringCase::OnA1A2, u);
    const auto rep = verify_coverage(o736(), balls_from_point(o736(), pt));
    CHECK(rep.structural.front().passed);
    bool all = true;
    for (const auto& e : rep.edges) all = all && e.covered;
    CHECK(rep.overall == all);
  }
}

TEST_CASE("non-realizable cases are refuted at {7,3,6}") {
  const auto grid = midpoint_grid(21);
  for (CoveringCase c : {CoveringCase::OnA0P0, CoveringCase::OnA0A2, CoveringCase::OnA1P1}) {
    const auto rep = refute_case(o736(), c, grid);
    CHECK(rep.items.size() == 21);
    CHECK(rep.all_refuted());
    for (const auto& it : rep.items) {
      if (c == CoveringCase::OnA0P0) CHECK(it.tangency);
      else CHECK(it.edge.has_value());
    }
  }
  CHECK_THROWS_AS(refute_case(o736(), CoveringCase::OnA1A2, grid), std::invalid_argument);
}

TEST_CASE("optimization matches the reference tables") {
  const auto a = optimize_case({3, 6}, 8, CoveringCase::OnA1A2);
  CHECK(std::abs(a.param - 0.3337034) < 1e-4);
  CHECK(std::abs(a.density - 1.288832) < 1e-5);
  const auto b = optimize_case({6, 3}, 4, CoveringCase::OnA0A1);
  CHECK(std::abs(b.param - 0.7369142) < 1e-4);
  CHECK(std::abs(b.density - 1.3482413) < 1e-5);
  const auto c = optimize_case({4, 4}, 6, CoveringCase::OnA2P2);
  CHECK(std::abs(c.param - 0.7332720) < 1e-4);
  CHECK(std::abs(c.density - 2.3821677) < 1e-5);
}

TEST_CASE("optimum is locally minimal among covering configurations") {
  const auto o = make_orthoscheme(7, {3, 6});
  const auto opt = optimize_case(o, CoveringCase::OnA1A2);
  for (int k = -10; k <= 10; ++k) {
    const double u = opt.param + 0.01 * k;
    if (u < 0.0 || u > 1.0) continue;
    const auto ev = density(o, CoveringCase::OnA1A2, u);
    if (ev.valid()) CHECK(ev.density >= opt.density - 1e-12);
  }
}
