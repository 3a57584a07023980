#include "orthocover/covering3d.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace orthocover {

namespace {

LorentzVec lerp(const LorentzVec& a, const LorentzVec& b, double t) { return a * (1.0 - t) + b * t; }

double chebyshev_lobatto(std::size_t k, std::size_t n) {
  return 0.5 * (1.0 - std::cos(std::numbers::pi * static_cast<double>(k) / static_cast<double>(n - 1)));
}

double height(const LorentzVec& x) { return x.normalized()[3]; }

bool interval_union_covers(const std::optional<Interval>& a, const std::optional<Interval>& b) {
  constexpr double slack = 1e-9;
  std::vector<Interval> v;
  if (a) v.push_back(*a);
  if (b) v.push_back(*b);
  std::sort(v.begin(), v.end(), [](const Interval& l, const Interval& r) { return l.lo < r.lo; });
  double reach = 0.0;
  for (const auto& iv : v) {
    if (iv.lo > reach + slack) return false;
    reach = std::max(reach, iv.hi);
  }
  return reach >= 1.0 - slack;
}

// Chart gradient of a scalar field by central differences.
template <class F>
std::array<double, 3> chart_gradient(F&& f, const std::array<double, 3>& p) {
  constexpr double step = 1e-6;
  std::array<double, 3> g{};
  for (std::size_t i = 0; i < 3; ++i) {
    auto hi = p;
    auto lo = p;
    hi[i] += step;
    lo[i] -= step;
    g[i] = (f(LorentzVec::from_chart(hi)) - f(LorentzVec::from_chart(lo))) / (2.0 * step);
  }
  return g;
}

double hyper_boundary_fn(const Hyperball& b, const LorentzVec& x) {
  return point_plane_distance(x.normalized(), b.base) - b.h;
}

}  // namespace

bool is_realizable(CoveringCase c) {
  return c == CoveringCase::OnA0A1 || c == CoveringCase::OnA1A2 || c == CoveringCase::OnA2P2;
}

std::string to_string(CoveringCase c) {
  switch (c) {
    case CoveringCase::OnA0P0: return "a0p0";
    case CoveringCase::OnA0A2: return "a0a2";
    case CoveringCase::OnA1P1: return "a1p1";
    case CoveringCase::OnA0A1: return "a0a1";
    case CoveringCase::OnA1A2: return "a1a2";
    case CoveringCase::OnA2P2: return "a2p2";
  }
  return "?";
}

CoveringCase parse_case(const std::string& text) {
  for (CoveringCase c : kAllCases) {
    if (to_string(c) == text) return c;
  }
  throw std::invalid_argument("unknown covering case '" + text + "' (expected a0p0, a0a2, a1p1, a0a1, a1a2, a2p2)");
}

std::string to_string(Edge e) {
  const auto ends = endpoints(e);
  return to_string(ends[0]) + to_string(ends[1]);
}

std::array<Vertex, 2> endpoints(Edge e) {
  switch (e) {
    case Edge::A0A1: return {Vertex::A0, Vertex::A1};
    case Edge::A0A2: return {Vertex::A0, Vertex::A2};
    case Edge::A1A2: return {Vertex::A1, Vertex::A2};
    case Edge::A0P0: return {Vertex::A0, Vertex::P0};
    case Edge::A1P1: return {Vertex::A1, Vertex::P1};
    case Edge::A2P2: return {Vertex::A2, Vertex::P2};
    case Edge::P0P1: return {Vertex::P0, Vertex::P1};
    case Edge::P1P2: return {Vertex::P1, Vertex::P2};
    case Edge::P2P0: return {Vertex::P2, Vertex::P0};
  }
  throw std::invalid_argument("bad edge");
}

LorentzVec edge_point(const TruncatedOrthoscheme& orth, Edge e, double t) {
  const auto ends = endpoints(e);
  return lerp(orth.vertex(ends[0]), orth.vertex(ends[1]), t);
}

LorentzVec any_case_point(const TruncatedOrthoscheme& orth, CoveringCase c, double param) {
  if (!(param >= 0.0 && param <= 1.0)) throw std::invalid_argument("case parameter must lie in [0,1]");
  switch (c) {
    case CoveringCase::OnA0P0: return lerp(orth.a0, orth.p0, param);
    case CoveringCase::OnA0A2: return lerp(orth.a0, orth.a2, param);
    case CoveringCase::OnA1P1: return lerp(orth.p1, orth.a1, param);
    case CoveringCase::OnA0A1: return lerp(orth.a0, orth.a1, param);
    case CoveringCase::OnA1A2: return lerp(orth.a1, orth.a2, param);
    case CoveringCase::OnA2P2: return lerp(orth.p2, orth.a2, param);
  }
  throw std::invalid_argument("bad covering case");
}

LorentzVec case_point(const TruncatedOrthoscheme& orth, CoveringCase c, double param) {
  if (!is_realizable(c)) throw std::invalid_argument("case " + to_string(c) + " is not realizable");
  return any_case_point(orth, c, param);
}

BallPair balls_from_point(const TruncatedOrthoscheme& orth, const LorentzVec& point) {
  const LorentzVec x = point.normalized();
  if (classify(x) != PointClass::Proper) throw std::domain_error("balls_from_point: point must be proper (not A0)");
  if (x[3] < -1e-15) throw std::domain_error("balls_from_point: point below the truncating plane");
  return {horoball_through(x), hyperball_through(orth.base_plane(), x)};
}

bool covered_by(const BallPair& pair, const LorentzVec& x) {
  if (contains(pair.horoball, x)) return true;
  if (classify(x) != PointClass::Proper) return false;
  return height(x) >= 0.0 && contains(pair.hyperball, x);
}

bool CoverageReport::structural_ok() const {
  return std::all_of(structural.begin(), structural.end(), [](const StructuralCheck& c) { return c.passed; });
}

CoverageReport verify_coverage(const TruncatedOrthoscheme& orth, const BallPair& pair,
                               std::size_t samples_per_edge) {
  if (samples_per_edge < 2) throw std::invalid_argument("verify_coverage: need at least 2 samples per edge");
  CoverageReport rep;
  rep.overall = true;
  bool agree = true;
  for (std::size_t i = 0; i < kAllEdges.size(); ++i) {
    const Edge e = kAllEdges[i];
    EdgeStatus& st = rep.edges[i];
    st.edge = e;
    st.covered = true;
    for (std::size_t k = 0; k < samples_per_edge; ++k) {
      const LorentzVec x = edge_point(orth, e, chebyshev_lobatto(k, samples_per_edge));
      if (!covered_by(pair, x)) {
        st.covered = false;
        st.witness = x;
        break;
      }
    }
    const auto ends = endpoints(e);
    const LorentzVec& a = orth.vertex(ends[0]);
    const LorentzVec& b = orth.vertex(ends[1]);
    st.horo_interval = covered_interval(pair.horoball, a, b);
    st.hyper_interval = covered_interval(pair.hyperball, a, b);
    agree = agree && (interval_union_covers(st.horo_interval, st.hyper_interval) == st.covered);
    rep.overall = rep.overall && st.covered;
  }

  rep.structural.push_back({"sampling agrees with exact intervals", agree});
  rep.structural.push_back({"d(A1,P1) >= d(A2,P2)", distance(orth.a1, orth.p1) >= distance(orth.a2, orth.p2) - 1e-12});
  // On A0P0 the hypersphere's top must reach the horosphere's lowest point.
  rep.structural.push_back(
      {"hypersphere above horosphere on A0P0", std::tanh(pair.hyperball.h) >= pair.horoball.s - 1e-12});
  return rep;
}

PieceVolumes piece_volumes(const TruncatedOrthoscheme& orth, const BallPair& pair) {
  const LorentzVec s1 = horosphere_ray_point(pair.horoball, orth.p0);
  const LorentzVec t1 = horosphere_ray_point(pair.horoball, orth.a2);
  const LorentzVec q1 = horosphere_ray_point(pair.horoball, orth.a1);
  return {horoball_piece_volume_3d(pair.horoball, s1, t1, q1),
          hyperball_piece_volume_3d(pair.hyperball.h, base_triangle_area(orth))};
}

CoveringEvaluation density(const TruncatedOrthoscheme& orth, CoveringCase c, double param,
                           std::size_t samples_per_edge) {
  CoveringEvaluation ev;
  ev.orth = &orth;
  ev.covering_case = c;
  ev.param = param;
  ev.point = case_point(orth, c, param);
  ev.pair = balls_from_point(orth, ev.point);
  ev.pieces = piece_volumes(orth, ev.pair);
  ev.cell_volume = orth.volume;
  ev.density = (ev.pieces.horoball + ev.pieces.hyperball) / ev.cell_volume;
  ev.coverage = verify_coverage(orth, ev.pair, samples_per_edge);
  return ev;
}

CaseOptimum optimize_case(const TruncatedOrthoscheme& orth, CoveringCase c, const MinimizeOptions& options) {
  if (!is_realizable(c)) throw std::invalid_argument("case " + to_string(c) + " is not realizable");
  Objective1D obj;
  obj.lo = 0.0;
  obj.hi = 1.0;
  obj.f = [&](double param) -> std::optional<double> {
    try {
      const CoveringEvaluation ev = density(orth, c, param);
      if (!ev.valid()) return std::nullopt;
      return ev.density;
    } catch (const std::domain_error&) {
      return std::nullopt;
    }
  };
  const Minimum1D m = minimize_1d(obj, options);
  return {m.x, m.value};
}

CaseOptimum optimize_case(Family family, double p, CoveringCase c, TilingMode mode, const MinimizeOptions& options) {
  const TruncatedOrthoscheme orth = make_orthoscheme(p, family, mode);
  return optimize_case(orth, c, options);
}

RealPOptimum optimize_real_p(CoveringCase c, double p_lo, double p_hi) {
  if (!(p_lo > 6.0 && p_hi < 7.0 && p_lo < p_hi)) throw std::invalid_argument("real p range must lie inside (6,7)");
  Objective1D outer;
  outer.lo = p_lo;
  outer.hi = p_hi;
  outer.f = [&](double p) -> std::optional<double> {
    try {
      return optimize_case(Family{3, 6}, p, c, TilingMode::RealP).density;
    } catch (const std::exception&) {
      return std::nullopt;
    }
  };
  MinimizeOptions opts;
  opts.grid_points = 41;
  opts.tol = 1e-8;
  const Minimum1D m = minimize_1d(outer, opts);
  const CaseOptimum inner = optimize_case(Family{3, 6}, m.x, c, TilingMode::RealP);

  RealPOptimum out;
  out.p = m.x;
  out.param = inner.param;
  out.density = inner.density;
  out.density_at_7 = optimize_case(Family{3, 6}, 7.0, c).density;
  out.locally_optimal_only = true;
  out.note = "non-integral p: the cell does not generate a tiling, so the covering cannot be extended to the whole space";
  return out;
}

bool RefutationReport::all_refuted() const {
  return !items.empty() &&
         std::all_of(items.begin(), items.end(), [](const Refutation& r) { return r.refuted; });
}

std::vector<double> midpoint_grid(std::size_t n) {
  std::vector<double> g(n);
  for (std::size_t i = 0; i < n; ++i) g[i] = (static_cast<double>(i) + 0.5) / static_cast<double>(n);
  return g;
}

RefutationReport refute_case(const TruncatedOrthoscheme& orth, CoveringCase c, const std::vector<double>& params) {
  if (is_realizable(c)) throw std::invalid_argument("case " + to_string(c) + " is realizable; nothing to refute");
  RefutationReport rep;
  rep.covering_case = c;
  std::vector<Edge> named;
  if (c == CoveringCase::OnA0A2) named = {Edge::A1A2, Edge::A0A1};
  if (c == CoveringCase::OnA1P1) named = {Edge::A2P2, Edge::A1A2};

  for (double param : params) {
    Refutation r;
    r.param = param;
    const LorentzVec point = any_case_point(orth, c, param);
    const BallPair pair = balls_from_point(orth, point);

    if (c == CoveringCase::OnA0P0) {
      const auto pc = point.normalized().chart();
      const auto gh = chart_gradient([&](const LorentzVec& x) { return horosphere_lhs(pair.horoball, x); }, pc);
      const auto gy = chart_gradient([&](const LorentzVec& x) { return hyper_boundary_fn(pair.hyperball, x); }, pc);
      const std::array<double, 3> cr{gh[1] * gy[2] - gh[2] * gy[1], gh[2] * gy[0] - gh[0] * gy[2],
                                     gh[0] * gy[1] - gh[1] * gy[0]};
      const double nh = std::hypot(gh[0], gh[1], gh[2]);
      const double ny = std::hypot(gy[0], gy[1], gy[2]);
      const double dot = gh[0] * gy[0] + gh[1] * gy[1] + gh[2] * gy[2];
      // Opposite outward normals: the balls touch from outside.
      r.tangency = std::hypot(cr[0], cr[1], cr[2]) <= 1e-6 * nh * ny && dot < 0.0;
      // Step horizontally into the cell, between the faces through A0P0.
      constexpr double step = 1e-4;
      const std::array<double, 3> probe{pc[0] + step * 0.5 * orth.x, pc[1] + step * orth.y, pc[2]};
      const LorentzVec q = LorentzVec::from_chart(probe);
      if (r.tangency && !covered_by(pair, q)) {
        r.refuted = true;
        r.witness = q;
      }
      rep.items.push_back(r);
      continue;
    }

    for (Edge e : named) {
      const auto ends = endpoints(e);
      const LorentzVec& a = orth.vertex(ends[0]);
      const LorentzVec& b = orth.vertex(ends[1]);
      const auto horo = covered_interval(pair.horoball, a, b);
      const auto hyper = covered_interval(pair.hyperball, a, b);
      if (interval_union_covers(horo, hyper)) continue;
      // Gap: first uncovered parameter after the lower-parameter interval.
      std::vector<Interval> iv;
      if (horo) iv.push_back(*horo);
      if (hyper) iv.push_back(*hyper);
      std::sort(iv.begin(), iv.end(), [](const Interval& l, const Interval& m) { return l.lo < m.lo; });
      double gap_lo = 0.0;
      double gap_hi = 1.0;
      double reach = 0.0;
      for (const auto& v : iv) {
        if (v.lo > reach + 1e-9) {
          gap_lo = reach;
          gap_hi = v.lo;
          break;
        }
        reach = std::max(reach, v.hi);
        gap_lo = reach;
        gap_hi = 1.0;
      }
      const LorentzVec w = edge_point(orth, e, 0.5 * (gap_lo + gap_hi));
      if (covered_by(pair, w)) continue;
      r.refuted = true;
      r.edge = e;
      r.witness = w;
      // Horosphere entry versus hypersphere exit, compared by height.
      const double horo_low = horo ? std::min(height(edge_point(orth, e, horo->lo)), height(edge_point(orth, e, horo->hi)))
                                   : std::numeric_limits<double>::infinity();
      const double hyper_high = hyper ? std::max(height(edge_point(orth, e, hyper->lo)),
                                                 height(edge_point(orth, e, hyper->hi)))
                                      : -std::numeric_limits<double>::infinity();
      r.ordering_gap = horo_low > hyper_high;
      break;
    }
    rep.items.push_back(r);
  }
  return rep;
}

}  // namespace orthocover
