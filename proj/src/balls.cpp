#include "orthocover/balls.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

namespace orthocover {

namespace {

constexpr double kOnSurfaceEps = 1e-10;
constexpr double kCoeffEps = 1e-14;

struct Quadratic {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
};

LorentzVec lerp(const LorentzVec& a, const LorentzVec& b, double t) { return a * (1.0 - t) + b * t; }

// g restricted to the segment is a quadratic in t; recover it from three
// evaluations (exact up to round-off).
Quadratic fit_quadratic(const std::function<double(const LorentzVec&)>& g, const LorentzVec& a,
                        const LorentzVec& b) {
  const double g0 = g(a);
  const double gh = g(lerp(a, b, 0.5));
  const double g1 = g(b);
  return {2.0 * g1 - 4.0 * gh + 2.0 * g0, 4.0 * gh - g1 - 3.0 * g0, g0};
}

// Signed boundary functions, <= 0 inside.
double horo_g(const Horoball& b, const LorentzVec& x) { return horosphere_lhs(b, x) - 1.0; }

double hyper_g(const Hyperball& b, const LorentzVec& x) {
  const LorentzVec xn = x.normalized();
  const double xu = bilinear(xn, b.base);
  const double uu = bilinear(b.base, b.base);
  const double sh = std::sinh(b.h);
  return (xu * xu + sh * sh * uu * bilinear(xn, xn)) / uu;
}

SegmentHits roots_in_unit(const Quadratic& q) {
  SegmentHits hits;
  const double scale = std::max({std::abs(q.a), std::abs(q.b), std::abs(q.c)});
  if (scale <= kCoeffEps) {
    hits.whole_segment = true;
    return hits;
  }
  std::vector<double> r;
  if (std::abs(q.a) <= kCoeffEps * scale) {
    if (std::abs(q.b) > kCoeffEps * scale) r.push_back(-q.c / q.b);
  } else {
    const double disc = q.b * q.b - 4.0 * q.a * q.c;
    const double tang = 1e-13 * std::max(q.b * q.b, std::abs(4.0 * q.a * q.c));
    if (disc < -tang) return hits;
    if (disc <= tang) {
      const double t = -q.b / (2.0 * q.a);
      r = {t, t};
    } else {
      const double sq = std::sqrt(disc);
      const double qq = -0.5 * (q.b + std::copysign(sq, q.b));
      double t1 = qq / q.a;
      double t2 = (qq != 0.0) ? q.c / qq : -t1;
      if (t1 > t2) std::swap(t1, t2);
      r = {t1, t2};
    }
  }
  constexpr double slack = 1e-12;
  for (double t : r) {
    if (t >= -slack && t <= 1.0 + slack) hits.roots.push_back(std::clamp(t, 0.0, 1.0));
  }
  std::sort(hits.roots.begin(), hits.roots.end());
  return hits;
}

// The fit subtracts endpoint values that can be far larger than g near the
// root (the horosphere form scales like 1/w^2), so refine each simple root with
// Newton steps on g itself, using the fitted slope.
void polish_roots(SegmentHits& hits, const Quadratic& q, const std::function<double(const LorentzVec&)>& g,
                  const LorentzVec& a, const LorentzVec& b) {
  for (double& r : hits.roots) {
    double t = r;
    for (int it = 0; it < 3; ++it) {
      const double slope = 2.0 * q.a * t + q.b;
      if (std::abs(slope) <= 1e-8 * std::max({std::abs(q.a), std::abs(q.b), std::abs(q.c)})) break;
      const double step = g(lerp(a, b, t)) / slope;
      if (!std::isfinite(step)) break;
      t -= step;
    }
    if (std::abs(t - r) <= 1e-6) r = std::clamp(t, 0.0, 1.0);
  }
  std::sort(hits.roots.begin(), hits.roots.end());
}

std::optional<Interval> interval_from(const Quadratic& q) {
  const auto g = [&](double t) { return (q.a * t + q.b) * t + q.c; };
  const double scale = std::max({std::abs(q.a), std::abs(q.b), std::abs(q.c)});
  if (scale <= kCoeffEps) return Interval{0.0, 1.0};
  const double eps = kMembershipEps;

  // Candidate breakpoints: all real roots clipped to [0,1], plus the ends.
  std::vector<double> pts{0.0, 1.0};
  if (std::abs(q.a) > kCoeffEps * scale) {
    const double disc = q.b * q.b - 4.0 * q.a * q.c;
    if (disc >= 0.0) {
      const double sq = std::sqrt(disc);
      const double qq = -0.5 * (q.b + std::copysign(sq, q.b));
      const double t1 = qq / q.a;
      const double t2 = (qq != 0.0) ? q.c / qq : -t1;
      for (double t : {t1, t2}) {
        if (t > 0.0 && t < 1.0) pts.push_back(t);
      }
    } else {
      const double tv = -q.b / (2.0 * q.a);
      if (tv > 0.0 && tv < 1.0) pts.push_back(tv);
    }
  } else if (std::abs(q.b) > kCoeffEps * scale) {
    const double t = -q.c / q.b;
    if (t > 0.0 && t < 1.0) pts.push_back(t);
  }
  std::sort(pts.begin(), pts.end());

  // Convex in t (a >= 0), so the inside set is a single interval.
  std::optional<Interval> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const double t = pts[i];
    const bool in_pt = g(t) <= eps;
    const bool in_next = (i + 1 < pts.size()) && g(0.5 * (t + pts[i + 1])) <= eps;
    if (in_pt || in_next) {
      if (!out) out = Interval{t, t};
      out->hi = t;
      if (in_next) out->hi = pts[i + 1];
    }
  }
  return out;
}

}  // namespace

LorentzVec Horoball::center() const {
  return dim == 2 ? LorentzVec{1.0, 0.0, 1.0} : LorentzVec{1.0, 0.0, 0.0, 1.0};
}

LorentzVec Horoball::axis_point() const {
  return dim == 2 ? LorentzVec{1.0, 0.0, s} : LorentzVec{1.0, 0.0, 0.0, s};
}

double horosphere_roundoff(const Horoball& b, const LorentzVec& x) {
  const LorentzVec xn = x.normalized();
  const double w = 1.0 - b.s;
  double rho2 = 0.0;
  for (std::size_t i = 1; i < b.dim; ++i) rho2 += xn[i] * xn[i];
  const double dz = std::abs(xn[b.dim] - 0.5 * (b.s + 1.0));
  // |grad| of the left-hand side times unit round-off, plus the 1/w^2
  // sensitivity to the error already carried by w.
  const double grad = 4.0 * std::sqrt(rho2) / w + 8.0 * dz / (w * w) + 2.0 / w;
  return 32.0 * std::numeric_limits<double>::epsilon() * (1.0 + grad);
}

double horosphere_lhs(const Horoball& b, const LorentzVec& x) {
  if (x.dim() != b.dim) throw std::invalid_argument("horosphere_lhs: dimension mismatch");
  const LorentzVec xn = x.normalized();
  const double w = 1.0 - b.s;
  double rho2 = 0.0;
  for (std::size_t i = 1; i < b.dim; ++i) rho2 += xn[i] * xn[i];
  const double dz = xn[b.dim] - 0.5 * (b.s + 1.0);
  return 2.0 * rho2 / w + 4.0 * dz * dz / (w * w);
}

bool contains(const Horoball& b, const LorentzVec& x) {
  return horosphere_lhs(b, x) <= 1.0 + kMembershipEps + horosphere_roundoff(b, x);
}

bool contains(const Hyperball& b, const LorentzVec& x) {
  return point_plane_distance(x.normalized(), b.base) <= b.h + kMembershipEps;
}

Horoball horoball_through(const LorentzVec& point) {
  const LorentzVec xn = point.normalized();
  const std::size_t n = xn.dim();
  double rho2 = 0.0;
  for (std::size_t i = 1; i < n; ++i) rho2 += xn[i] * xn[i];
  const double dz = 1.0 - xn[n];
  if (rho2 + dz * dz <= 1e-28) throw std::domain_error("horoball_through: point coincides with the centre");
  if (classify(xn) == PointClass::Outer) throw std::domain_error("horoball_through: point outside the model");
  const double denom = 2.0 * dz - rho2;
  if (!(denom > 0.0)) throw std::domain_error("horoball_through: point outside the model");
  const double w = 2.0 * dz * dz / denom;
  return Horoball{n, 1.0 - w};
}

Hyperball hyperball_through(const LorentzVec& base, const LorentzVec& point) {
  return Hyperball{base.as_covector(), point_plane_distance(point.normalized(), base)};
}

SegmentHits ball_segment_intersection(const Horoball& b, const LorentzVec& a, const LorentzVec& bpt) {
  const auto g = [&](const LorentzVec& x) { return horo_g(b, x); };
  const LorentzVec an = a.normalized();
  const LorentzVec bn = bpt.normalized();
  const Quadratic q = fit_quadratic(g, an, bn);
  SegmentHits hits = roots_in_unit(q);
  polish_roots(hits, q, g, an, bn);
  return hits;
}

SegmentHits ball_segment_intersection(const Hyperball& b, const LorentzVec& a, const LorentzVec& bpt) {
  const auto g = [&](const LorentzVec& x) { return hyper_g(b, x); };
  const LorentzVec an = a.normalized();
  const LorentzVec bn = bpt.normalized();
  const Quadratic q = fit_quadratic(g, an, bn);
  SegmentHits hits = roots_in_unit(q);
  polish_roots(hits, q, g, an, bn);
  return hits;
}

std::optional<Interval> covered_interval(const Horoball& b, const LorentzVec& a, const LorentzVec& bpt) {
  const auto g = [&](const LorentzVec& x) { return horo_g(b, x); };
  return interval_from(fit_quadratic(g, a.normalized(), bpt.normalized()));
}

std::optional<Interval> covered_interval(const Hyperball& b, const LorentzVec& a, const LorentzVec& bpt) {
  const auto g = [&](const LorentzVec& x) { return hyper_g(b, x); };
  return interval_from(fit_quadratic(g, a.normalized(), bpt.normalized()));
}

LorentzVec horosphere_ray_point(const Horoball& b, const LorentzVec& through) {
  const LorentzVec c = b.center();
  const LorentzVec d = through.normalized() - c;
  const std::size_t n = b.dim;
  double r = 0.0;
  for (std::size_t i = 1; i < n; ++i) r += d[i] * d[i];
  const double dn = d[n];
  const double w = 1.0 - b.s;
  const double denom = 2.0 * r * w + 4.0 * dn * dn;
  if (denom == 0.0) throw std::domain_error("horosphere_ray_point: direction through the centre is degenerate");
  const double lambda = -4.0 * dn * w / denom;
  if (!(lambda > 0.0)) throw std::domain_error("horosphere_ray_point: ray does not enter the horoball");
  return c + d * lambda;
}

double intrinsic_chord_length(double d) {
  if (!(d >= 0.0)) throw std::domain_error("intrinsic_chord_length: negative distance");
  return 2.0 * std::sinh(0.5 * d);
}

double horoball_piece_volume_2d(const Horoball& b, const LorentzVec& p, const LorentzVec& q) {
  for (const auto* x : {&p, &q}) {
    if (std::abs(horosphere_lhs(b, *x) - 1.0) > std::max(kOnSurfaceEps, horosphere_roundoff(b, *x))) {
      throw std::domain_error("horoball_piece_volume_2d: point is not on the horocycle");
    }
  }
  return intrinsic_chord_length(distance(p, q));
}

double heron_area(double a, double b, double c) {
  std::array<double, 3> s{a, b, c};
  std::sort(s.begin(), s.end(), std::greater<>());
  const double x = s[0], y = s[1], z = s[2];
  if (z < 0.0) throw std::domain_error("heron_area: negative side");
  double k = z - (x - y);
  if (k < -1e-12 * std::max(1.0, x)) throw std::domain_error("heron_area: triangle inequality violated");
  k = std::max(k, 0.0);
  const double prod = (x + (y + z)) * k * (z + (x - y)) * (x + (y - z));
  return 0.25 * std::sqrt(std::max(prod, 0.0));
}

double horoball_piece_volume_3d(const Horoball& b, const LorentzVec& s, const LorentzVec& t, const LorentzVec& q) {
  for (const auto* x : {&s, &t, &q}) {
    if (std::abs(horosphere_lhs(b, *x) - 1.0) > std::max(kOnSurfaceEps, horosphere_roundoff(b, *x))) {
      throw std::domain_error("horoball_piece_volume_3d: point is not on the horosphere");
    }
  }
  const double st = intrinsic_chord_length(distance(s, t));
  const double tq = intrinsic_chord_length(distance(t, q));
  const double qs = intrinsic_chord_length(distance(q, s));
  return heron_area(st, tq, qs) / 2.0;
}

double hyperball_piece_volume_2d(double h, double base_length) {
  if (h < 0.0 || base_length < 0.0) throw std::invalid_argument("hyperball_piece_volume_2d: negative input");
  return base_length * std::sinh(h);
}

double hyperball_piece_volume_3d(double h, double base_area) {
  if (h < 0.0 || base_area < 0.0) throw std::invalid_argument("hyperball_piece_volume_3d: negative input");
  return 0.25 * base_area * (std::sinh(2.0 * h) + 2.0 * h);
}

}  // namespace orthocover
