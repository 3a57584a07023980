#include "orthocover/covering2d.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace orthocover {

namespace {

constexpr double kPi = std::numbers::pi;

void check_a(double a) {
  if (!(a > 0.0 && a < 1.0)) throw std::invalid_argument("a must lie in (0,1)");
}

void check_t(Covering2DType type, double a, double t) {
  const double hi = t_upper_bound(type, a);
  const bool ok = (type == Covering2DType::One) ? (t > 0.0 && t <= hi) : (t > 0.0 && t < hi);
  if (!ok) throw std::invalid_argument("t outside the legal range of the covering type");
}

double checked_acosh(double v) {
  if (!(v >= 1.0 - 1e-12)) throw std::domain_error("arccosh argument below 1");
  return std::acosh(std::max(v, 1.0));
}

// 2 sinh(arccosh(...)/2): horocyclic arc between S1 and T.
double horocycle_term(double a, double t) {
  const double a2 = a * a;
  return 2.0 * std::sinh(0.5 * checked_acosh((2.0 * t * a2 + t - 4.0) / (2.0 * t - 4.0 + 2.0 * t * a2)));
}

double side_a1p1(double a) { return checked_acosh(1.0 / std::sqrt(1.0 - a * a)); }

LorentzVec lerp(const LorentzVec& a, const LorentzVec& b, double t) { return a * (1.0 - t) + b * t; }

double chebyshev_lobatto(std::size_t k, std::size_t n) {
  if (n < 2) return 0.5;
  return 0.5 * (1.0 - std::cos(kPi * static_cast<double>(k) / static_cast<double>(n - 1)));
}

}  // namespace

double t_upper_bound(Covering2DType type, double a) {
  check_a(a);
  if (type == Covering2DType::One) return 1.0;
  const double a2 = a * a;
  return 2.0 / (1.0 + 2.0 * a2 - a2 * a2);
}

Covering2DConfig build_covering2d(Covering2DType type, double a, double t) {
  check_a(a);
  check_t(type, a, t);
  Covering2DConfig c;
  c.type = type;
  c.a = a;
  c.t = t;
  c.domain = lambert_domain(a);
  c.t_point = LorentzVec{1.0, t * a, 1.0 - t * a * a};
  c.horoball = horoball_through(c.t_point);
  c.s1 = c.horoball.axis_point();

  if (type == Covering2DType::One) {
    c.m = c.t_point;
  } else {
    const SegmentHits hits = ball_segment_intersection(c.horoball, c.domain.p1, c.domain.p0);
    if (hits.roots.empty()) throw std::domain_error("M off segment P0P1");
    c.m = lerp(c.domain.p1, c.domain.p0, hits.roots.front());
  }

  const LorentzVec base = hyperplane_through(std::array<LorentzVec, 2>{c.domain.a1, c.domain.p1});
  c.hyperball = hyperball_through(base, c.m);
  c.s2 = LorentzVec{1.0, 0.0, std::tanh(c.hyperball.h)};

  c.vol_horoball = horoball_piece_volume_2d(c.horoball, c.s1, c.t_point);
  c.vol_hyperball = hyperball_piece_volume_2d(c.hyperball.h, distance(c.domain.a1, c.domain.p1));
  c.density = (c.vol_horoball + c.vol_hyperball) / area2(c.domain);
  return c;
}

double density_c1(double a, double t) {
  check_a(a);
  check_t(Covering2DType::One, a, t);
  const double a2 = a * a;
  const double hyper = side_a1p1(a) * (1.0 - t * a2) / (a * std::sqrt(2.0 * t - t * t - a2 * t * t));
  return (hyper + horocycle_term(a, t)) / (kPi / 2.0);
}

double density_c2(double a, double t) {
  check_a(a);
  check_t(Covering2DType::Two, a, t);
  const double a2 = a * a;
  // w = 1 - s of the horocycle through T.
  const double w = 2.0 * t * a2 / (2.0 - t);
  const double disc = 1.0 - 2.0 * a2 / w;
  if (disc < 0.0) throw std::domain_error("M off segment P0P1");
  const double y_m = 1.0 - 0.5 * w - 0.5 * w * std::sqrt(disc);
  if (y_m < -1e-12 || y_m > 1.0 - a2 + 1e-12) throw std::domain_error("M off segment P0P1");
  const double one_a2 = 1.0 - a2;
  const double h2 = checked_acosh(std::sqrt(one_a2 / (one_a2 - y_m * y_m)));
  return (side_a1p1(a) * std::sinh(h2) + horocycle_term(a, t)) / (kPi / 2.0);
}

double density_closed_form(Covering2DType type, double a, double t) {
  return type == Covering2DType::One ? density_c1(a, t) : density_c2(a, t);
}

Coverage2DReport verify_coverage_2d(const Covering2DConfig& cfg, std::size_t samples_per_side) {
  const auto& d = cfg.domain;
  const std::array<std::pair<const LorentzVec*, const LorentzVec*>, 4> sides{
      {{&d.a0, &d.a1}, {&d.a1, &d.p1}, {&d.p1, &d.p0}, {&d.p0, &d.a0}}};
  Coverage2DReport rep;
  rep.overall = true;
  for (std::size_t s = 0; s < sides.size(); ++s) {
    bool ok = true;
    for (std::size_t k = 0; k < samples_per_side && ok; ++k) {
      const LorentzVec x = lerp(*sides[s].first, *sides[s].second, chebyshev_lobatto(k, samples_per_side));
      bool in = contains(cfg.horoball, x);
      if (!in && classify(x) == PointClass::Proper) in = x[2] >= 0.0 && contains(cfg.hyperball, x);
      if (!in) {
        ok = false;
        if (!rep.witness) rep.witness = x;
      }
    }
    rep.sides[s] = ok;
    rep.overall = rep.overall && ok;
  }
  return rep;
}

Optimum2D optimize2d(Covering2DType type, double a, const MinimizeOptions& options) {
  Objective1D obj;
  obj.lo = 0.0;
  obj.hi = t_upper_bound(type, a);
  obj.f = [&](double t) -> std::optional<double> {
    try {
      const Covering2DConfig cfg = build_covering2d(type, a, t);
      if (!verify_coverage_2d(cfg).overall) return std::nullopt;
      return density_closed_form(type, a, t);
    } catch (const std::exception&) {
      return std::nullopt;
    }
  };
  const Minimum1D m = minimize_1d(obj, options);
  return {m.x, m.value};
}

}  // namespace orthocover
