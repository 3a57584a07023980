#include "orthocover/orthoscheme.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "orthocover/lobachevsky.hpp"

namespace orthocover {

namespace {

constexpr double kPi = std::numbers::pi;

Eigen::Matrix4d coxeter_matrix(double p, Family f) {
  Eigen::Matrix4d c = Eigen::Matrix4d::Identity();
  c(0, 1) = c(1, 0) = -std::cos(kPi / p);
  c(1, 2) = c(2, 1) = -std::cos(kPi / f.q);
  c(2, 3) = c(3, 2) = -std::cos(kPi / f.r);
  return c;
}

struct SignatureCheck {
  bool ok = false;
  std::string reason;
};

SignatureCheck check_signature(const Eigen::Matrix4d& c, const Eigen::Matrix4d& h) {
  const double inv_err = (c * h - Eigen::Matrix4d::Identity()).cwiseAbs().maxCoeff();
  if (!(inv_err <= 1e-10)) return {false, "Schlaefli matrix inverse inaccurate"};
  if (!(c.determinant() < 0.0)) return {false, "det(C) >= 0, not hyperbolic"};
  const double scale = h.cwiseAbs().maxCoeff();
  // At p one below the bound A3 becomes ideal; round-off must not make it outer.
  if (!(h(3, 3) > 1e-9 * scale)) return {false, "A3 is not an outer vertex (h33 <= 0)"};
  if (!(std::abs(h(0, 0)) <= 1e-9 * scale)) return {false, "A0 is not ideal (h00 != 0)"};
  if (!(h(1, 1) < 0.0 && h(2, 2) < 0.0)) return {false, "A1 or A2 is not proper"};
  return {true, {}};
}

double cosh_from_inner(double uv, double uu, double vv) { return std::abs(uv) / std::sqrt(uu * vv); }

// Positive root of 1 - 1/c^2 with a guard for round-off at c = 1.
double one_minus_inv_sq(double c) { return 1.0 - 1.0 / (c * c); }

}  // namespace

bool is_supported(Family f) { return std::find(kFamilies.begin(), kFamilies.end(), f) != kFamilies.end(); }

int existence_bound(Family f) {
  if (f == Family{3, 6}) return 7;
  if (f == Family{4, 4}) return 5;
  if (f == Family{6, 3}) return 4;
  throw std::invalid_argument("unsupported family " + to_string(f));
}

std::string to_string(Family f) { return "(" + std::to_string(f.q) + "," + std::to_string(f.r) + ")"; }

Family parse_family(const std::string& text) {
  std::istringstream is(text);
  Family f;
  char comma = 0;
  if (!(is >> f.q >> comma >> f.r) || comma != ',' || !is.eof()) {
    throw std::invalid_argument("family must be written as q,r (got '" + text + "')");
  }
  if (!is_supported(f)) {
    throw std::invalid_argument("family " + to_string(f) + " is not one of (3,6), (4,4), (6,3)");
  }
  return f;
}

std::string to_string(Vertex v) {
  switch (v) {
    case Vertex::A0: return "A0";
    case Vertex::A1: return "A1";
    case Vertex::A2: return "A2";
    case Vertex::P0: return "P0";
    case Vertex::P1: return "P1";
    case Vertex::P2: return "P2";
  }
  return "?";
}

bool signature_admissible(double p, Family family) {
  if (!is_supported(family) || !(p > 2.0) || !std::isfinite(p)) return false;
  const Eigen::Matrix4d c = coxeter_matrix(p, family);
  return check_signature(c, c.inverse()).ok;
}

SchlafliContext build_schlafli(double p, Family family, TilingMode mode) {
  if (!is_supported(family)) {
    throw std::invalid_argument("family " + to_string(family) + " is not one of (3,6), (4,4), (6,3)");
  }
  if (!std::isfinite(p)) throw std::invalid_argument("p must be finite");
  const int bound = existence_bound(family);
  std::ostringstream msg;
  if (mode == TilingMode::Integer) {
    if (std::abs(p - std::round(p)) > 1e-12) {
      msg << "p=" << p << " is not an integer; real p is only available for family (3,6) with 6<p<7";
      throw std::invalid_argument(msg.str());
    }
    if (p < bound) {
      msg << "p=" << p << " below existence bound p>=" << bound << " for (q,r)=" << to_string(family);
      throw std::invalid_argument(msg.str());
    }
  } else {
    if (!(family == Family{3, 6})) throw std::invalid_argument("real p is only supported for family (3,6)");
    if (!(p > 6.0 && p < 7.0)) {
      msg << "real p=" << p << " outside the open interval (6,7)";
      throw std::invalid_argument(msg.str());
    }
  }

  SchlafliContext ctx;
  ctx.p = p;
  ctx.family = family;
  ctx.mode = mode;
  ctx.c = coxeter_matrix(p, family);
  ctx.h = ctx.c.inverse();
  if (const auto chk = check_signature(ctx.c, ctx.h); !chk.ok) {
    msg << "signature check disagrees with existence bound at p=" << p << " " << to_string(family) << ": "
        << chk.reason;
    throw std::domain_error(msg.str());
  }
  return ctx;
}

const LorentzVec& TruncatedOrthoscheme::vertex(Vertex v) const {
  switch (v) {
    case Vertex::A0: return a0;
    case Vertex::A1: return a1;
    case Vertex::A2: return a2;
    case Vertex::P0: return p0;
    case Vertex::P1: return p1;
    case Vertex::P2: return p2;
  }
  throw std::invalid_argument("bad vertex");
}

TruncatedOrthoscheme solve_coordinates(const SchlafliContext& ctx) {
  const auto& h = ctx.h;
  const double h33 = h(3, 3);
  const double d0 = h(0, 0) * h33 - h(0, 3) * h(0, 3);
  const double d1 = h(1, 1) * h33 - h(1, 3) * h(1, 3);
  const double d2 = h(2, 2) * h33 - h(2, 3) * h(2, 3);

  const double c_p0p1 = std::abs(h(0, 3) * h(1, 3) - h(0, 1) * h33) / std::sqrt(d1 * d0);
  const double c_p0p2 = std::abs(h(0, 3) * h(2, 3) - h(0, 2) * h33) / std::sqrt(d2 * d0);
  const double c_a1p1 = std::sqrt(d1 / (h(1, 1) * h33));
  const double c_a2p2 = std::sqrt(d2 / (h(2, 2) * h33));

  TruncatedOrthoscheme o;
  o.ctx = ctx;
  const double y2 = one_minus_inv_sq(c_p0p1);
  const double r2 = one_minus_inv_sq(c_p0p2);  // x^2 + y^2
  const double x2 = r2 - y2;
  if (!(y2 > 0.0 && x2 > 0.0 && r2 < 1.0)) {
    throw std::domain_error("solve_coordinates: no positive solution for x, y");
  }
  o.y = std::sqrt(y2);
  o.x = std::sqrt(x2);
  const double z1sq = (1.0 - y2) * one_minus_inv_sq(c_a1p1);
  const double z2sq = (1.0 - r2) * one_minus_inv_sq(c_a2p2);
  if (!(z1sq > 0.0 && z2sq > 0.0)) {
    throw std::domain_error("solve_coordinates: no positive solution for z1, z2");
  }
  o.z1 = std::sqrt(z1sq);
  o.z2 = std::sqrt(z2sq);

  o.a0 = LorentzVec{1.0, 0.0, 0.0, 1.0};
  o.a1 = LorentzVec{1.0, 0.0, o.y, o.z1};
  o.a2 = LorentzVec{1.0, o.x, o.y, o.z2};
  o.p0 = LorentzVec{1.0, 0.0, 0.0, 0.0};
  o.p1 = LorentzVec{1.0, 0.0, o.y, 0.0};
  o.p2 = LorentzVec{1.0, o.x, o.y, 0.0};
  o.volume = volume3(ctx);
  return o;
}

TruncatedOrthoscheme make_orthoscheme(double p, Family family, TilingMode mode) {
  return solve_coordinates(build_schlafli(p, family, mode));
}

std::array<double, 4> coordinate_residuals(const TruncatedOrthoscheme& o) {
  const auto& h = o.ctx.h;
  const double h33 = h(3, 3);
  const double d0 = h(0, 0) * h33 - h(0, 3) * h(0, 3);
  const double d1 = h(1, 1) * h33 - h(1, 3) * h(1, 3);
  const double d2 = h(2, 2) * h33 - h(2, 3) * h(2, 3);
  const double y2 = o.y * o.y;
  const double r2 = y2 + o.x * o.x;

  const double lhs43 = std::abs(h(0, 3) * h(1, 3) - h(0, 1) * h33) / std::sqrt(d1 * d0);
  const double lhs44 = std::abs(h(0, 3) * h(2, 3) - h(0, 2) * h33) / std::sqrt(d2 * d0);
  const double lhs45 = std::sqrt(d1 / (h(1, 1) * h33));
  const double lhs46 = std::sqrt(d2 / (h(2, 2) * h33));

  const double rhs43 = 1.0 / std::sqrt((-1.0) * (-1.0 + y2));
  const double rhs44 = 1.0 / std::sqrt((-1.0) * (-1.0 + r2));
  const double rhs45 = (1.0 - y2) / std::sqrt((-1.0 + y2 + o.z1 * o.z1) * (-1.0 + y2));
  const double rhs46 = (1.0 - r2) / std::sqrt((-1.0 + r2 + o.z2 * o.z2) * (-1.0 + r2));
  return {lhs43 - rhs43, lhs44 - rhs44, lhs45 - rhs45, lhs46 - rhs46};
}

ProperGram proper_vertex_cosh_from_schlafli(const SchlafliContext& ctx) {
  const auto& h = ctx.h;
  const double h33 = h(3, 3);
  // Index map: 0..2 -> P0..P2, 3 -> A1, 4 -> A2.
  const auto inner = [&](int u, int v) {
    const bool up = u < 3;
    const bool vp = v < 3;
    const int i = up ? u : u - 2;
    const int k = vp ? v : v - 2;
    if (!up && !vp) return h(i, k);
    if (up && vp) return h33 * (h(i, k) * h33 - h(i, 3) * h(k, 3));
    // one of each: <a_i, p_k>
    const int a = up ? k : i;
    const int pidx = up ? i : k;
    return h(a, pidx) * h33 - h(a, 3) * h(pidx, 3);
  };
  ProperGram g{};
  for (int u = 0; u < 5; ++u) {
    for (int v = 0; v < 5; ++v) g[u][v] = cosh_from_inner(inner(u, v), inner(u, u), inner(v, v));
  }
  return g;
}

ProperGram proper_vertex_cosh_from_coordinates(const TruncatedOrthoscheme& o) {
  const std::array<const LorentzVec*, 5> pts{&o.p0, &o.p1, &o.p2, &o.a1, &o.a2};
  ProperGram g{};
  for (int u = 0; u < 5; ++u) {
    for (int v = 0; v < 5; ++v) {
      g[u][v] = cosh_from_inner(bilinear(*pts[u], *pts[v]), bilinear(*pts[u], *pts[u]),
                                bilinear(*pts[v], *pts[v]));
    }
  }
  return g;
}

std::array<LorentzVec, 4> face_covectors(const TruncatedOrthoscheme& o) {
  const LorentzVec inside = (o.a0 + o.a1 + o.a2 + o.p0 + o.p1 + o.p2) * (1.0 / 6.0);
  const auto face = [&](const LorentzVec& a, const LorentzVec& b, const LorentzVec& c) {
    const std::array<LorentzVec, 3> pts{a, b, c};
    return orient_outward(hyperplane_through(pts), inside);
  };
  return {face(o.a1, o.a2, o.p1),   // opposite A0
          face(o.a0, o.a2, o.p0),   // opposite A1
          face(o.a0, o.a1, o.p0),   // opposite A2
          face(o.a0, o.a1, o.a2)};  // opposite A3
}

double kellerhals_volume(double alpha01, double alpha12, double alpha23) {
  const double c12 = std::cos(alpha12);
  const double s01 = std::sin(alpha01);
  const double s23 = std::sin(alpha23);
  const double disc = c12 * c12 - s01 * s01 * s23 * s23;
  if (disc < 0.0) throw std::domain_error("kellerhals_volume: negative discriminant");
  const double theta = std::atan2(std::sqrt(disc), std::cos(alpha01) * std::cos(alpha23));
  const double v = lob(alpha01 + theta) - lob(alpha01 - theta) + lob(kPi / 2 + alpha12 - theta) +
                   lob(kPi / 2 - alpha12 - theta) + lob(alpha23 + theta) - lob(alpha23 - theta) +
                   2.0 * lob(kPi / 2 - theta);
  return 0.25 * v;
}

double volume3(const SchlafliContext& ctx) {
  return kellerhals_volume(kPi / ctx.p, kPi / ctx.family.q, kPi / ctx.family.r);
}

std::array<double, 3> base_triangle_angles(const TruncatedOrthoscheme& o) {
  const auto f = face_covectors(o);
  // Side faces of the prism: P0P1 in face 2, P1P2 in face 0, P0P2 in face 1.
  return {dihedral_angle(f[1], f[2]), dihedral_angle(f[0], f[2]), dihedral_angle(f[0], f[1])};
}

double base_triangle_area(const TruncatedOrthoscheme& o) {
  const auto ang = base_triangle_angles(o);
  const double area = kPi - (ang[0] + ang[1] + ang[2]);
  if (!(area > 0.0)) throw std::domain_error("base_triangle_area: degenerate triangle");
  return area;
}

LambertDomain lambert_domain(double a) {
  if (!(a > 0.0 && a < 1.0)) throw std::invalid_argument("lambert_domain: a must lie in (0,1)");
  LambertDomain d;
  d.a = a;
  d.a0 = LorentzVec{1.0, 0.0, 1.0};
  d.a1 = LorentzVec{1.0, 0.0, 0.0};
  d.a2 = LorentzVec{1.0, 1.0 / a, 0.0};
  d.p0 = LorentzVec{1.0, a, 1.0 - a * a};
  d.p1 = LorentzVec{1.0, a, 0.0};
  return d;
}

double area2(const LambertDomain&) { return kPi / 2.0; }

std::array<double, 4> lambert_angles(const LambertDomain& d) {
  const LorentzVec inside = (d.a1 + d.p1 + d.p0) * (1.0 / 3.0);
  const auto line = [&](const LorentzVec& a, const LorentzVec& b) {
    const std::array<LorentzVec, 2> pts{a, b};
    return orient_outward(hyperplane_through(pts), inside);
  };
  const LorentzVec a0a1 = line(d.a0, d.a1);
  const LorentzVec a1p1 = line(d.a1, d.p1);
  const LorentzVec p1p0 = line(d.p1, d.p0);
  const LorentzVec p0a0 = line(d.p0, d.a0);
  return {dihedral_angle(p0a0, a0a1), dihedral_angle(a0a1, a1p1), dihedral_angle(a1p1, p1p0),
          dihedral_angle(p1p0, p0a0)};
}

double lambert_area_from_angles(const LambertDomain& d) {
  const auto ang = lambert_angles(d);
  return 2.0 * kPi - (ang[0] + ang[1] + ang[2] + ang[3]);
}

}  // namespace orthocover
