#include "orthocover/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>
#include <thread>

namespace orthocover {

namespace {

constexpr double kPlaneSlack = 1e-12;
// Near an ideal apex the excluded cusp has area ~ sqrt(1 - clip) in the
// plane, so the cone sampler clips much closer to the sphere than the box.
constexpr double kConeClip = 1.0 - 1e-14;

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double unit_double(std::mt19937_64& g) { return static_cast<double>(g() >> 11) * 0x1.0p-53; }

// Welford accumulator; merge() is Chan's pairwise update.
struct Moments {
  double n = 0.0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double x) {
    n += 1.0;
    const double d = x - mean;
    mean += d / n;
    m2 += d * (x - mean);
  }
  void merge(const Moments& o) {
    if (o.n == 0.0) return;
    const double tot = n + o.n;
    const double d = o.mean - mean;
    mean += d * o.n / tot;
    m2 += o.m2 + d * d * n * o.n / tot;
    n = tot;
  }
};

double klein_weight(std::span<const double> x, std::size_t dim) {
  double r2 = 0.0;
  for (double v : x) r2 += v * v;
  return std::pow(1.0 - r2, -0.5 * static_cast<double>(dim + 1));
}

double norm2(std::span<const double> x) {
  double r2 = 0.0;
  for (double v : x) r2 += v * v;
  return r2;
}

// Runs `per_sample` over kStreams deterministic streams and merges in order.
template <class F>
McEstimate run_streams(std::uint64_t samples, std::uint64_t seed, F&& per_sample) {
  std::array<Moments, kStreams> parts{};
  std::array<std::uint64_t, kStreams> seeds{};
  std::uint64_t state = seed;
  for (auto& s : seeds) s = splitmix64(state);

  const auto work = [&](std::size_t stream) {
    std::mt19937_64 gen(seeds[stream]);
    const std::uint64_t count = samples / kStreams + (stream < samples % kStreams ? 1 : 0);
    Moments m;
    for (std::uint64_t i = 0; i < count; ++i) m.add(per_sample(gen));
    parts[stream] = m;
  };

  const std::size_t threads = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, kStreams);
  if (threads == 1) {
    for (std::size_t s = 0; s < kStreams; ++s) work(s);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        for (std::size_t s = t; s < kStreams; s += threads) work(s);
      });
    }
  }

  Moments total;
  for (const auto& p : parts) total.merge(p);
  McEstimate est;
  est.samples = samples;
  est.seed = seed;
  est.value = total.mean;
  est.std_error = total.n > 1.0 ? std::sqrt(total.m2 / (total.n - 1.0) / total.n) : 0.0;
  return est;
}

struct HalfSpace {
  std::array<double, 3> n{};
  double d = 0.0;
  bool inside(std::span<const double> x) const {
    double v = d;
    for (std::size_t i = 0; i < x.size(); ++i) v += n[i] * x[i];
    return v >= -kPlaneSlack;
  }
};

using Vec3 = std::array<double, 3>;

Vec3 sub(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

// Plane through three points, oriented so that `inside` is on the positive side.
HalfSpace plane3(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& inside) {
  Vec3 n = cross(sub(b, a), sub(c, a));
  const double len = std::sqrt(dot(n, n));
  for (double& v : n) v /= len;
  double d = -dot(n, a);
  if (dot(n, inside) + d < 0.0) {
    for (double& v : n) v = -v;
    d = -d;
  }
  return {n, d};
}

// Line through two 2D points, oriented towards `inside`.
HalfSpace line2(const Vec3& a, const Vec3& b, const Vec3& inside) {
  Vec3 n{b[1] - a[1], a[0] - b[0], 0.0};
  const double len = std::hypot(n[0], n[1]);
  n[0] /= len;
  n[1] /= len;
  double d = -(n[0] * a[0] + n[1] * a[1]);
  if (n[0] * inside[0] + n[1] * inside[1] + d < 0.0) {
    n = {-n[0], -n[1], 0.0};
    d = -d;
  }
  return {n, d};
}

Vec3 centroid(std::span<const Vec3> pts) {
  Vec3 c{};
  for (const auto& p : pts) {
    for (std::size_t i = 0; i < 3; ++i) c[i] += p[i] / static_cast<double>(pts.size());
  }
  return c;
}

Membership all_of(std::vector<HalfSpace> planes) {
  return [planes = std::move(planes)](std::span<const double> x) {
    return std::all_of(planes.begin(), planes.end(), [&](const HalfSpace& h) { return h.inside(x); });
  };
}

Membership triangle2(const Vec3& a, const Vec3& b, const Vec3& c) {
  const std::array<Vec3, 3> pts{a, b, c};
  const Vec3 m = centroid(pts);
  return all_of({line2(a, b, m), line2(b, c, m), line2(c, a, m)});
}

std::vector<double> chart_vec(const LorentzVec& v) {
  const auto c = v.normalized().chart();
  return {c.begin(), c.begin() + static_cast<std::ptrdiff_t>(v.dim())};
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t k) {
  std::uint64_t s = seed ^ (k * 0xd1b54a32d192ed03ULL);
  return splitmix64(s);
}

}  // namespace

Box bounding_box(std::span<const LorentzVec> points, double inflate, double clip_radius) {
  if (points.empty()) throw std::invalid_argument("bounding_box: no points");
  const std::size_t n = points.front().dim();
  Box box;
  box.lo.assign(n, std::numeric_limits<double>::infinity());
  box.hi.assign(n, -std::numeric_limits<double>::infinity());
  for (const auto& p : points) {
    const auto c = chart_vec(p);
    for (std::size_t i = 0; i < n; ++i) {
      box.lo[i] = std::min(box.lo[i], c[i] - inflate);
      box.hi[i] = std::max(box.hi[i], c[i] + inflate);
    }
  }
  box.clip_radius = clip_radius;
  return box;
}

McEstimate mc_volume(const Membership& region, const Box& box, std::size_t dim, std::uint64_t samples,
                     std::uint64_t seed) {
  if (box.lo.size() != dim || box.hi.size() != dim) throw std::invalid_argument("mc_volume: box dimension mismatch");
  double far2 = 0.0;
  double vol = 1.0;
  for (std::size_t i = 0; i < dim; ++i) {
    far2 += std::max(box.lo[i] * box.lo[i], box.hi[i] * box.hi[i]);
    vol *= box.hi[i] - box.lo[i];
  }
  if (box.clip_radius >= 1.0 && far2 >= 1.0) {
    throw std::domain_error("mc_volume: box reaches the boundary sphere; the weight is unbounded");
  }
  const double clip2 = box.clip_radius * box.clip_radius;
  return run_streams(samples, seed, [&](std::mt19937_64& g) {
    std::array<double, 3> x{};
    for (std::size_t i = 0; i < dim; ++i) x[i] = box.lo[i] + (box.hi[i] - box.lo[i]) * unit_double(g);
    const std::span<const double> xs(x.data(), dim);
    if (norm2(xs) >= clip2 || !region(xs)) return 0.0;
    return vol * klein_weight(xs, dim);
  });
}

Cone cone_from_apex(const LorentzVec& apex, std::span<const LorentzVec> points, double margin) {
  const std::size_t n = apex.dim();
  const auto a = chart_vec(apex);
  std::vector<std::vector<double>> dirs;
  std::vector<double> axis(n, 0.0);
  double radius = 0.0;
  for (const auto& p : points) {
    auto c = chart_vec(p);
    double len = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      c[i] -= a[i];
      len += c[i] * c[i];
    }
    len = std::sqrt(len);
    if (len < 1e-14) continue;
    radius = std::max(radius, len);
    for (std::size_t i = 0; i < n; ++i) {
      c[i] /= len;
      axis[i] += c[i];
    }
    dirs.push_back(std::move(c));
  }
  if (dirs.empty()) throw std::invalid_argument("cone_from_apex: all points coincide with the apex");
  double alen = 0.0;
  for (double v : axis) alen += v * v;
  alen = std::sqrt(alen);
  for (double& v : axis) v /= alen;
  double half = 0.0;
  for (const auto& d : dirs) {
    double c = 0.0;
    for (std::size_t i = 0; i < n; ++i) c += d[i] * axis[i];
    half = std::max(half, std::acos(std::clamp(c, -1.0, 1.0)));
  }
  return Cone{a, axis, std::min(half + margin, std::numbers::pi / 2), radius * (1.0 + margin), kConeClip};
}

McEstimate mc_volume_cone(const Membership& region, const Cone& cone, std::size_t dim, std::uint64_t samples,
                          std::uint64_t seed) {
  if (dim != 2 && dim != 3) throw std::invalid_argument("mc_volume_cone: dimension must be 2 or 3");
  if (cone.apex.size() != dim || cone.axis.size() != dim) throw std::invalid_argument("mc_volume_cone: bad cone");
  const double pi = std::numbers::pi;
  const double k = 2.0 / static_cast<double>(dim - 1);
  const double omega = dim == 3 ? 2.0 * pi * (1.0 - std::cos(cone.half_angle)) : 2.0 * cone.half_angle;
  const double clip2 = cone.clip_radius * cone.clip_radius;

  // Orthonormal frame (axis, e1, e2).
  Vec3 ax{};
  for (std::size_t i = 0; i < dim; ++i) ax[i] = cone.axis[i];
  Vec3 e1{};
  Vec3 e2{};
  if (dim == 2) {
    e1 = {-ax[1], ax[0], 0.0};
  } else {
    const Vec3 helper = std::abs(ax[0]) < 0.9 ? Vec3{1.0, 0.0, 0.0} : Vec3{0.0, 1.0, 0.0};
    e1 = cross(ax, helper);
    const double l = std::sqrt(dot(e1, e1));
    for (double& v : e1) v /= l;
    e2 = cross(ax, e1);
  }

  return run_streams(samples, seed, [&](std::mt19937_64& g) {
    const double u = unit_double(g);
    const double rho = cone.radius * std::pow(u, k);
    Vec3 dir{};
    if (dim == 2) {
      const double phi = (2.0 * unit_double(g) - 1.0) * cone.half_angle;
      for (std::size_t i = 0; i < 2; ++i) dir[i] = std::cos(phi) * ax[i] + std::sin(phi) * e1[i];
    } else {
      const double ct = 1.0 - unit_double(g) * (1.0 - std::cos(cone.half_angle));
      const double st = std::sqrt(std::max(0.0, 1.0 - ct * ct));
      const double phi = 2.0 * pi * unit_double(g);
      for (std::size_t i = 0; i < 3; ++i) dir[i] = ct * ax[i] + st * (std::cos(phi) * e1[i] + std::sin(phi) * e2[i]);
    }
    std::array<double, 3> x{};
    for (std::size_t i = 0; i < dim; ++i) x[i] = cone.apex[i] + rho * dir[i];
    const std::span<const double> xs(x.data(), dim);
    if (rho <= 0.0 || norm2(xs) >= clip2 || !region(xs)) return 0.0;
    // 1 / pdf = Omega * rho^(n-1) * k * R^(1/k) * rho^(1 - 1/k)
    const double inv_pdf = omega * std::pow(rho, static_cast<double>(dim - 1)) * k * std::pow(cone.radius, 1.0 / k) *
                           std::pow(rho, 1.0 - 1.0 / k);
    return klein_weight(xs, dim) * inv_pdf;
  });
}

Membership orthoscheme_membership(const TruncatedOrthoscheme& orth) {
  const auto v = [](const LorentzVec& p) { return p.normalized().chart(); };
  const Vec3 a0 = v(orth.a0), a1 = v(orth.a1), a2 = v(orth.a2), p0 = v(orth.p0), p1 = v(orth.p1), p2 = v(orth.p2);
  const std::array<Vec3, 6> all{a0, a1, a2, p0, p1, p2};
  const Vec3 m = centroid(all);
  return all_of({plane3(p0, p1, a0, m), plane3(p0, p2, a0, m), plane3(p1, p2, a1, m), plane3(a0, a1, a2, m),
                 HalfSpace{{0.0, 0.0, 1.0}, 0.0}});
}

Membership lambert_membership(const LambertDomain& domain) {
  const auto v = [](const LorentzVec& p) { return p.normalized().chart(); };
  const std::array<Vec3, 4> q{v(domain.a0), v(domain.a1), v(domain.p1), v(domain.p0)};
  const Vec3 m = centroid(q);
  return all_of({line2(q[0], q[1], m), line2(q[1], q[2], m), line2(q[2], q[3], m), line2(q[3], q[0], m)});
}

Membership base_triangle_membership(const TruncatedOrthoscheme& orth) {
  return triangle2({0.0, 0.0, 0.0}, {0.0, orth.y, 0.0}, {orth.x, orth.y, 0.0});
}

Membership horoball_piece_membership(const TruncatedOrthoscheme& orth, const BallPair& pair) {
  // Coordinates of x - A0 in the basis of the three edge directions.
  const auto v = [](const LorentzVec& p) { return p.normalized().chart(); };
  const Vec3 a0 = v(orth.a0);
  const Eigen::Vector3d d0(sub(v(orth.p0), a0).data());
  const Eigen::Vector3d d1(sub(v(orth.a1), a0).data());
  const Eigen::Vector3d d2(sub(v(orth.a2), a0).data());
  Eigen::Matrix3d basis;
  basis << d0, d1, d2;
  const Eigen::Matrix3d inv = basis.inverse();
  const Horoball ball = pair.horoball;
  return [inv, a0, ball](std::span<const double> x) {
    const Eigen::Vector3d rel(x[0] - a0[0], x[1] - a0[1], x[2] - a0[2]);
    const Eigen::Vector3d c = inv * rel;
    if ((c.array() < -kPlaneSlack).any()) return false;
    return contains(ball, LorentzVec{1.0, x[0], x[1], x[2]});
  };
}

Membership hyperball_piece_membership(const TruncatedOrthoscheme& orth, const BallPair& pair) {
  const Membership tri = base_triangle_membership(orth);
  const Hyperball ball = pair.hyperball;
  return [tri, ball](std::span<const double> x) {
    if (x[2] < 0.0 || !tri(x.first(2))) return false;
    return contains(ball, LorentzVec{1.0, x[0], x[1], x[2]});
  };
}

McEstimate mc_cell_volume(const TruncatedOrthoscheme& orth, std::uint64_t samples, std::uint64_t seed) {
  const std::array<LorentzVec, 5> pts{orth.a1, orth.a2, orth.p0, orth.p1, orth.p2};
  return mc_volume_cone(orthoscheme_membership(orth), cone_from_apex(orth.a0, pts), 3, samples, seed);
}

McEstimate mc_lambert_area(const LambertDomain& domain, std::uint64_t samples, std::uint64_t seed) {
  const std::array<LorentzVec, 3> pts{domain.a1, domain.p1, domain.p0};
  return mc_volume_cone(lambert_membership(domain), cone_from_apex(domain.a0, pts), 2, samples, seed);
}

McEstimate mc_base_triangle_area(const TruncatedOrthoscheme& orth, std::uint64_t samples, std::uint64_t seed) {
  const std::array<LorentzVec, 3> pts{LorentzVec{1.0, 0.0, 0.0}, LorentzVec{1.0, 0.0, orth.y},
                                      LorentzVec{1.0, orth.x, orth.y}};
  return mc_volume(base_triangle_membership(orth), bounding_box(pts), 2, samples, seed);
}

McEstimate mc_horoball_piece(const TruncatedOrthoscheme& orth, const BallPair& pair, std::uint64_t samples,
                             std::uint64_t seed) {
  const std::array<LorentzVec, 3> pts{orth.p0, orth.a1, orth.a2};
  Cone cone = cone_from_apex(orth.a0, pts);
  // The horoball is an ellipsoid hanging from A0 with vertical extent w and
  // horizontal semi-axis sqrt(w/2).
  const double w = 1.0 - pair.horoball.s;
  cone.radius = (w + std::sqrt(w / 2.0)) * 1.001;
  return mc_volume_cone(horoball_piece_membership(orth, pair), cone, 3, samples, seed);
}

McEstimate mc_hyperball_piece(const TruncatedOrthoscheme& orth, const BallPair& pair, std::uint64_t samples,
                              std::uint64_t seed) {
  const double top = std::tanh(pair.hyperball.h);
  const std::array<LorentzVec, 4> pts{LorentzVec{1.0, 0.0, 0.0, 0.0}, LorentzVec{1.0, 0.0, orth.y, 0.0},
                                      LorentzVec{1.0, orth.x, orth.y, 0.0}, LorentzVec{1.0, 0.0, 0.0, top}};
  return mc_volume(hyperball_piece_membership(orth, pair), bounding_box(pts), 3, samples, seed);
}

OracleComparison compare(std::string name, double exact, const McEstimate& est) {
  OracleComparison c;
  c.name = std::move(name);
  c.exact = exact;
  c.estimate = est;
  const double diff = std::abs(exact - est.value);
  c.sigmas = est.std_error > 0.0 ? diff / est.std_error : (diff == 0.0 ? 0.0 : std::numeric_limits<double>::infinity());
  return c;
}

std::vector<OracleComparison> oracle_suite(const CoveringEvaluation& ev, std::uint64_t samples, std::uint64_t seed) {
  if (ev.orth == nullptr) throw std::invalid_argument("oracle_suite: evaluation without orthoscheme");
  const TruncatedOrthoscheme& orth = *ev.orth;
  const LambertDomain lam = lambert_domain(0.5);
  std::vector<OracleComparison> out;
  out.push_back(compare("cell volume", orth.volume, mc_cell_volume(orth, samples, derive_seed(seed, 1))));
  out.push_back(compare("lambert area", area2(lam), mc_lambert_area(lam, samples, derive_seed(seed, 2))));
  out.push_back(
      compare("base triangle area", base_triangle_area(orth), mc_base_triangle_area(orth, samples, derive_seed(seed, 3))));
  out.push_back(compare("horoball piece", ev.pieces.horoball, mc_horoball_piece(orth, ev.pair, samples, derive_seed(seed, 4))));
  out.push_back(
      compare("hyperball piece", ev.pieces.hyperball, mc_hyperball_piece(orth, ev.pair, samples, derive_seed(seed, 5))));
  return out;
}

}  // namespace orthocover
