#include "orthocover/lorentz.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace orthocover {

namespace {

void check_size(std::size_t n) {
  if (n != 3 && n != 4) {
    throw std::invalid_argument("LorentzVec: expected 3 or 4 coordinates, got " + std::to_string(n));
  }
}

void check_same_dim(const LorentzVec& x, const LorentzVec& y) {
  if (x.size() != y.size()) {
    throw std::invalid_argument("Lorentz vectors of different dimension (" + std::to_string(x.dim()) +
                                " vs " + std::to_string(y.dim()) + ")");
  }
}

double det3(double a, double b, double c, double d, double e, double f, double g, double h, double i) {
  return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g);
}

}  // namespace

LorentzVec::LorentzVec(std::initializer_list<double> coords, VecRole role)
    : size_(coords.size()), role_(role) {
  check_size(size_);
  std::copy(coords.begin(), coords.end(), c_.begin());
}

LorentzVec::LorentzVec(std::span<const double> coords, VecRole role) : size_(coords.size()), role_(role) {
  check_size(size_);
  std::copy(coords.begin(), coords.end(), c_.begin());
}

LorentzVec LorentzVec::from_chart(std::span<const double> xyz) {
  std::array<double, 4> c{1.0, 0.0, 0.0, 0.0};
  if (xyz.size() != 2 && xyz.size() != 3) {
    throw std::invalid_argument("from_chart: expected 2 or 3 chart coordinates");
  }
  std::copy(xyz.begin(), xyz.end(), c.begin() + 1);
  return LorentzVec(std::span<const double>(c.data(), xyz.size() + 1));
}

std::array<double, 3> LorentzVec::chart() const {
  if (c_[0] == 0.0) {
    throw std::domain_error("chart coordinates of a point at infinity of the affine chart");
  }
  std::array<double, 3> out{};
  for (std::size_t i = 1; i < size_; ++i) out[i - 1] = c_[i] / c_[0];
  return out;
}

bool LorentzVec::is_zero() const {
  return std::all_of(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(size_),
                     [](double v) { return v == 0.0; });
}

LorentzVec LorentzVec::normalized() const {
  if (c_[0] == 0.0) {
    throw std::domain_error("cannot normalize a vector with x0 = 0");
  }
  return *this * (1.0 / c_[0]);
}

LorentzVec LorentzVec::as_covector() const {
  LorentzVec v = *this;
  v.role_ = VecRole::Covector;
  return v;
}

LorentzVec LorentzVec::as_point() const {
  LorentzVec v = *this;
  v.role_ = VecRole::Point;
  return v;
}

LorentzVec LorentzVec::operator+(const LorentzVec& o) const {
  check_same_dim(*this, o);
  LorentzVec r = *this;
  for (std::size_t i = 0; i < size_; ++i) r.c_[i] += o.c_[i];
  return r;
}

LorentzVec LorentzVec::operator-(const LorentzVec& o) const {
  check_same_dim(*this, o);
  LorentzVec r = *this;
  for (std::size_t i = 0; i < size_; ++i) r.c_[i] -= o.c_[i];
  return r;
}

LorentzVec LorentzVec::operator*(double k) const {
  LorentzVec r = *this;
  for (std::size_t i = 0; i < size_; ++i) r.c_[i] *= k;
  return r;
}

std::string LorentzVec::to_string() const {
  std::ostringstream os;
  os.precision(10);
  os << '(';
  for (std::size_t i = 0; i < size_; ++i) {
    if (i) os << ", ";
    os << c_[i];
  }
  os << ')';
  return os.str();
}

std::string to_string(PointClass c) {
  switch (c) {
    case PointClass::Proper: return "proper";
    case PointClass::Ideal: return "ideal";
    case PointClass::Outer: return "outer";
  }
  return "?";
}

double bilinear(const LorentzVec& x, const LorentzVec& y) {
  check_same_dim(x, y);
  double s = -x[0] * y[0];
  for (std::size_t i = 1; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

PointClass classify(const LorentzVec& x) {
  if (x.is_zero()) throw std::invalid_argument("classify: zero vector");
  LorentzVec v = x;
  if (x[0] != 0.0) {
    v = x.normalized();
  } else {
    // Points at infinity of the chart are outer; scale to unit max-norm so
    // the tolerance stays meaningful.
    double m = 0.0;
    for (double c : x.coords()) m = std::max(m, std::abs(c));
    v = x * (1.0 / m);
  }
  const double q = bilinear(v, v);
  if (q < -kClassifyEps) return PointClass::Proper;
  if (q > kClassifyEps) return PointClass::Outer;
  return PointClass::Ideal;
}

double distance(const LorentzVec& x, const LorentzVec& y) {
  check_same_dim(x, y);
  const double xx = bilinear(x, x);
  const double yy = bilinear(y, y);
  if (xx >= 0.0 || yy >= 0.0 || classify(x) != PointClass::Proper || classify(y) != PointClass::Proper) {
    throw std::domain_error("distance: both points must be proper");
  }
  // Same-sheet representatives give a negative product; the sign of the
  // homogeneous scale factor is irrelevant.
  double c = std::abs(bilinear(x, y)) / std::sqrt(xx * yy);
  if (c < 1.0) {
    if (c < 1.0 - kClampEps) {
      throw std::domain_error("distance: arccosh argument below 1 beyond round-off");
    }
    c = 1.0;
  }
  return std::acosh(c);
}

LorentzVec polar(const LorentzVec& x) {
  if (x.is_zero()) throw std::invalid_argument("polar: zero vector");
  // With the diagonal form the covector has the point's coordinates.
  return x.role() == VecRole::Point ? x.as_covector() : x.as_point();
}

double point_plane_distance(const LorentzVec& x, const LorentzVec& u) {
  check_same_dim(x, u);
  const double xx = bilinear(x, x);
  if (!(xx < 0.0) || classify(x) != PointClass::Proper) {
    throw std::domain_error("point_plane_distance: point must be proper");
  }
  const double uu = bilinear(u, u);
  if (!(uu > 0.0)) {
    throw std::domain_error("point_plane_distance: hyperplane does not meet the model");
  }
  return std::asinh(std::abs(bilinear(x, u)) / std::sqrt(-xx * uu));
}

LorentzVec hyperplane_through(std::span<const LorentzVec> points) {
  if (points.empty()) throw std::invalid_argument("hyperplane_through: no points");
  const std::size_t n = points.front().dim();
  if (points.size() != n) {
    throw std::invalid_argument("hyperplane_through: need exactly n points in dimension n");
  }
  for (const auto& p : points) check_same_dim(p, points.front());

  // Euclidean generalized cross product c (c . p_k = 0), then lower the
  // first index so that <u, p_k> = c . p_k.
  std::array<double, 4> c{};
  if (n == 2) {
    const auto& p = points[0];
    const auto& q = points[1];
    c[0] = p[1] * q[2] - p[2] * q[1];
    c[1] = p[2] * q[0] - p[0] * q[2];
    c[2] = p[0] * q[1] - p[1] * q[0];
  } else {
    const auto& a = points[0];
    const auto& b = points[1];
    const auto& d = points[2];
    c[0] = det3(a[1], a[2], a[3], b[1], b[2], b[3], d[1], d[2], d[3]);
    c[1] = -det3(a[0], a[2], a[3], b[0], b[2], b[3], d[0], d[2], d[3]);
    c[2] = det3(a[0], a[1], a[3], b[0], b[1], b[3], d[0], d[1], d[3]);
    c[3] = -det3(a[0], a[1], a[2], b[0], b[1], b[2], d[0], d[1], d[2]);
  }
  c[0] = -c[0];
  LorentzVec u(std::span<const double>(c.data(), n + 1), VecRole::Covector);
  if (u.is_zero()) throw std::domain_error("hyperplane_through: points are dependent");
  return u;
}

LorentzVec orient_outward(const LorentzVec& u, const LorentzVec& inside) {
  const double s = bilinear(u, inside);
  if (s == 0.0) throw std::domain_error("orient_outward: reference point lies on the hyperplane");
  // <u,inside> has the sign of the covector side; normalize inside so x0 > 0.
  const double sign = (inside[0] < 0.0) ? -1.0 : 1.0;
  return (s * sign < 0.0) ? u : -u;
}

double dihedral_angle(const LorentzVec& u, const LorentzVec& v) {
  const double uu = bilinear(u, u);
  const double vv = bilinear(v, v);
  if (!(uu > 0.0) || !(vv > 0.0)) {
    throw std::domain_error("dihedral_angle: hyperplanes must meet the model");
  }
  const double c = -bilinear(u, v) / std::sqrt(uu * vv);
  if (c >= 1.0) return 0.0;
  if (c <= -1.0) return std::numbers::pi;
  return std::acos(c);
}

}  // namespace orthocover
