#pragma once

#include <array>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>

namespace orthocover {

/// Classification tolerance on |<x,x>| for x normalized to x0 = 1.
inline constexpr double kClassifyEps = 1e-10;
/// Slack allowed below 1 for arccosh arguments before clamping.
inline constexpr double kClampEps = 1e-12;

enum class VecRole { Point, Covector };

/// Homogeneous vector of the Lorentz space of signature (1,n), n in {2,3}.
///
/// The same coordinates describe a projective point or, read as a covector,
/// a hyperplane {y : <u,y> = 0}. Coordinates are (x0, x1, ..., xn).
class LorentzVec {
 public:
  LorentzVec(std::initializer_list<double> coords, VecRole role = VecRole::Point);
  LorentzVec(std::span<const double> coords, VecRole role = VecRole::Point);

  /// Point with x0 = 1 and the given Euclidean chart coordinates.
  static LorentzVec from_chart(std::span<const double> xyz);

  std::size_t dim() const { return size_ - 1; }
  std::size_t size() const { return size_; }
  VecRole role() const { return role_; }
  double operator[](std::size_t i) const { return c_[i]; }
  std::span<const double> coords() const { return {c_.data(), size_}; }
  /// Euclidean chart coordinates (x1/x0, ..., xn/x0).
  std::array<double, 3> chart() const;

  bool is_zero() const;
  /// Canonical representative with x0 = 1. Throws std::domain_error if x0 == 0.
  LorentzVec normalized() const;
  LorentzVec as_covector() const;
  LorentzVec as_point() const;

  LorentzVec operator+(const LorentzVec& o) const;
  LorentzVec operator-(const LorentzVec& o) const;
  LorentzVec operator*(double k) const;
  LorentzVec operator-() const { return *this * -1.0; }

  std::string to_string() const;

 private:
  std::array<double, 4> c_{};
  std::size_t size_ = 0;
  VecRole role_ = VecRole::Point;
};

inline LorentzVec operator*(double k, const LorentzVec& v) { return v * k; }

enum class PointClass { Proper, Ideal, Outer };

std::string to_string(PointClass c);

/// <x,y> = -x0 y0 + x1 y1 + ... + xn yn. Throws on dimension mismatch.
double bilinear(const LorentzVec& x, const LorentzVec& y);

PointClass classify(const LorentzVec& x);

/// Hyperbolic distance between proper points (curvature -1).
double distance(const LorentzVec& x, const LorentzVec& y);

/// Polar hyperplane of x with respect to the absolute quadric.
LorentzVec polar(const LorentzVec& x);

/// Distance from a proper point to a hyperplane that meets the model:
/// sinh(d) = |<x,u>| / sqrt(-<x,x><u,u>).
double point_plane_distance(const LorentzVec& x, const LorentzVec& u);

/// Covector of the hyperplane spanned by n points of an n-dimensional model
/// (two points in the plane, three in space).
LorentzVec hyperplane_through(std::span<const LorentzVec> points);

/// Returns u or -u so that <u, inside> < 0, i.e. u is an outward normal of
/// the half-space containing `inside`.
LorentzVec orient_outward(const LorentzVec& u, const LorentzVec& inside);

/// Interior angle of the wedge cut out by two outward-oriented hyperplanes.
/// Returns 0 for parallel (asymptotic) hyperplanes.
double dihedral_angle(const LorentzVec& u, const LorentzVec& v);

}  // namespace orthocover
