#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "orthocover/lorentz.hpp"

namespace orthocover {

/// Membership slack for horoball and hyperball tests.
inline constexpr double kMembershipEps = 1e-12;

/// Horoball centred at the ideal point T0 = (1, 0, ..., 0, 1) whose
/// horosphere passes through the axis point (1, 0, ..., 0, s).
struct Horoball {
  std::size_t dim = 3;
  double s = 0.0;

  LorentzVec center() const;
  LorentzVec axis_point() const;
};

/// Ball of points within distance h of the base hyperplane.
struct Hyperball {
  LorentzVec base = LorentzVec({0.0, 0.0, 0.0, 1.0}, VecRole::Covector);
  double h = 0.0;
};

/// Left-hand side of the horosphere equation
///   2 sum_{i<n} x_i^2 / (1-s) + 4 (x_n - (s+1)/2)^2 / (1-s)^2
/// at the normalized point x; equals 1 on the horosphere, < 1 inside.
double horosphere_lhs(const Horoball& b, const LorentzVec& x);

/// Round-off bound of horosphere_lhs at x. It grows like 1/w^2 for small
/// horoballs (w = 1 - s), where fixed slacks would reject surface points.
double horosphere_roundoff(const Horoball& b, const LorentzVec& x);

/// Membership with slack kMembershipEps plus the round-off bound.
bool contains(const Horoball& b, const LorentzVec& x);
/// Unsigned-distance membership; callers restrict to a half-space if needed.
bool contains(const Hyperball& b, const LorentzVec& x);

/// The unique horoball with centre T0 whose horosphere passes through the
/// point. Multiplying the horosphere equation by (1-s)^2 leaves a relation
/// that is linear in w = 1-s:  w = 2 (1-z)^2 / (2 (1-z) - rho^2).
Horoball horoball_through(const LorentzVec& point);

/// Hyperball over `base` whose boundary passes through the point.
Hyperball hyperball_through(const LorentzVec& base, const LorentzVec& point);

/// Parameters t in [0,1] where X(t) = (1-t) A + t B (on the x0 = 1 chart)
/// crosses the ball boundary, ascending; a tangency appears as a double root.
struct SegmentHits {
  std::vector<double> roots;
  bool whole_segment = false;  ///< boundary contains the whole segment
};

SegmentHits ball_segment_intersection(const Horoball& b, const LorentzVec& a, const LorentzVec& bpt);
SegmentHits ball_segment_intersection(const Hyperball& b, const LorentzVec& a, const LorentzVec& bpt);

/// Closed parameter interval of the segment lying inside the ball.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

std::optional<Interval> covered_interval(const Horoball& b, const LorentzVec& a, const LorentzVec& bpt);
std::optional<Interval> covered_interval(const Hyperball& b, const LorentzVec& a, const LorentzVec& bpt);

/// Point where the line from the centre through `through` leaves the
/// horosphere (second intersection besides the centre itself).
LorentzVec horosphere_ray_point(const Horoball& b, const LorentzVec& through);

/// Intrinsic (horospherical) distance 2 sinh(d/2) of two horosphere points at
/// hyperbolic distance d.
double intrinsic_chord_length(double d);

/// Plane horoball piece: horocyclic arc length between P and Q.
double horoball_piece_volume_2d(const Horoball& b, const LorentzVec& p, const LorentzVec& q);
/// Space horoball piece over the horospherical triangle S T Q: area / 2.
double horoball_piece_volume_3d(const Horoball& b, const LorentzVec& s, const LorentzVec& t, const LorentzVec& q);

/// Area of a Euclidean triangle from its sides (Kahan's stable Heron form).
/// Throws std::domain_error if the triangle inequality fails beyond 1e-12.
double heron_area(double a, double b, double c);

double hyperball_piece_volume_2d(double h, double base_length);
double hyperball_piece_volume_3d(double h, double base_area);

}  // namespace orthocover
