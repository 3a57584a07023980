#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "orthocover/covering3d.hpp"
#include "orthocover/orthoscheme.hpp"

namespace orthocover {

inline constexpr std::uint64_t kDefaultSeed = 0x5eed'0c0f'fee1'2345ULL;
/// Samples are split over this many independent streams, whatever the
/// thread count, so estimates do not depend on the machine.
inline constexpr std::size_t kStreams = 64;

struct McEstimate {
  double value = 0.0;
  double std_error = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

/// Predicate on Euclidean chart coordinates (length = dimension).
using Membership = std::function<bool(std::span<const double>)>;

/// Axis-aligned sampling box. Points at chart radius >= clip_radius are
/// discarded so that the Klein weight stays bounded.
struct Box {
  std::vector<double> lo;
  std::vector<double> hi;
  double clip_radius = 1.0 - 1e-6;
};

/// Hull of the points inflated by `inflate`.
Box bounding_box(std::span<const LorentzVec> points, double inflate = 1e-6, double clip_radius = 1.0 - 1e-6);

/// Importance-weighted hit counting over the box with the Klein volume
/// element (1 - |x|^2)^(-(n+1)/2). Throws std::domain_error if the box
/// reaches the unit sphere and clip_radius does not cut it off.
McEstimate mc_volume(const Membership& region, const Box& box, std::size_t dim, std::uint64_t samples,
                     std::uint64_t seed);

/// Sampling cone at a (possibly ideal) apex: distance rho = radius U^(2/(n-1))
/// and a uniform direction within half_angle of the axis. Near an ideal apex
/// this density cancels the Klein weight, so the estimator has finite variance
/// where the box sampler does not.
struct Cone {
  std::vector<double> apex;
  std::vector<double> axis;  ///< unit
  double half_angle = 0.0;
  double radius = 0.0;
  double clip_radius = 1.0 - 1e-14;
};

/// Smallest cone at the apex (axis towards the centroid) that contains the points.
Cone cone_from_apex(const LorentzVec& apex, std::span<const LorentzVec> points, double margin = 1e-3);

McEstimate mc_volume_cone(const Membership& region, const Cone& cone, std::size_t dim, std::uint64_t samples,
                          std::uint64_t seed);

/// Interior of the truncated orthoscheme: five half-spaces built from the
/// chart coordinates of its vertices (boundary slack 1e-12).
Membership orthoscheme_membership(const TruncatedOrthoscheme& orth);
Membership lambert_membership(const LambertDomain& domain);
/// Triangle P0 P1 P2 in the plane z = 0, in 2D chart coordinates.
Membership base_triangle_membership(const TruncatedOrthoscheme& orth);
/// Horoball intersected with the trihedral cone at A0 over P0, A1, A2.
Membership horoball_piece_membership(const TruncatedOrthoscheme& orth, const BallPair& pair);
/// Hyperball intersected with the vertical prism over the base triangle, z >= 0.
Membership hyperball_piece_membership(const TruncatedOrthoscheme& orth, const BallPair& pair);

McEstimate mc_cell_volume(const TruncatedOrthoscheme& orth, std::uint64_t samples, std::uint64_t seed);
McEstimate mc_lambert_area(const LambertDomain& domain, std::uint64_t samples, std::uint64_t seed);
McEstimate mc_base_triangle_area(const TruncatedOrthoscheme& orth, std::uint64_t samples, std::uint64_t seed);
McEstimate mc_horoball_piece(const TruncatedOrthoscheme& orth, const BallPair& pair, std::uint64_t samples,
                             std::uint64_t seed);
McEstimate mc_hyperball_piece(const TruncatedOrthoscheme& orth, const BallPair& pair, std::uint64_t samples,
                              std::uint64_t seed);

struct OracleComparison {
  std::string name;
  double exact = 0.0;
  McEstimate estimate;
  /// |exact - estimate| in standard errors.
  double sigmas = 0.0;
  bool within(double k = 3.0) const { return sigmas <= k; }
};

OracleComparison compare(std::string name, double exact, const McEstimate& est);

/// Cell volume, Lambert area (a = 0.5), base triangle area and both piece
/// volumes at the given evaluation, each against its Monte Carlo estimate.
std::vector<OracleComparison> oracle_suite(const CoveringEvaluation& ev, std::uint64_t samples, std::uint64_t seed);

}  // namespace orthocover
