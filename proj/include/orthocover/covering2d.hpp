#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>

#include "orthocover/balls.hpp"
#include "orthocover/optimize.hpp"
#include "orthocover/orthoscheme.hpp"

namespace orthocover {

/// Type 1: the cycles meet on side A0P0. Type 2: they meet on side P0P1.
enum class Covering2DType { One = 1, Two = 2 };

/// Horocycle + hypercycle covering of the Lambert quadrilateral F_a.
///
/// t always parametrizes T = (1, t a, 1 - t a^2), the horocycle's point on
/// line A0P0; for type 2 T lies beyond P0 and the cycles meet at M on P0P1.
struct Covering2DConfig {
  Covering2DType type = Covering2DType::One;
  double a = 0.5;
  double t = 0.5;
  LambertDomain domain;
  Horoball horoball{2, 0.0};
  Hyperball hyperball;
  LorentzVec t_point{1.0, 0.0, 1.0};
  LorentzVec m{1.0, 0.0, 1.0};   ///< cycle intersection point
  LorentzVec s1{1.0, 0.0, 0.0};  ///< horocycle on A0A1
  LorentzVec s2{1.0, 0.0, 0.0};  ///< hypercycle on A0A1
  double vol_horoball = 0.0;
  double vol_hyperball = 0.0;
  double density = 0.0;
};

/// Upper end of the legal t range: 1 for type 1, 2 / (1 + 2a^2 - a^4) for type 2.
double t_upper_bound(Covering2DType type, double a);

/// Builds the configuration with the generic ball machinery (horocycle
/// through T, cycle intersection, piece volumes, area pi/2). Throws
/// std::invalid_argument for parameters out of range and std::domain_error
/// when M falls off the side required by the type.
Covering2DConfig build_covering2d(Covering2DType type, double a, double t);

/// Closed-form density of the type-1 covering.
double density_c1(double a, double t);
/// Closed-form density of the type-2 covering; the hypercycle height is the
/// length of M P1 with M from the horocycle equation on x = a.
double density_c2(double a, double t);
double density_closed_form(Covering2DType type, double a, double t);

struct Coverage2DReport {
  /// Sides A0A1, A1P1, P1P0, P0A0.
  std::array<bool, 4> sides{};
  std::optional<LorentzVec> witness;
  bool overall = false;
};

/// Samples every side of F_a at Chebyshev-Lobatto parameters and checks that
/// each point lies in the horocycle disc or the hypercycle strip (y >= 0).
Coverage2DReport verify_coverage_2d(const Covering2DConfig& cfg, std::size_t samples_per_side = 1000);

struct Optimum2D {
  double t = 0.0;
  double density = 0.0;
};

/// Minimizes the closed-form density over the legal t range, restricted to
/// configurations that cover F_a.
Optimum2D optimize2d(Covering2DType type, double a, const MinimizeOptions& options = {});

}  // namespace orthocover
