#pragma once

#include <array>
#include <string>

#include <Eigen/Dense>

#include "orthocover/lorentz.hpp"

namespace orthocover {

/// The (q,r) part of the Coxeter-Schlaefli symbol {p,q,r}. Only the three
/// families whose vertex figure at A0 is Euclidean are supported.
struct Family {
  int q = 3;
  int r = 6;

  friend bool operator==(const Family&, const Family&) = default;
};

inline constexpr std::array<Family, 3> kFamilies{{{3, 6}, {4, 4}, {6, 3}}};

bool is_supported(Family f);
/// Smallest integer p for which {p,q,r} exists: 7, 5, 4 for (3,6), (4,4), (6,3).
int existence_bound(Family f);
std::string to_string(Family f);
/// Parses "q,r".
Family parse_family(const std::string& text);

enum class TilingMode {
  Integer,  ///< integral p >= existence bound
  RealP     ///< family (3,6) with 6 < p < 7; cells do not tile space
};

struct SchlafliContext {
  double p = 0.0;
  Family family;
  TilingMode mode = TilingMode::Integer;
  Eigen::Matrix4d c;  ///< face Gram matrix, c_ii = 1, c_01 = -cos(pi/p), ...
  Eigen::Matrix4d h;  ///< vertex Gram matrix, inverse of c
};

/// Builds C and H and validates the degree-1 conditions (det C < 0, A3 outer,
/// A0 ideal, A1 and A2 proper). Throws std::invalid_argument for parameters
/// outside the existence bounds and std::domain_error when the signature
/// checks disagree with them.
SchlafliContext build_schlafli(double p, Family family, TilingMode mode = TilingMode::Integer);

/// Signature conditions only, without the integer existence bound.
bool signature_admissible(double p, Family family);

enum class Vertex { A0, A1, A2, P0, P1, P2 };

std::string to_string(Vertex v);

/// Simply truncated orthoscheme A0 A1 A2 P0 P1 P2 placed with P0 at the
/// model centre, the truncating plane pi = pol(A3) as z = 0 and A0 = (0,0,1).
struct TruncatedOrthoscheme {
  SchlafliContext ctx;
  double x = 0.0;
  double y = 0.0;
  double z1 = 0.0;
  double z2 = 0.0;
  LorentzVec a0{1.0, 0.0, 0.0, 1.0};
  LorentzVec a1{1.0, 0.0, 0.0, 0.0};
  LorentzVec a2{1.0, 0.0, 0.0, 0.0};
  LorentzVec p0{1.0, 0.0, 0.0, 0.0};
  LorentzVec p1{1.0, 0.0, 0.0, 0.0};
  LorentzVec p2{1.0, 0.0, 0.0, 0.0};
  double volume = 0.0;  ///< volume3(ctx), cached at construction

  const LorentzVec& vertex(Vertex v) const;
  /// Outer principal vertex A3, the point at infinity of the z axis.
  LorentzVec a3() const { return LorentzVec{0.0, 0.0, 0.0, 1.0}; }
  /// Truncating plane pi = pol(A3).
  LorentzVec base_plane() const { return polar(a3()); }
};

/// Solves the coordinate equations for x, y, z1, z2 in closed form
/// (each equation isolates one unknown) on the positive branch.
TruncatedOrthoscheme solve_coordinates(const SchlafliContext& ctx);

TruncatedOrthoscheme make_orthoscheme(double p, Family family, TilingMode mode = TilingMode::Integer);

/// Residuals of the four cosh-distance equations (P0P1, P0P2, A1P1, A2P2):
/// value computed from H minus value computed from the coordinates.
std::array<double, 4> coordinate_residuals(const TruncatedOrthoscheme& orth);

/// cosh of the pairwise distances of P0, P1, P2, A1, A2, either from H via
/// p_k = a_k h33 - a_3 h_k3 or from the model coordinates.
using ProperGram = std::array<std::array<double, 5>, 5>;
ProperGram proper_vertex_cosh_from_schlafli(const SchlafliContext& ctx);
ProperGram proper_vertex_cosh_from_coordinates(const TruncatedOrthoscheme& orth);

/// Outward face covectors of the orthoscheme, face k opposite A_k.
std::array<LorentzVec, 4> face_covectors(const TruncatedOrthoscheme& orth);

/// Volume of the frustum from the essential angles (Kellerhals' formula).
double kellerhals_volume(double alpha01, double alpha12, double alpha23);
double volume3(const SchlafliContext& ctx);

/// Angles of the base triangle P0 P1 P2 in pi, from the dihedral angles of
/// the three side faces of the prism. Order: P0, P1, P2.
std::array<double, 3> base_triangle_angles(const TruncatedOrthoscheme& orth);
/// Angle defect pi - (P0 + P1 + P2).
double base_triangle_area(const TruncatedOrthoscheme& orth);

/// Lambert quadrilateral A0 A1 P1 P0 of the plane tiling with parameter a.
struct LambertDomain {
  double a = 0.5;
  LorentzVec a0{1.0, 0.0, 1.0};
  LorentzVec a1{1.0, 0.0, 0.0};
  LorentzVec a2{1.0, 2.0, 0.0};
  LorentzVec p0{1.0, 0.5, 0.75};
  LorentzVec p1{1.0, 0.5, 0.0};

  /// Polar line of A2, carrying P0 and P1.
  LorentzVec truncating_line() const { return polar(a2); }
};

LambertDomain lambert_domain(double a);

/// Area of the Lambert quadrilateral: the constant pi/2.
double area2(const LambertDomain& domain);
/// Interior angles at A0, A1, P1, P0 computed from the side lines.
std::array<double, 4> lambert_angles(const LambertDomain& domain);
/// 2 pi minus the angle sum; must agree with area2.
double lambert_area_from_angles(const LambertDomain& domain);

}  // namespace orthocover
