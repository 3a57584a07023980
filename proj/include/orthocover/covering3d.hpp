#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "orthocover/balls.hpp"
#include "orthocover/optimize.hpp"
#include "orthocover/orthoscheme.hpp"

namespace orthocover {

/// Edge of the truncated orthoscheme on which the horosphere and the
/// hypersphere meet. Only the last three admit a covering.
enum class CoveringCase { OnA0P0, OnA0A2, OnA1P1, OnA0A1, OnA1A2, OnA2P2 };

inline constexpr std::array<CoveringCase, 6> kAllCases{CoveringCase::OnA0P0, CoveringCase::OnA0A2,
                                                       CoveringCase::OnA1P1, CoveringCase::OnA0A1,
                                                       CoveringCase::OnA1A2, CoveringCase::OnA2P2};
inline constexpr std::array<CoveringCase, 3> kRealizableCases{CoveringCase::OnA0A1, CoveringCase::OnA1A2,
                                                              CoveringCase::OnA2P2};

bool is_realizable(CoveringCase c);
/// Short names a0p0, a0a2, a1p1, a0a1, a1a2, a2p2.
std::string to_string(CoveringCase c);
CoveringCase parse_case(const std::string& text);

enum class Edge { A0A1, A0A2, A1A2, A0P0, A1P1, A2P2, P0P1, P1P2, P2P0 };
inline constexpr std::array<Edge, 9> kAllEdges{Edge::A0A1, Edge::A0A2, Edge::A1A2, Edge::A0P0, Edge::A1P1,
                                               Edge::A2P2, Edge::P0P1, Edge::P1P2, Edge::P2P0};
std::string to_string(Edge e);
std::array<Vertex, 2> endpoints(Edge e);

/// Point (1-t) X + t Y for the edge X Y, in the listed endpoint order.
LorentzVec edge_point(const TruncatedOrthoscheme& orth, Edge e, double t);

/// Parametrized meeting point of the two spheres for any case:
///   a0p0: A0 + s (P0 - A0)   a0a2: A0 + s (A2 - A0)   a1p1: P1 + s (A1 - P1)
///   a0a1: A0 + s (A1 - A0)   a1a2: A1 + s (A2 - A1)   a2p2: P2 + s (A2 - P2)
LorentzVec any_case_point(const TruncatedOrthoscheme& orth, CoveringCase c, double param);
/// Same, restricted to realizable cases (throws std::invalid_argument otherwise).
LorentzVec case_point(const TruncatedOrthoscheme& orth, CoveringCase c, double param);

struct BallPair {
  Horoball horoball;
  Hyperball hyperball;
};

/// Horoball centred at A0 and hyperball over the truncating plane, both
/// through the point. Throws std::domain_error at A0 or below the plane.
BallPair balls_from_point(const TruncatedOrthoscheme& orth, const LorentzVec& point);

/// Membership in horoball or in the hyperball's upper half (z >= 0).
bool covered_by(const BallPair& pair, const LorentzVec& x);

struct EdgeStatus {
  Edge edge = Edge::A0A1;
  bool covered = false;
  std::optional<LorentzVec> witness;
  /// Parameter intervals covered by each ball, from the exact quadratic.
  std::optional<Interval> horo_interval;
  std::optional<Interval> hyper_interval;
};

struct StructuralCheck {
  std::string name;
  bool passed = false;
};

struct CoverageReport {
  std::array<EdgeStatus, 9> edges{};
  std::vector<StructuralCheck> structural;
  bool overall = false;
  bool structural_ok() const;
};

/// Samples every edge at Chebyshev-Lobatto parameters and, independently,
/// decides coverage from the exact covered intervals; the two must agree
/// (reported as a structural check).
CoverageReport verify_coverage(const TruncatedOrthoscheme& orth, const BallPair& pair,
                               std::size_t samples_per_edge = 257);

struct PieceVolumes {
  double horoball = 0.0;
  double hyperball = 0.0;
};

/// Horoball piece over the horospherical triangle cut by the rays A0P0,
/// A0A2, A0A1; hyperball piece over the base triangle.
PieceVolumes piece_volumes(const TruncatedOrthoscheme& orth, const BallPair& pair);

struct CoveringEvaluation {
  const TruncatedOrthoscheme* orth = nullptr;
  CoveringCase covering_case = CoveringCase::OnA1A2;
  double param = 0.0;
  LorentzVec point{1.0, 0.0, 0.0, 0.0};
  BallPair pair;
  PieceVolumes pieces;
  double cell_volume = 0.0;
  double density = 0.0;
  CoverageReport coverage;
  bool valid() const { return coverage.overall; }
};

/// Full evaluation for a realizable case. The record is returned even when
/// the balls fail to cover; check valid().
CoveringEvaluation density(const TruncatedOrthoscheme& orth, CoveringCase c, double param,
                           std::size_t samples_per_edge = 257);

struct CaseOptimum {
  double param = 0.0;
  double density = 0.0;
};

/// Minimizes the density over param in [0,1] restricted to covering
/// configurations. Throws std::runtime_error if none covers.
CaseOptimum optimize_case(const TruncatedOrthoscheme& orth, CoveringCase c, const MinimizeOptions& options = {});
CaseOptimum optimize_case(Family family, double p, CoveringCase c, TilingMode mode = TilingMode::Integer,
                          const MinimizeOptions& options = {});

struct RealPOptimum {
  double p = 0.0;
  double param = 0.0;
  double density = 0.0;
  double density_at_7 = 0.0;  ///< integer endpoint, for continuity
  bool locally_optimal_only = true;
  std::string note;
};

/// Nested minimization over p in (6,7) and the case parameter for the (3,6)
/// family. Cells with non-integral p do not tile space, so the result holds
/// only locally.
RealPOptimum optimize_real_p(CoveringCase c = CoveringCase::OnA1A2, double p_lo = 6.0 + 1e-3,
                             double p_hi = 7.0 - 1e-3);

struct Refutation {
  double param = 0.0;
  bool refuted = false;
  std::optional<Edge> edge;
  std::optional<LorentzVec> witness;
  /// Horoball's entry on the named edge lies above the hyperball's exit.
  bool ordering_gap = false;
  bool tangency = false;
};

struct RefutationReport {
  CoveringCase covering_case = CoveringCase::OnA0A2;
  std::vector<Refutation> items;
  bool all_refuted() const;
};

/// Shows for each grid parameter that the case cannot cover the cell.
/// a0a2 looks for witnesses on A1A2 or A0A1, a1p1 on A2P2 or A1A2; a0p0
/// checks that the spheres are tangent at the meeting point and that points
/// of the cell next to it lie in neither ball. Throws std::invalid_argument
/// for realizable cases.
RefutationReport refute_case(const TruncatedOrthoscheme& orth, CoveringCase c, const std::vector<double>& params);
/// Midpoint grid (i + 0.5) / n.
std::vector<double> midpoint_grid(std::size_t n);

}  // namespace orthocover
