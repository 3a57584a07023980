#pragma once

#include <cstddef>
#include <functional>
#include <optional>

namespace orthocover {

/// Objective on a closed interval. `f` returns nullopt where the objective
/// is undefined; `valid`, when set, further restricts the admissible points.
struct Objective1D {
  std::function<std::optional<double>(double)> f;
  double lo = 0.0;
  double hi = 1.0;
  std::function<bool(double)> valid;
};

struct MinimizeOptions {
  std::size_t grid_points = 101;
  double tol = 1e-10;
  std::size_t max_iterations = 500;
};

struct Minimum1D {
  double x = 0.0;
  double value = 0.0;
  std::size_t evaluations = 0;
};

/// Grid scan over the domain, bracket around the best valid grid point, then
/// golden-section search until the bracket is shorter than `tol`. Invalid
/// points count as +inf; the returned point is the best valid point seen, so
/// it is never worse than any grid value. Throws std::runtime_error if no
/// grid point is valid.
Minimum1D minimize_1d(const Objective1D& objective, const MinimizeOptions& options = {});

struct Objective2D {
  std::function<std::optional<double>(double, double)> f;
  double x_lo = 0.0;
  double x_hi = 1.0;
  double y_lo = 0.0;
  double y_hi = 1.0;
};

struct Minimum2D {
  double x = 0.0;
  double y = 0.0;
  double value = 0.0;
};

/// Nested minimization: outer over x, inner over y at each outer point.
Minimum2D minimize_2d(const Objective2D& objective, const MinimizeOptions& outer = {},
                      const MinimizeOptions& inner = {});

}  // namespace orthocover
