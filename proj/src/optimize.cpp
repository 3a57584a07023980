#include "orthocover/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace orthocover {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Tracker {
  const Objective1D& obj;
  Minimum1D best{0.0, kInf, 0};
  bool found = false;

  double operator()(double x) {
    ++best.evaluations;
    if (obj.valid && !obj.valid(x)) return kInf;
    const auto v = obj.f(x);
    if (!v || !std::isfinite(*v)) return kInf;
    if (!found || *v < best.value) {
      best.x = x;
      best.value = *v;
      found = true;
    }
    return *v;
  }
};

}  // namespace

Minimum1D minimize_1d(const Objective1D& objective, const MinimizeOptions& options) {
  if (!objective.f) throw std::invalid_argument("minimize_1d: empty objective");
  if (!(objective.hi >= objective.lo)) throw std::invalid_argument("minimize_1d: empty domain");
  const std::size_t n = std::max<std::size_t>(options.grid_points, 2);
  const double lo = objective.lo;
  const double hi = objective.hi;

  Tracker eval{objective};
  std::vector<double> xs(n);
  std::vector<double> fs(n);
  std::size_t best = n;
  for (std::size_t i = 0; i < n; ++i) {
    xs[i] = (i + 1 == n) ? hi : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    fs[i] = eval(xs[i]);
    if (std::isfinite(fs[i]) && (best == n || fs[i] < fs[best])) best = i;
  }
  if (best == n) throw std::runtime_error("minimize_1d: no valid point in the domain");

  double a = xs[best > 0 ? best - 1 : 0];
  double b = xs[best + 1 < n ? best + 1 : n - 1];

  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = eval(c);
  double fd = eval(d);
  for (std::size_t it = 0; it < options.max_iterations && (b - a) > options.tol; ++it) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = eval(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = eval(d);
    }
  }
  eval(0.5 * (a + b));
  return eval.best;
}

Minimum2D minimize_2d(const Objective2D& objective, const MinimizeOptions& outer, const MinimizeOptions& inner) {
  if (!objective.f) throw std::invalid_argument("minimize_2d: empty objective");
  const auto inner_min = [&](double x) {
    Objective1D o;
    o.f = [&](double y) { return objective.f(x, y); };
    o.lo = objective.y_lo;
    o.hi = objective.y_hi;
    return minimize_1d(o, inner);
  };

  Objective1D outer_obj;
  outer_obj.lo = objective.x_lo;
  outer_obj.hi = objective.x_hi;
  outer_obj.f = [&](double x) -> std::optional<double> {
    try {
      return inner_min(x).value;
    } catch (const std::runtime_error&) {
      return std::nullopt;
    }
  };
  const Minimum1D mx = minimize_1d(outer_obj, outer);
  const Minimum1D my = inner_min(mx.x);
  return {mx.x, my.x, my.value};
}

}  // namespace orthocover
