#pragma once

#include <cstddef>
#include <string>

namespace orthocover {

enum class LobMethod { Series, Quadrature, Fourier };

std::string to_string(LobMethod m);

struct LobEval {
  double argument = 0.0;
  double value = 0.0;
  LobMethod method = LobMethod::Series;
};

/// Lobachevsky function  L(x) = -int_0^x log|2 sin t| dt.
///
/// Odd and pi-periodic. After reduction to (-pi/2, pi/2] it is evaluated as
/// Cl2(2x)/2 from the Bernoulli power series of the Clausen function
///   Cl2(th) = th - th log|th| + sum_k zeta(2k) th^(2k+1) / (k (2k+1) (2pi)^(2k)),
/// which converges geometrically (ratio <= 1/4) on |th| <= pi. For
/// |th| > pi/2 the duplication Cl2(2u) = 2 Cl2(u) - 2 Cl2(pi - u) avoids the
/// cancellation near pi. Absolute error is a few ulp on the reduced range.
double lob(double x);

/// Partial sum (1/2) sum_{m=1}^{terms} sin(2 m x) / m^2 of the Fourier series.
/// The truncation error decays like 1/terms (worse near multiples of pi), so
/// this is a cross-check path only.
double lob_fourier(double x, std::size_t terms);

/// Adaptive Gauss-Kronrod quadrature of the defining integral, |x| <= pi.
/// The logarithmic singularity at 0 is removed analytically by splitting
/// log|2 sin t| = log(2t) + log(sin t / t); the one at pi via L(x) = -L(pi - x).
/// Error below 1e-12.
double lob_quadrature(double x);

LobEval evaluate_lob(double x, LobMethod method = LobMethod::Series);

/// Maximum of L, attained at pi/6.
double lob_max();

}  // namespace orthocover
