#include "orthocover/lobachevsky.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/zeta.hpp>

namespace orthocover {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::size_t kClausenTerms = 30;

// c_k = zeta(2k) / (k (2k+1) (2 pi)^(2k)), k = 1..kClausenTerms.
const std::array<double, kClausenTerms>& clausen_coefficients() {
  static const std::array<double, kClausenTerms> coeffs = [] {
    std::array<double, kClausenTerms> c{};
    const double two_pi_sq = 4.0 * kPi * kPi;
    double scale = 1.0;
    for (std::size_t k = 1; k <= kClausenTerms; ++k) {
      scale /= two_pi_sq;
      const double z = boost::math::zeta(2.0 * static_cast<double>(k));
      const double kd = static_cast<double>(k);
      c[k - 1] = z * scale / (kd * (2.0 * kd + 1.0));
    }
    return c;
  }();
  return coeffs;
}

// Power series for Cl2, used on |th| <= 3pi/4.
double clausen2_series(double th) {
  if (th == 0.0) return 0.0;
  const auto& c = clausen_coefficients();
  const double th2 = th * th;
  // Horner in th^2, highest order first.
  double acc = 0.0;
  for (std::size_t k = kClausenTerms; k-- > 0;) acc = acc * th2 + c[k];
  acc *= th2 * th;
  return th - th * std::log(std::abs(th)) + acc;
}

// Clausen function Cl2 on |th| <= pi. Near pi the series cancels terms of
// size pi, so that range goes through Cl2(2u) = 2 Cl2(u) - 2 Cl2(pi - u).
double clausen2(double th) {
  if (std::abs(th) <= kPi / 2) return clausen2_series(th);
  const double sign = th < 0.0 ? -1.0 : 1.0;
  const double u = 0.5 * std::abs(th);
  return sign * 2.0 * (clausen2_series(u) - clausen2_series(kPi - u));
}

// Reduce to (-pi/2, pi/2].
double reduce(double x) {
  double r = std::remainder(x, kPi);
  if (r <= -kPi / 2) r += kPi;
  return r;
}

// -int_0^x log|2 sin t| dt for 0 <= x <= pi/2.
double quad_half(double x) {
  if (x == 0.0) return 0.0;
  using boost::math::quadrature::gauss_kronrod;
  const auto smooth = [](double t) {
    if (t < 1e-4) {
      const double t2 = t * t;
      return -t2 / 6.0 - t2 * t2 / 180.0;  // log(sin t / t)
    }
    return std::log(std::sin(t) / t);
  };
  double err = 0.0;
  const double smooth_part = gauss_kronrod<double, 21>::integrate(smooth, 0.0, x, 15, 1e-15, &err);
  // int_0^x log(2t) dt = x log(2x) - x
  const double log_part = x * std::log(2.0 * x) - x;
  return -(log_part + smooth_part);
}

}  // namespace

std::string to_string(LobMethod m) {
  switch (m) {
    case LobMethod::Series: return "series";
    case LobMethod::Quadrature: return "quadrature";
    case LobMethod::Fourier: return "fourier";
  }
  return "?";
}

double lob(double x) {
  if (!std::isfinite(x)) throw std::domain_error("lob: non-finite argument");
  return 0.5 * clausen2(2.0 * reduce(x));
}

double lob_fourier(double x, std::size_t terms) {
  if (!std::isfinite(x)) throw std::domain_error("lob_fourier: non-finite argument");
  const double r = reduce(x);
  double sum = 0.0;
  for (std::size_t m = terms; m >= 1; --m) {
    const double md = static_cast<double>(m);
    sum += std::sin(2.0 * md * r) / (md * md);
  }
  return 0.5 * sum;
}

double lob_quadrature(double x) {
  if (!std::isfinite(x)) throw std::domain_error("lob_quadrature: non-finite argument");
  if (std::abs(x) > kPi) throw std::domain_error("lob_quadrature: |x| > pi, reduce first");
  const double sign = x < 0.0 ? -1.0 : 1.0;
  const double ax = std::abs(x);
  // Substituting t -> pi - t and using int_0^pi log(2 sin t) dt = 0.
  const double v = (ax <= kPi / 2) ? quad_half(ax) : -quad_half(kPi - ax);
  return sign * v;
}

LobEval evaluate_lob(double x, LobMethod method) {
  LobEval e;
  e.argument = x;
  e.method = method;
  switch (method) {
    case LobMethod::Series: e.value = lob(x); break;
    case LobMethod::Quadrature: e.value = lob_quadrature(x); break;
    case LobMethod::Fourier: e.value = lob_fourier(x, 1u << 20); break;
  }
  return e;
}

double lob_max() {
  static const double v = lob(kPi / 6.0);
  return v;
}

}  // namespace orthocover
