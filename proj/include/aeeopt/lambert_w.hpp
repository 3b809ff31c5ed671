#pragma once

// Principal-branch Lambert W for nonnegative arguments, where the branch is
// single-valued and the iteration below is unconditionally stable. That is
// the whole domain this library needs (the closed-form jamming-power
// approximation evaluates W at e/gamma_su > 0).

#include <cmath>
#include <stdexcept>

namespace aee {

struct WResult {
  double w;
  int iterations;
  double residual;  // |w * e^w - x|
};

inline constexpr double kE = 2.71828182845904523536;

/// Solve w * e^w = x for x >= 0 to |w*e^w - x| <= 1e-12 * max(1, x).
///
/// Halley steps from a two-regime initial guess: the asymptotic
/// log(x) - log(log(x)) above e, the Pade-like x/(1+x) below. Both start on
/// the correct side for monotone convergence; the iteration cap only trips
/// on NaN-style pathologies.
inline WResult lambert_w0(double x) {
  if (!(x >= 0.0))
    throw std::domain_error("lambert_w0: argument must be >= 0");
  if (x == 0.0) return {0.0, 0, 0.0};

  constexpr int kMaxIter = 50;
  const double tol = 1e-12 * std::max(1.0, x);

  double w = (x > kE) ? std::log(x) - std::log(std::log(x)) : x / (1.0 + x);
  for (int it = 1; it <= kMaxIter; ++it) {
    const double ew = std::exp(w);
    const double f = w * ew - x;
    // Halley update; the denominator never vanishes for w >= 0.
    const double dw =
        f / (ew * (w + 1.0) - (w + 2.0) * f / (2.0 * w + 2.0));
    w -= dw;
    if (w < 0.0) w = 0.0;
    const double residual = std::abs(w * std::exp(w) - x);
    if (residual <= tol) return {w, it, residual};
  }
  throw std::runtime_error("lambert_w0: iteration cap exceeded");
}

}  // namespace aee
