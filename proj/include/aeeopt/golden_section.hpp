#pragma once

// Derivative-free maximizer for unimodal functions on a closed interval.
// Each iteration reuses one of the two interior probes and shrinks the
// bracket by the golden ratio, so reaching argument tolerance eps from an
// interval of width L takes ceil(log(L/eps) / log(1/0.618)) iterations.

#include <cmath>
#include <utility>

namespace aee {

struct GoldenSectionResult {
  double x;       // bracket midpoint after convergence
  double fx;      // objective at x
  int iterations;
};

inline constexpr double kInvPhi = 0.61803398874989484820;  // (sqrt(5)-1)/2

template <class F>
GoldenSectionResult golden_section_maximize(F&& f, double lo, double hi,
                                            double eps, int max_iter) {
  double a = lo, b = hi;
  double c = b - (b - a) * kInvPhi;
  double d = a + (b - a) * kInvPhi;
  double fc = f(c);
  double fd = f(d);
  int it = 0;
  while ((b - a) > eps && it < max_iter) {
    ++it;
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - (b - a) * kInvPhi;
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + (b - a) * kInvPhi;
      fd = f(d);
    }
  }
  const double x = 0.5 * (a + b);
  return {x, f(x), it};
}

}  // namespace aee
