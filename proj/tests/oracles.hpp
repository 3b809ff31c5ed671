#pragma once

// Test-only reference machinery: brute-force grid scans, a bisection solver
// for w*e^w = x, finite differences and a deterministic random-instance
// generator. Nothing here reuses the library's solver path, so these act as
// independent checks on it.

#include <aeeopt/model.hpp>
#include <aeeopt/units.hpp>

#include <cmath>
#include <functional>
#include <random>
#include <vector>

namespace aee::test {

struct GridMax {
  double x;
  double fx;
  double step;  // grid step at the argmax
};

template <class F>
GridMax grid_max_linear(F&& f, double lo, double hi, int n) {
  GridMax best{lo, f(lo), (hi - lo) / (n - 1)};
  for (int i = 1; i < n; ++i) {
    const double x = lo + (hi - lo) * i / (n - 1);
    const double fx = f(x);
    if (fx > best.fx) best = {x, fx, best.step};
  }
  return best;
}

template <class F>
GridMax grid_max_log(F&& f, double lo, double hi, int n) {
  const double llo = std::log10(lo), lhi = std::log10(hi);
  GridMax best{lo, f(lo), 0.0};
  for (int i = 0; i < n; ++i) {
    const double x = std::pow(10.0, llo + (lhi - llo) * i / (n - 1));
    const double fx = f(x);
    if (fx > best.fx) {
      const double ratio = std::pow(10.0, (lhi - llo) / (n - 1));
      best = {x, fx, x * (ratio - 1.0)};
    }
  }
  return best;
}

/// Bisection on w*e^w = x over w >= 0. Independent of the library's Halley
/// iteration.
inline double bisect_lambert_w(double x, int iters = 200) {
  if (x == 0.0) return 0.0;
  double lo = 0.0, hi = 1.0;
  while (hi * std::exp(hi) < x) hi *= 2.0;
  for (int i = 0; i < iters && (hi - lo) > 1e-16 * (1.0 + hi); ++i) {
    const double mid = 0.5 * (lo + hi);
    (mid * std::exp(mid) < x ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

inline double central_diff(const std::function<double(double)>& f, double x,
                           double h) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

/// Iteration budget for a golden-section run: smallest N with
/// width * 0.618^N <= eps.
inline int gs_iteration_bound(double width, double eps) {
  if (width <= eps) return 0;
  return static_cast<int>(
      std::ceil(std::log(width / eps) / std::log(1.0 / 0.618)));
}

inline double second_central_diff(const std::function<double(double)>& f,
                                  double x, double h) {
  return f(x + h) - 2.0 * f(x) + f(x - h);
}

/// Default low-power IoT instance used throughout the tests.
inline LinkGains default_gains() {
  return {db_to_linear({-60.0}), db_to_linear({-70.0}),
          db_to_linear({-70.0})};
}

inline SystemParams default_params() {
  return {dbm_to_watts({10.0}),  dbm_to_watts({-100.0}),
          dbm_to_watts({13.0}),  dbm_to_watts({13.0}),
          dbm_to_watts({-0.33}), dbm_to_watts({-0.33}),
          dbm_to_watts({-10.33}), 0.7};
}

struct Instance {
  LinkGains g;
  SystemParams p;
};

/// Deterministic random instances: gains -90..-50 dB, powers 0..20 dBm,
/// decoding cost -20..0 dBm per bps/Hz, nu in [0.1, 0.9], noise -100 dBm.
/// Redraws until at least one attack mode fits the power budget.
class InstanceGen {
 public:
  explicit InstanceGen(unsigned seed) : rng_(seed) {}

  Instance next() {
    for (;;) {
      Instance inst;
      inst.g = {db(-90.0, -50.0), db(-90.0, -50.0), db(-90.0, -50.0)};
      inst.p.p_s = dbm(0.0, 20.0);
      inst.p.sigma2 = dbm_to_watts({-100.0});
      inst.p.p_jm = dbm(0.0, 20.0);
      inst.p.p_m = dbm(0.0, 20.0);
      inst.p.p_fr = dbm(0.0, 20.0);
      inst.p.p_ft = dbm(0.0, 20.0);
      inst.p.rho_d = dbm(-20.0, 0.0);
      inst.p.nu = uniform(0.1, 0.9);
      if (inst.p.p_m >= std::min(inst.p.p_fr, inst.p.p_ft)) return inst;
    }
  }

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
  }

 private:
  double db(double lo, double hi) { return db_to_linear({uniform(lo, hi)}); }
  double dbm(double lo, double hi) { return dbm_to_watts({uniform(lo, hi)}); }

  std::mt19937_64 rng_;
};

}  // namespace aee::test
