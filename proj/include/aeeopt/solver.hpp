#pragma once

// Jointly optimal attack strategy. The mixed problem decomposes exactly:
// the combined efficiency is a ratio of two functions affine in alpha, so
// its maximum sits at alpha = 0 or alpha = 1 and the two pure modes can be
// optimized independently and compared.
//
//   - eavesdropping: the efficiency is increasing in the decoding rate up
//     to R_U and decreasing beyond, so the optimum is the smallest of the
//     degradation cap min(R_A, R_U) and the budget rate (p_m - p_fr)/rho_d.
//   - jamming: the efficiency is a concave rate over a positive affine
//     consumption, hence pseudo-concave (unimodal) in the jamming power;
//     golden-section search on [0, min(p_jm, nu*(p_m - p_ft))] finds it.
//
// A mode whose static draw alone exceeds the budget is reported as
// infeasible with zero efficiency instead of raising, so the joint solve
// degrades to the other mode; only both-modes-infeasible raises.

#include <aeeopt/golden_section.hpp>
#include <aeeopt/lambert_w.hpp>
#include <aeeopt/model.hpp>

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

namespace aee {

/// Golden-section stopping rule: bracket width tolerance in watts plus a
/// safety cap far above the analytic iteration count.
struct GsConfig {
  double epsilon = 1e-9;
  int max_iter = 200;
};

enum class AttackMode { Eavesdrop, Jam };

inline const char* to_string(AttackMode m) {
  return m == AttackMode::Eavesdrop ? "eavesdrop" : "jam";
}

struct EavesSolve {
  double r_a_star = 0.0;  // bps/Hz
  double aee = 0.0;       // bps/Hz per W
  bool feasible = false;  // p_m >= p_fr
};

struct JamSolve {
  double p_j_star = 0.0;   // W
  double aee = 0.0;        // bps/Hz per W
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;  // min(p_jm, nu*(p_m - p_ft))
  int iterations = 0;
  bool feasible = false;    // p_m >= p_ft and bracket_hi > 0
};

struct SolveResult {
  AttackDecision decision;   // (1, r_a_star, 0) or (0, 0, p_j_star)
  AttackMode mode;
  double aee_eaves_opt;      // 0 when eavesdropping is infeasible
  double aee_jam_opt;        // 0 when jamming is infeasible
  double aee_joint;          // max of the two
  double r_a_star;
  JamSolve jam_diag;
};

class infeasible_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Best decoding rate for a pure eavesdropper:
/// min(degraded_rate_eaves, (p_m - p_fr) / rho_d).
/// Flagged infeasible (zero rate, zero efficiency) when p_m < p_fr.
inline EavesSolve optimal_eaves_rate(const LinkGains& g,
                                     const SystemParams& p) {
  if (p.p_m < p.p_fr) return {};
  const double r = std::min(degraded_rate_eaves(g, p),
                            (p.p_m - p.p_fr) / p.rho_d);
  return {r, aee_eaves(g, p, r), true};
}

/// Best jamming power for a pure jammer, by golden-section search over
/// [0, min(p_jm, nu*(p_m - p_ft))]. Flagged infeasible when the static
/// transmit draw exceeds the budget or the bracket is degenerate.
inline JamSolve optimal_jam_power(const LinkGains& g, const SystemParams& p,
                                  const GsConfig& cfg = {}) {
  const double hi = std::min(p.p_jm, p.nu * (p.p_m - p.p_ft));
  if (p.p_m < p.p_ft || !(hi > 0.0)) {
    JamSolve s;
    s.bracket_hi = std::max(hi, 0.0);
    return s;
  }
  const auto r = golden_section_maximize(
      [&](double p_j) { return aee_jam(g, p, p_j); }, 0.0, hi, cfg.epsilon,
      cfg.max_iter);
  return {r.x, r.fx, 0.0, hi, r.iterations, true};
}

/// Closed-form approximation of the optimal jamming power, valid in the
/// asymptotic regime gamma_su >> 1, gamma_au >> 1 and p_j >> p_ft:
///
///   p_s * g_su * W(e/gamma_su) / (g_au * (1 - W(e/gamma_su)))
///
/// Not clamped to the feasible bracket; diagnostic only, never used inside
/// solve_joint. Returns nullopt when gamma_su <= 1 (the expression's
/// denominator would not be positive there).
inline std::optional<double> approx_jam_power(const LinkGains& g,
                                              const SystemParams& p) {
  const double gamma_su = p.p_s * g.g_su / p.sigma2;
  if (gamma_su <= 1.0) return std::nullopt;
  const double w = lambert_w0(kE / gamma_su).w;
  return p.p_s * g.g_su * w / (g.g_au * (1.0 - w));
}

/// Mode choice from the two per-mode optima: eavesdrop on a strictly higher
/// eavesdropping efficiency, jam otherwise (ties jam).
inline double optimize_alpha(double aee_eaves_opt, double aee_jam_opt) {
  return aee_eaves_opt > aee_jam_opt ? 1.0 : 0.0;
}

inline SolveResult solve_joint(const LinkGains& g, const SystemParams& p,
                               const GsConfig& cfg = {}) {
  const EavesSolve e = optimal_eaves_rate(g, p);
  const JamSolve j = optimal_jam_power(g, p, cfg);

  // A degenerate jamming bracket with p_m >= p_ft still admits the silent
  // decision (0, 0, 0); it only wins when eavesdropping is unavailable.
  const bool jam_zero_ok = !(p.p_m < p.p_ft);

  AttackMode mode;
  if (e.feasible && j.feasible) {
    mode = optimize_alpha(e.aee, j.aee) == 1.0 ? AttackMode::Eavesdrop
                                               : AttackMode::Jam;
  } else if (e.feasible) {
    mode = AttackMode::Eavesdrop;
  } else if (jam_zero_ok) {
    mode = AttackMode::Jam;
  } else {
    std::ostringstream msg;
    msg << "solve_joint: power budget p_m=" << p.p_m
        << " W is below both static draws (p_fr=" << p.p_fr
        << " W, p_ft=" << p.p_ft << " W)";
    throw infeasible_error(msg.str());
  }

  SolveResult res;
  res.mode = mode;
  res.aee_eaves_opt = e.aee;
  res.aee_jam_opt = j.aee;
  res.aee_joint = std::max(e.aee, j.aee);
  res.r_a_star = e.r_a_star;
  res.jam_diag = j;
  res.decision = mode == AttackMode::Eavesdrop
                     ? AttackDecision{1.0, e.r_a_star, 0.0}
                     : AttackDecision{0.0, 0.0, j.p_j_star};
  return res;
}

}  // namespace aee
