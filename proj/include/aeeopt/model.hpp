#pragma once

// Three-node link model: a source transmits to a legitimate receiver while a
// half-duplex attacker either taps the transmission (eavesdrop) or radiates
// interference (jam). Everything here is a pure closed-form function of the
// channel gains, the system parameters and the attacker's decision. All
// quantities are linear: watts, unitless gains, bps/Hz.

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace aee {

inline constexpr double kLn2 = 0.69314718055994530942;

/// Channel power gains of the source-user, source-attacker and
/// attacker-user links (unitless, linear scale).
struct LinkGains {
  double g_su;
  double g_sa;
  double g_au;
};

/// Source power, noise power and the attacker's power model, all in watts.
struct SystemParams {
  double p_s;     // source transmit power
  double sigma2;  // noise power at receiver and attacker
  double p_jm;    // maximum jamming power
  double p_m;     // attacker total power budget
  double p_fr;    // static consumption while receiving
  double p_ft;    // static consumption while transmitting
  double rho_d;   // decoding consumption per unit rate, W per bps/Hz
  double nu;      // power amplifier efficiency, (0, 1]
};

/// The attacker's decision triple: block fraction spent eavesdropping,
/// decoding rate while eavesdropping, transmit power while jamming.
struct AttackDecision {
  double alpha;  // in [0, 1]
  double r_a;    // bps/Hz, >= 0
  double p_j;    // W, >= 0
};

struct Snrs {
  double gamma_su;
  double gamma_sa;
  double gamma_au;
};

/// Link rates at zero jamming power.
struct RateSummary {
  double r_u;       // source-user rate, bps/Hz
  double r_a_max;   // source-attacker rate, bps/Hz (decoding rate cap)
  double gamma_su;
  double gamma_sa;
};

inline void validate(const LinkGains& g) {
  auto ok = [](double x) { return std::isfinite(x) && x > 0.0; };
  if (!ok(g.g_su) || !ok(g.g_sa) || !ok(g.g_au))
    throw std::invalid_argument("LinkGains: gains must be finite and positive");
}

inline void validate(const SystemParams& p) {
  auto pos = [](double x) { return std::isfinite(x) && x > 0.0; };
  auto nonneg = [](double x) { return std::isfinite(x) && x >= 0.0; };
  if (!pos(p.p_s) || !pos(p.sigma2) || !pos(p.p_jm) || !pos(p.p_m))
    throw std::invalid_argument("SystemParams: p_s, sigma2, p_jm, p_m must be positive");
  if (!nonneg(p.p_fr) || !nonneg(p.p_ft))
    throw std::invalid_argument("SystemParams: p_fr, p_ft must be >= 0");
  if (!pos(p.rho_d))
    throw std::invalid_argument("SystemParams: rho_d must be positive");
  if (!(p.nu > 0.0 && p.nu <= 1.0))
    throw std::invalid_argument("SystemParams: nu must be in (0, 1]");
}

inline void validate(const AttackDecision& d) {
  if (!(d.alpha >= 0.0 && d.alpha <= 1.0))
    throw std::invalid_argument("AttackDecision: alpha must be in [0, 1]");
  if (!(d.r_a >= 0.0) || !(d.p_j >= 0.0))
    throw std::invalid_argument("AttackDecision: r_a and p_j must be >= 0");
}

// log2(1+x) via log1p; keeps precision for the tiny-SNR tail.
inline double rate_of_snr(double snr) { return std::log1p(snr) / kLn2; }

inline Snrs snrs(const LinkGains& g, const SystemParams& p, double p_j) {
  return {p.p_s * g.g_su / p.sigma2, p.p_s * g.g_sa / p.sigma2,
          p_j * g.g_au / p.sigma2};
}

inline RateSummary rate_summary(const LinkGains& g, const SystemParams& p) {
  const Snrs s = snrs(g, p, 0.0);
  return {rate_of_snr(s.gamma_su), rate_of_snr(s.gamma_sa), s.gamma_su,
          s.gamma_sa};
}

/// Secrecy rate of the legitimate link while the attacker listens:
/// max(0, R_U - R_A).
inline double secrecy_rate_eaves(const LinkGains& g, const SystemParams& p) {
  const Snrs s = snrs(g, p, 0.0);
  return std::max(0.0, rate_of_snr(s.gamma_su) - rate_of_snr(s.gamma_sa));
}

/// Secrecy rate of the legitimate link under jamming power p_j:
/// log2(1 + gamma_su / (1 + gamma_au)).
inline double secrecy_rate_jam(const LinkGains& g, const SystemParams& p,
                               double p_j) {
  const Snrs s = snrs(g, p, p_j);
  return rate_of_snr(s.gamma_su / (1.0 + s.gamma_au));
}

/// Secrecy degradation achieved by eavesdropping: min(R_A, R_U).
inline double degraded_rate_eaves(const LinkGains& g, const SystemParams& p) {
  const Snrs s = snrs(g, p, 0.0);
  return std::min(rate_of_snr(s.gamma_sa), rate_of_snr(s.gamma_su));
}

/// Secrecy degradation achieved by jamming: R_U minus the jammed secrecy
/// rate. Evaluated as log2(1 + gamma_su*gamma_au / (1 + gamma_su + gamma_au)),
/// which is the same quantity without the cancellation.
inline double degraded_rate_jam(const LinkGains& g, const SystemParams& p,
                                double p_j) {
  const Snrs s = snrs(g, p, p_j);
  return rate_of_snr(s.gamma_su * s.gamma_au /
                     (1.0 + s.gamma_su + s.gamma_au));
}

/// Receive-mode consumption: static part plus rate-proportional decoding.
inline double consumption_eaves(const SystemParams& p, double r_a) {
  return p.p_fr + p.rho_d * r_a;
}

/// Transmit-mode consumption: static part plus amplifier draw.
inline double consumption_jam(const SystemParams& p, double p_j) {
  return p.p_ft + p_j / p.nu;
}

/// Attacker energy efficiency while eavesdropping at decoding rate r_a:
/// min(r_a, R_U) / (p_fr + rho_d * r_a). The numerator clamps at R_U, the
/// denominator charges for the raw decoding rate. Returns 0 when both the
/// static power and the rate are zero (the 0/0 corner).
inline double aee_eaves(const LinkGains& g, const SystemParams& p,
                        double r_a) {
  const double den = consumption_eaves(p, r_a);
  if (den == 0.0) return 0.0;
  const Snrs s = snrs(g, p, 0.0);
  return std::min(r_a, rate_of_snr(s.gamma_su)) / den;
}

/// Attacker energy efficiency while jamming at power p_j. Returns 0 when
/// both the static power and the jamming power are zero (limit is 0).
inline double aee_jam(const LinkGains& g, const SystemParams& p, double p_j) {
  const double den = consumption_jam(p, p_j);
  if (den == 0.0) return 0.0;
  return degraded_rate_jam(g, p, p_j) / den;
}

/// Mode-weighted consumption of a decision; the total power budget requires
/// weighted_consumption(p, d) <= p_m.
inline double weighted_consumption(const SystemParams& p,
                                   const AttackDecision& d) {
  return d.alpha * consumption_eaves(p, d.r_a) +
         (1.0 - d.alpha) * consumption_jam(p, d.p_j);
}

/// Combined attacker energy efficiency of a mixed decision: the ratio of the
/// mode-weighted secrecy degradation to the mode-weighted consumption.
/// Reduces to aee_eaves at alpha = 1 and to aee_jam at alpha = 0.
inline double aee_combined(const LinkGains& g, const SystemParams& p,
                           const AttackDecision& d) {
  const double den = weighted_consumption(p, d);
  if (den == 0.0)
    throw std::domain_error("aee_combined: zero weighted consumption");
  const Snrs s = snrs(g, p, 0.0);
  const double num =
      d.alpha * std::min(d.r_a, rate_of_snr(s.gamma_su)) +
      (1.0 - d.alpha) * degraded_rate_jam(g, p, d.p_j);
  return num / den;
}

}  // namespace aee
