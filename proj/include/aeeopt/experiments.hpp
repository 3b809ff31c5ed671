#pragma once

// Reproduction harness: parameter sweeps of the optimized strategies against
// a fixed reference scheme, the mode-switching threshold in the decoding
// cost, and the two strategy-profile datasets (optimal decoding rate vs the
// normalized static draw; jamming efficiency vs jamming power).

#include <aeeopt/model.hpp>
#include <aeeopt/solver.hpp>
#include <aeeopt/units.hpp>

#include <cmath>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace aee {

enum class SweepParameter { Nu, RhoD, PM, RatioGsuGsa, RatioGsuGau };

inline const char* to_string(SweepParameter p) {
  switch (p) {
    case SweepParameter::Nu: return "nu";
    case SweepParameter::RhoD: return "rho_d";
    case SweepParameter::PM: return "p_m";
    case SweepParameter::RatioGsuGsa: return "ratio_g_su_g_sa";
    case SweepParameter::RatioGsuGau: return "ratio_g_su_g_au";
  }
  return "?";
}

inline std::optional<SweepParameter> sweep_parameter_from_string(
    const std::string& s) {
  for (auto p : {SweepParameter::Nu, SweepParameter::RhoD, SweepParameter::PM,
                 SweepParameter::RatioGsuGsa, SweepParameter::RatioGsuGau})
    if (s == to_string(p)) return p;
  return std::nullopt;
}

/// Grid over one parameter, expressed in its natural unit: percent for nu,
/// dBm per bps/Hz for rho_d, dBm for p_m, a linear ratio for the two gain
/// ratios.
struct SweepSpec {
  enum class Scale { Linear, Log };
  SweepParameter parameter;
  double lo;
  double hi;
  int points;
  Scale scale;
};

/// Grid densities chosen so the two-stage gain averages are stable to under
/// a percentage point when the density is doubled.
inline SweepSpec default_sweep(SweepParameter p) {
  switch (p) {
    case SweepParameter::Nu:
      return {p, 10.0, 90.0, 17, SweepSpec::Scale::Linear};
    case SweepParameter::RhoD:
      return {p, -20.0, 0.0, 41, SweepSpec::Scale::Linear};
    case SweepParameter::PM:
      return {p, 0.0, 13.0, 27, SweepSpec::Scale::Linear};
    case SweepParameter::RatioGsuGsa:
    case SweepParameter::RatioGsuGau:
      return {p, 1.0, 1000.0, 31, SweepSpec::Scale::Log};
  }
  throw std::logic_error("default_sweep: bad parameter");
}

inline std::vector<double> sweep_grid(const SweepSpec& spec) {
  if (!(spec.lo < spec.hi) || spec.points < 2)
    throw std::invalid_argument("sweep_grid: need lo < hi and points >= 2");
  std::vector<double> xs(spec.points);
  if (spec.scale == SweepSpec::Scale::Log) {
    if (!(spec.lo > 0.0))
      throw std::invalid_argument("sweep_grid: log scale needs lo > 0");
    const double llo = std::log10(spec.lo), lhi = std::log10(spec.hi);
    for (int i = 0; i < spec.points; ++i)
      xs[i] = std::pow(10.0, llo + (lhi - llo) * i / (spec.points - 1));
  } else {
    for (int i = 0; i < spec.points; ++i)
      xs[i] = spec.lo + (spec.hi - spec.lo) * i / (spec.points - 1);
  }
  return xs;
}

/// Rewrite (gains, params) with one swept parameter set to `value` (natural
/// unit). Ratio sweeps hold g_su fixed and scale the other gain down.
inline void apply_sweep_value(SweepParameter parameter, double value,
                              LinkGains& g, SystemParams& p) {
  switch (parameter) {
    case SweepParameter::Nu: p.nu = value / 100.0; break;
    case SweepParameter::RhoD: p.rho_d = dbm_to_watts({value}); break;
    case SweepParameter::PM: p.p_m = dbm_to_watts({value}); break;
    case SweepParameter::RatioGsuGsa: g.g_sa = g.g_su / value; break;
    case SweepParameter::RatioGsuGau: g.g_au = g.g_su / value; break;
  }
}

/// Fixed reference scheme: half the block eavesdropping at the largest
/// feasible decoding rate, half jamming at 0 dBm.
struct BenchmarkResult {
  AttackDecision decision;
  double aee = 0.0;
  bool feasible = false;  // decision satisfies the power budget
};

inline BenchmarkResult benchmark_aee(const LinkGains& g,
                                     const SystemParams& p) {
  BenchmarkResult b;
  const double p_j = dbm_to_watts({0.0});
  double r_a = std::min(rate_summary(g, p).r_a_max,
                        (p.p_m - p.p_fr) / p.rho_d);
  bool ok = true;
  if (r_a < 0.0) {  // no decoding budget at all
    r_a = 0.0;
    ok = false;
  }
  b.decision = {0.5, r_a, p_j};
  if (weighted_consumption(p, b.decision) > p.p_m) ok = false;
  b.aee = aee_combined(g, p, b.decision);
  b.feasible = ok;
  return b;
}

struct SweepRow {
  double value = 0.0;  // swept parameter value, natural unit
  double aee_benchmark = 0.0;
  double aee_eaves_opt = 0.0;
  double aee_jam_opt = 0.0;
  double aee_joint = 0.0;
  std::optional<double> gain_eaves_pct;  // set when the benchmark is feasible
  std::optional<double> gain_jam_pct;
  std::optional<double> gain_joint_pct;
  std::optional<AttackMode> mode;
  bool feasible = false;  // benchmark feasible and joint solve succeeded
};

/// One row per grid point. Row infeasibility (benchmark over budget, or no
/// feasible mode at all) is flagged, never fatal.
inline std::vector<SweepRow> run_sweep(const LinkGains& base_g,
                                       const SystemParams& base_p,
                                       const SweepSpec& spec,
                                       const GsConfig& cfg = {}) {
  std::vector<SweepRow> rows;
  for (double x : sweep_grid(spec)) {
    LinkGains g = base_g;
    SystemParams p = base_p;
    apply_sweep_value(spec.parameter, x, g, p);
    SweepRow row;
    row.value = x;
    const BenchmarkResult bench = benchmark_aee(g, p);
    row.aee_benchmark = bench.aee;
    try {
      const SolveResult s = solve_joint(g, p, cfg);
      row.aee_eaves_opt = s.aee_eaves_opt;
      row.aee_jam_opt = s.aee_jam_opt;
      row.aee_joint = s.aee_joint;
      row.mode = s.mode;
      if (bench.feasible && bench.aee > 0.0) {
        const auto gain = [&](double v) {
          return 100.0 * (v - bench.aee) / bench.aee;
        };
        row.gain_eaves_pct = gain(s.aee_eaves_opt);
        row.gain_jam_pct = gain(s.aee_jam_opt);
        row.gain_joint_pct = gain(s.aee_joint);
        row.feasible = true;
      }
    } catch (const infeasible_error&) {
      // leave the row flagged
    }
    rows.push_back(row);
  }
  return rows;
}

struct AverageGains {
  double eaves_pct;
  double jam_pct;
  double joint_pct;
};

/// Two-stage average: mean gain over each parameter's feasible rows, then
/// the equal-weight mean of those per-parameter means.
inline AverageGains average_gains(
    const std::map<SweepParameter, std::vector<SweepRow>>& sweeps) {
  if (sweeps.empty()) throw std::invalid_argument("average_gains: no sweeps");
  AverageGains total{0.0, 0.0, 0.0};
  for (const auto& [parameter, rows] : sweeps) {
    AverageGains m{0.0, 0.0, 0.0};
    int n = 0;
    for (const SweepRow& r : rows) {
      if (!r.feasible) continue;
      m.eaves_pct += *r.gain_eaves_pct;
      m.jam_pct += *r.gain_jam_pct;
      m.joint_pct += *r.gain_joint_pct;
      ++n;
    }
    if (n == 0)
      throw std::runtime_error(std::string("average_gains: no feasible rows "
                                           "for parameter ") +
                               to_string(parameter));
    total.eaves_pct += m.eaves_pct / n;
    total.jam_pct += m.jam_pct / n;
    total.joint_pct += m.joint_pct / n;
  }
  const double k = static_cast<double>(sweeps.size());
  return {total.eaves_pct / k, total.jam_pct / k, total.joint_pct / k};
}

/// Decoding cost (dBm per bps/Hz) at which the optimal mode flips from
/// eavesdropping to jamming, found by bisection to 0.01 dB. The mode must
/// differ at the two endpoints.
inline double find_switch_threshold(const LinkGains& g, const SystemParams& p,
                                    double rho_d_lo_dbm, double rho_d_hi_dbm,
                                    const GsConfig& cfg = {}) {
  const auto mode_at = [&](double rho_dbm) {
    SystemParams q = p;
    q.rho_d = dbm_to_watts({rho_dbm});
    return solve_joint(g, q, cfg).mode;
  };
  double lo = rho_d_lo_dbm, hi = rho_d_hi_dbm;
  const AttackMode lo_mode = mode_at(lo);
  if (lo_mode == mode_at(hi))
    throw std::runtime_error(
        "find_switch_threshold: mode does not change over the given range");
  while (hi - lo > 0.01) {
    const double mid = 0.5 * (lo + hi);
    (mode_at(mid) == lo_mode ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

// --- strategy-profile datasets -------------------------------------------

/// Optimal decoding rate against the normalized static receive draw
/// p_fr/rho_d, one curve per (degradation cap, normalized budget) case.
/// Everything is in bps/Hz, so the curve is closed-form:
/// r* = clamp(min(r_de, p_m_over_rho - x), 0).
struct Fig2aCase {
  double r_de;           // degradation cap, bps/Hz
  double p_m_over_rho;   // budget / decoding cost, bps/Hz
};

struct Fig2aRow {
  double p_fr_over_rho;  // bps/Hz
  double r_de;
  double p_m_over_rho;
  double r_a_star;
};

inline std::vector<Fig2aRow> fig2a_curves(std::span<const double> x_grid,
                                          std::span<const Fig2aCase> cases) {
  std::vector<Fig2aRow> rows;
  rows.reserve(x_grid.size() * cases.size());
  for (const Fig2aCase& c : cases)
    for (double x : x_grid)
      rows.push_back(
          {x, c.r_de, c.p_m_over_rho,
           std::max(0.0, std::min(c.r_de, c.p_m_over_rho - x))});
  return rows;
}

/// Jamming efficiency sampled over a jamming-power grid, one curve per
/// (static transmit draw, g_su/g_au ratio) case; g_su stays fixed and g_au
/// is scaled down. Each row carries the curve's golden-section optimum so
/// the sampled peak can be checked against it.
struct Fig2bCase {
  double p_ft_dbm;
  double ratio_g_su_g_au;
};

struct Fig2bRow {
  double p_j;
  double p_ft_dbm;
  double ratio_g_su_g_au;
  double aee_jam;
  double p_j_star;    // golden-section optimum for this curve
  double aee_star;
};

inline std::vector<Fig2bRow> fig2b_curves(const LinkGains& base_g,
                                          const SystemParams& base_p,
                                          std::span<const double> p_j_grid,
                                          std::span<const Fig2bCase> cases,
                                          const GsConfig& cfg = {}) {
  std::vector<Fig2bRow> rows;
  rows.reserve(p_j_grid.size() * cases.size());
  for (const Fig2bCase& c : cases) {
    LinkGains g = base_g;
    SystemParams p = base_p;
    g.g_au = g.g_su / c.ratio_g_su_g_au;
    p.p_ft = dbm_to_watts({c.p_ft_dbm});
    const JamSolve best = optimal_jam_power(g, p, cfg);
    for (double p_j : p_j_grid)
      rows.push_back({p_j, c.p_ft_dbm, c.ratio_g_su_g_au, aee_jam(g, p, p_j),
                      best.p_j_star, best.aee});
  }
  return rows;
}

}  // namespace aee
