// Command-line front end: single solves, parameter sweeps against the fixed
// reference scheme, and the reproduction datasets (figure ids 2a, 2b, 3, 4).
// All numeric output is CSV with shortest round-trip decimals; summaries go
// to stderr so the CSV stream stays clean.
//
// Exit codes: 0 success, 2 usage or config error, 3 infeasible instance.

#include <aeeopt/aeeopt.hpp>

#include <CLI11.hpp>

#include <array>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace {

using aee::csv::cell;

class OutputSink {
 public:
  explicit OutputSink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_)
        throw aee::config_error("cannot open output file '" + path + "'");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

std::string opt_cell(const std::optional<double>& v) {
  return v ? cell(*v) : std::string{};
}

void write_sweep_rows(aee::csv::Writer& w, aee::SweepParameter parameter,
                      const std::vector<aee::SweepRow>& rows) {
  for (const auto& r : rows)
    w.row({cell(aee::to_string(parameter)), cell(r.value),
           cell(r.aee_benchmark), cell(r.aee_eaves_opt), cell(r.aee_jam_opt),
           cell(r.aee_joint), opt_cell(r.gain_eaves_pct),
           opt_cell(r.gain_jam_pct), opt_cell(r.gain_joint_pct),
           r.mode ? aee::to_string(*r.mode) : "", cell(r.feasible ? 1 : 0)});
}

const std::vector<std::string> kSweepHeader = {
    "parameter",      "value",          "aee_benchmark", "aee_eaves_opt",
    "aee_jam_opt",    "aee_joint",      "gain_eaves_pct", "gain_jam_pct",
    "gain_joint_pct", "mode",           "feasible"};

aee::AverageGains mean_gains(const std::vector<aee::SweepRow>& rows) {
  aee::AverageGains m{0, 0, 0};
  int n = 0;
  for (const auto& r : rows) {
    if (!r.feasible) continue;
    m.eaves_pct += *r.gain_eaves_pct;
    m.jam_pct += *r.gain_jam_pct;
    m.joint_pct += *r.gain_joint_pct;
    ++n;
  }
  if (n) {
    m.eaves_pct /= n;
    m.jam_pct /= n;
    m.joint_pct /= n;
  }
  return m;
}

void print_sweep_summary(aee::SweepParameter parameter,
                         const std::vector<aee::SweepRow>& rows) {
  const auto m = mean_gains(rows);
  size_t feasible = 0;
  for (const auto& r : rows) feasible += r.feasible;
  std::cerr << aee::to_string(parameter) << ": mean gains eaves="
            << aee::csv::format_double(m.eaves_pct)
            << "% jam=" << aee::csv::format_double(m.jam_pct)
            << "% joint=" << aee::csv::format_double(m.joint_pct) << "% ("
            << feasible << " of " << rows.size() << " rows feasible)\n";
}

int cmd_solve(const aee::RunConfig& c, const aee::GsConfig& gs,
              OutputSink& out) {
  const aee::SolveResult s = aee::solve_joint(c.gains, c.params, gs);
  aee::csv::Writer w(out.stream());
  w.row({"alpha", "r_a_bps_hz", "p_j_w", "mode", "aee_eaves_opt",
         "aee_jam_opt", "aee_joint", "gs_iterations", "gs_bracket_lo_w",
         "gs_bracket_hi_w"});
  w.row({cell(s.decision.alpha), cell(s.decision.r_a), cell(s.decision.p_j),
         aee::to_string(s.mode), cell(s.aee_eaves_opt), cell(s.aee_jam_opt),
         cell(s.aee_joint), cell(s.jam_diag.iterations),
         cell(s.jam_diag.bracket_lo), cell(s.jam_diag.bracket_hi)});
  return 0;
}

int cmd_sweep(const aee::RunConfig& c, const aee::GsConfig& gs,
              const aee::SweepSpec& spec, OutputSink& out) {
  const auto rows = aee::run_sweep(c.gains, c.params, spec, gs);
  aee::csv::Writer w(out.stream());
  w.row(kSweepHeader);
  write_sweep_rows(w, spec.parameter, rows);
  print_sweep_summary(spec.parameter, rows);
  return 0;
}

int cmd_figure(const aee::RunConfig& c, const aee::GsConfig& gs,
               const std::string& id, OutputSink& out) {
  aee::csv::Writer w(out.stream());
  if (id == "2a") {
    std::vector<double> xs;
    for (int i = 0; i <= 120; ++i) xs.push_back(static_cast<double>(i));
    const std::array<aee::Fig2aCase, 4> cases{{
        {50.0, 100.0}, {150.0, 100.0}, {50.0, 40.0}, {150.0, 40.0}}};
    w.row({"p_fr_over_rho_d", "r_de", "p_m_over_rho_d", "r_a_star"});
    for (const auto& r : aee::fig2a_curves(xs, cases))
      w.row({cell(r.p_fr_over_rho), cell(r.r_de), cell(r.p_m_over_rho),
             cell(r.r_a_star)});
    return 0;
  }
  if (id == "2b") {
    std::vector<double> grid;
    const int n = 400;
    const double lo = 1e-6, hi = c.params.p_jm;
    for (int i = 0; i < n; ++i)
      grid.push_back(std::pow(
          10.0, std::log10(lo) + (std::log10(hi) - std::log10(lo)) * i /
                                     (n - 1)));
    const std::array<aee::Fig2bCase, 4> cases{{
        {-0.33, 10.0}, {10.0, 10.0}, {-0.33, 100.0}, {10.0, 100.0}}};
    w.row({"p_j_w", "p_ft_dbm", "g_su_over_g_au", "aee_jam", "p_j_star_w",
           "aee_star"});
    for (const auto& r : aee::fig2b_curves(c.gains, c.params, grid, cases, gs))
      w.row({cell(r.p_j), cell(r.p_ft_dbm), cell(r.ratio_g_su_g_au),
             cell(r.aee_jam), cell(r.p_j_star), cell(r.aee_star)});
    return 0;
  }
  if (id == "3") {
    w.row({"nu", "gain_ratio", "rho_d_switch_dbm_per_rate"});
    for (const auto& [nu, ratio] :
         std::array<std::pair<double, double>, 4>{{
             {0.1, 10.0}, {0.1, 100.0}, {0.7, 10.0}, {0.7, 100.0}}}) {
      aee::LinkGains g = c.gains;
      aee::SystemParams p = c.params;
      g.g_sa = g.g_su / ratio;
      g.g_au = g.g_su / ratio;
      p.nu = nu;
      const double th = aee::find_switch_threshold(g, p, -20.0, 0.0, gs);
      w.row({cell(nu), cell(ratio), cell(th)});
    }
    return 0;
  }
  // id == "4"
  std::map<aee::SweepParameter, std::vector<aee::SweepRow>> sweeps;
  w.row(kSweepHeader);
  for (auto parameter :
       {aee::SweepParameter::Nu, aee::SweepParameter::RhoD,
        aee::SweepParameter::PM, aee::SweepParameter::RatioGsuGsa,
        aee::SweepParameter::RatioGsuGau}) {
    auto rows =
        aee::run_sweep(c.gains, c.params, aee::default_sweep(parameter), gs);
    write_sweep_rows(w, parameter, rows);
    print_sweep_summary(parameter, rows);
    sweeps.emplace(parameter, std::move(rows));
  }
  const auto avg = aee::average_gains(sweeps);
  std::cerr << "average gains: eaves="
            << aee::csv::format_double(avg.eaves_pct)
            << "% jam=" << aee::csv::format_double(avg.jam_pct)
            << "% joint=" << aee::csv::format_double(avg.joint_pct) << "%\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Optimal energy-efficient attack strategies for a hybrid "
               "eavesdrop/jam attacker on a three-node wireless link"};
  app.require_subcommand(1);

  double epsilon = 1e-9;
  std::string out_path;
  app.add_option("--epsilon", epsilon,
                 "golden-section bracket tolerance in watts")
      ->check(CLI::PositiveNumber);
  app.add_option("--out", out_path, "write CSV output to this file");

  std::string config_path, parameter_name, figure_id;
  double lo = 0.0, hi = 0.0;
  int points = 0;

  auto* solve = app.add_subcommand("solve", "solve one instance");
  solve->fallthrough();
  solve->add_option("config", config_path)->required();

  auto* sweep = app.add_subcommand(
      "sweep", "sweep one parameter against the reference scheme");
  sweep->fallthrough();
  sweep->add_option("config", config_path)->required();
  sweep->add_option("parameter", parameter_name)->required();
  sweep->add_option("--lo", lo, "override sweep range start (natural unit)");
  sweep->add_option("--hi", hi, "override sweep range end (natural unit)");
  sweep->add_option("--points", points, "override sweep grid size");

  auto* figure =
      app.add_subcommand("figure", "emit a reproduction dataset");
  figure->fallthrough();
  figure->add_option("config", config_path)->required();
  figure->add_option("id", figure_id)
      ->required()
      ->check(CLI::IsMember({"2a", "2b", "3", "4"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    const aee::RunConfig c = aee::load_config(config_path);
    const aee::GsConfig gs{epsilon, 200};
    OutputSink out(out_path);
    if (solve->parsed()) return cmd_solve(c, gs, out);
    if (sweep->parsed()) {
      const auto parameter = aee::sweep_parameter_from_string(parameter_name);
      if (!parameter) {
        std::cerr << "error: unknown sweep parameter '" << parameter_name
                  << "'\n";
        return 2;
      }
      aee::SweepSpec spec = aee::default_sweep(*parameter);
      if (sweep->count("--lo")) spec.lo = lo;
      if (sweep->count("--hi")) spec.hi = hi;
      if (sweep->count("--points")) spec.points = points;
      return cmd_sweep(c, gs, spec, out);
    }
    return cmd_figure(c, gs, figure_id, out);
  } catch (const aee::config_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const aee::infeasible_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
