#pragma once

// Flat key = value config files in user-facing units (dBm, dB, fraction),
// converted once at ingestion to the linear quantities the math uses.

#include <aeeopt/model.hpp>
#include <aeeopt/units.hpp>

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace aee {

class config_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  LinkGains gains;
  SystemParams params;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' ||
                        s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

}  // namespace detail

/// Required keys (all of them, no defaults):
///   p_s_dbm, p_jm_dbm, p_m_dbm     source power / jamming cap / budget, dBm
///   g_su_db, g_sa_db, g_au_db      link gains, dB
///   sigma2_dbm                     noise power, dBm
///   nu                             amplifier efficiency, fraction in (0, 1]
///   p_ft_dbm, p_fr_dbm             static draws, dBm
///   rho_d_dbm_per_rate             decoding cost, dBm per bps/Hz
/// Unknown keys are rejected. Lines starting with '#' are comments.
inline RunConfig parse_config(std::istream& in) {
  std::map<std::string, double, std::less<>> kv;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view s{line};
    if (const auto hash = s.find('#'); hash != std::string_view::npos)
      s = s.substr(0, hash);  // inline comments
    s = detail::trim(s);
    if (s.empty()) continue;
    const auto eq = s.find('=');
    if (eq == std::string_view::npos)
      throw config_error("config line " + std::to_string(lineno) +
                         ": expected key = value");
    const std::string key{detail::trim(s.substr(0, eq))};
    const std::string_view val = detail::trim(s.substr(eq + 1));
    double x = 0.0;
    const auto [p, ec] = std::from_chars(val.data(), val.data() + val.size(), x);
    if (ec != std::errc{} || p != val.data() + val.size())
      throw config_error("config line " + std::to_string(lineno) +
                         ": bad numeric value for '" + key + "'");
    if (!kv.emplace(key, x).second)
      throw config_error("config: duplicate key '" + key + "'");
  }

  static constexpr const char* kKeys[] = {
      "p_s_dbm",  "p_jm_dbm", "p_m_dbm",  "g_su_db",
      "g_sa_db",  "g_au_db",  "sigma2_dbm", "nu",
      "p_ft_dbm", "p_fr_dbm", "rho_d_dbm_per_rate"};
  for (const auto& [key, _] : kv) {
    bool known = false;
    for (const char* k : kKeys) known |= (key == k);
    if (!known) throw config_error("config: unknown key '" + key + "'");
  }
  for (const char* k : kKeys)
    if (!kv.count(k))
      throw config_error(std::string("config: missing key '") + k + "'");

  RunConfig c;
  try {
    c.gains = {db_to_linear({kv["g_su_db"]}), db_to_linear({kv["g_sa_db"]}),
               db_to_linear({kv["g_au_db"]})};
    c.params = {dbm_to_watts({kv["p_s_dbm"]}),
                dbm_to_watts({kv["sigma2_dbm"]}),
                dbm_to_watts({kv["p_jm_dbm"]}),
                dbm_to_watts({kv["p_m_dbm"]}),
                dbm_to_watts({kv["p_fr_dbm"]}),
                dbm_to_watts({kv["p_ft_dbm"]}),
                dbm_to_watts({kv["rho_d_dbm_per_rate"]}),
                kv["nu"]};
    validate(c.gains);
    validate(c.params);
  } catch (const std::exception& e) {
    throw config_error(std::string("config: ") + e.what());
  }
  return c;
}

inline RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw config_error("config: cannot open '" + path + "'");
  return parse_config(in);
}

}  // namespace aee
