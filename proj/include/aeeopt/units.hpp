#pragma once

#include <cmath>
#include <stdexcept>

namespace aee {

/// Power ratio in decibels (10*log10 convention).
struct Decibel {
  double value;
};

/// Absolute power level in dBm (decibels relative to 1 mW).
struct DbmPower {
  double value;
};

/// 10^(x/10). Strictly positive for finite input.
inline double db_to_linear(Decibel x) {
  if (!std::isfinite(x.value))
    throw std::domain_error("db_to_linear: non-finite input");
  return std::pow(10.0, x.value / 10.0);
}

/// 10^((x-30)/10), i.e. dBm referenced to 1 mW, result in watts.
inline double dbm_to_watts(DbmPower x) {
  if (!std::isfinite(x.value))
    throw std::domain_error("dbm_to_watts: non-finite input");
  return std::pow(10.0, (x.value - 30.0) / 10.0);
}

/// Inverse of dbm_to_watts. Requires watts > 0.
inline DbmPower watts_to_dbm(double watts) {
  if (!(watts > 0.0))
    throw std::domain_error("watts_to_dbm: power must be positive");
  return DbmPower{30.0 + 10.0 * std::log10(watts)};
}

}  // namespace aee
