#pragma once

#include <aeeopt/config.hpp>
#include <aeeopt/csv.hpp>
#include <aeeopt/experiments.hpp>
#include <aeeopt/golden_section.hpp>
#include <aeeopt/lambert_w.hpp>
#include <aeeopt/model.hpp>
#include <aeeopt/solver.hpp>
#include <aeeopt/units.hpp>
