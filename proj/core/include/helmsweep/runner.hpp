// SPDX-FileCopyrightText: 2026 The helmsweep authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "helmsweep/config.hpp"
#include "helmsweep/field.hpp"
#include "helmsweep/grid.hpp"
#include "helmsweep/sweep.hpp"

namespace helmsweep {

struct RunOutcome {
    Grid2D grid;
    Field u;
    SolveStats stats;
    double setup_seconds = 0.0;
    double solve_seconds = 0.0;
};

Grid2D grid_from_config(const RunConfig& cfg);
Medium medium_from_config(const RunConfig& cfg, const Grid2D& grid);
Field source_from_config(const RunConfig& cfg, const Grid2D& grid);

/// Validates, builds the problem, runs the configured method and writes the
/// requested outputs. Throws ConfigError (or std::invalid_argument from the
/// geometry checks) for infeasible configurations.
RunOutcome run_solve(const RunConfig& cfg);

} // namespace helmsweep
