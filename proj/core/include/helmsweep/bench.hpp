// SPDX-FileCopyrightText: 2026 The helmsweep authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "helmsweep/config.hpp"

namespace helmsweep {

struct BenchRow {
    int n_x = 0;
    int n_y = 0;
    double h = 0.0;
    double frequency = 0.0;
    int J = 0;
    int w_pml = 0;
    std::string method;
    int iterations = 0;
    double residual = 0.0;
    double seconds = 0.0;
    bool converged = false;
};

/// Constant and random medium suites at interior sizes 100^2, 200^2, 400^2
/// (plus 800^2 and 1600^2 when large is set), J = n/10, both methods.
std::vector<RunConfig> paper_tables_preset(bool large);

/// Runs every config; a failed run becomes a row with converged = false and
/// iterations = 0 instead of aborting the suite.
std::vector<BenchRow> run_bench(const std::vector<RunConfig>& suite);

std::string bench_csv(const std::vector<BenchRow>& rows);
std::vector<BenchRow> parse_bench_csv(const std::string& text);

} // namespace helmsweep
