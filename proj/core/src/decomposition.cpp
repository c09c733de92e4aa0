// SPDX-FileCopyrightText: 2026 The helmsweep authors
// SPDX-License-Identifier: Apache-2.0
#include "helmsweep/decomposition.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace helmsweep {

DecompositionPlan plan_decomposition(const Grid2D& grid, int J, int w_pml) {
    grid.validate();
    if (J < 1) throw std::invalid_argument("plan_decomposition: J < 1");
    if (w_pml < 0) throw std::invalid_argument("plan_decomposition: w_pml < 0");

    DecompositionPlan plan;
    plan.J = J;
    plan.n_x = grid.n_x;
    plan.w_ext = grid.w_ext;
    plan.w_pml = w_pml;

    plan.beta.resize(J + 1);
    plan.beta[0] = grid.w_ext;
    plan.beta[J] = grid.n_x - grid.w_ext;
    const double span = grid.n_x - 2.0 * grid.w_ext - 1.0;
    for (int j = 1; j < J; ++j) {
        double x = grid.w_ext + j * span / J;
        plan.beta[j] = static_cast<int>(std::floor(x + 0.5)); // half away from zero
    }
    plan.tbeta = plan.beta;
    for (int j = 1; j < J; ++j) plan.tbeta[j] = plan.beta[j] + 1;

    for (int j = 1; j <= J; ++j) {
        // both ownership partitions need >= 2 columns per strip
        if (plan.beta[j] - plan.beta[j - 1] < 2 || plan.tbeta[j] - plan.tbeta[j - 1] < 2)
            throw std::invalid_argument("plan_decomposition: core of subdomain " +
                                        std::to_string(j) + " is narrower than 2 columns");
    }

    plan.subs.resize(J);
    for (int j = 1; j <= J; ++j) {
        SubdomainExtent& s = plan.subs[j - 1];
        s.j = j;
        s.pad_left = (j == 1) ? 0 : w_pml;
        s.pad_right = (j == J) ? 0 : w_pml;
        s.grid_lo = (j == 1) ? 0 : plan.beta[j - 1] - w_pml;
        s.grid_hi = (j == J) ? grid.n_x : plan.tbeta[j] + w_pml;
        s.core_lo = (j == 1) ? 0 : plan.beta[j - 1];
        s.core_hi = (j == J) ? grid.n_x : plan.beta[j];
        s.tcore_lo = (j == 1) ? 0 : plan.tbeta[j - 1];
        s.tcore_hi = (j == J) ? grid.n_x : plan.tbeta[j];
        if (s.grid_lo < 0 || s.grid_hi > grid.n_x)
            throw std::invalid_argument("plan_decomposition: pads of subdomain " +
                                        std::to_string(j) + " reach past the grid");
    }
    return plan;
}

} // namespace helmsweep
