// SPDX-FileCopyrightText: 2026 The helmsweep authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "helmsweep/grid.hpp"

namespace helmsweep {

/// Column extents of one subdomain, 0-based half-open ranges on the full grid.
struct SubdomainExtent {
    int j = 0;           ///< 1-based subdomain index
    int grid_lo = 0;     ///< first column of the subdomain grid (pads included)
    int grid_hi = 0;     ///< one past the last column
    int core_lo = 0;     ///< first-sweep ownership range
    int core_hi = 0;
    int tcore_lo = 0;    ///< second-sweep (shifted) ownership range
    int tcore_hi = 0;
    int pad_left = 0;    ///< interior damping pad width on the left (0 for j=1)
    int pad_right = 0;   ///< interior damping pad width on the right (0 for j=J)

    int width() const { return grid_hi - grid_lo; }
};

/// Interface partition of the grid columns into J vertical strips.
/// beta[j] counts the columns left of interface j; beta[0] = w_ext and
/// beta[J] = n_x - w_ext frame the interior. tbeta is beta shifted by one
/// at interior interfaces so both sweeps reuse one subdomain grid.
struct DecompositionPlan {
    int J = 0;
    int n_x = 0;
    int w_ext = 0;
    int w_pml = 0;
    std::vector<int> beta;
    std::vector<int> tbeta;
    std::vector<SubdomainExtent> subs;
};

/// Places interfaces at beta[j] = round(w_ext + j (n_x - 2 w_ext - 1)/J),
/// rounding half away from zero, endpoints pinned to the interior frame.
/// Throws std::invalid_argument when a core would be thinner than 2 columns
/// or a pad would reach past the grid.
DecompositionPlan plan_decomposition(const Grid2D& grid, int J, int w_pml);

} // namespace helmsweep
