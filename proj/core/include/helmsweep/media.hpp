// SPDX-FileCopyrightText: 2026 The helmsweep authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "helmsweep/field.hpp"
#include "helmsweep/grid.hpp"

namespace helmsweep {

RealField constant_medium(const Grid2D& grid, double c0);

/// Uniform draws in [1 - a, 1 + a], filled row by row (y outer, x fastest)
/// from a SplitMix64 stream, then s passes of the 3x3 binomial kernel
/// (1 2 1; 2 4 2; 1 2 1)/16 with edge-clamped borders.
RealField random_medium(const Grid2D& grid, std::uint64_t seed, double amplitude, int passes);

/// Horizontal speed bands: speeds[b] applies to rows
/// interfaces[b-1] <= l < interfaces[b] (with virtual end sentinels).
/// Interface rows are 0-based and must be strictly increasing inside (0, n_y).
RealField layered_medium(const Grid2D& grid, const std::vector<double>& speeds,
                         const std::vector<int>& interfaces);

/// Unit point load scaled by 1/h^2 at the given 0-based grid node; the node
/// must lie inside the interior (outside the exterior layers).
Field build_point_source(const Grid2D& grid, int i, int l);

/// Center of an n_core-point interior that starts at column w_lo, 0-based;
/// for even n_core this is the upper of the two middle points.
int default_source_index(int w_lo, int n_core);

} // namespace helmsweep
