// SPDX-FileCopyrightText: 2026 The helmsweep authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "helmsweep/field.hpp"
#include "helmsweep/grid.hpp"

namespace helmsweep {

/// Five-point operator with per-point complex coefficients,
///   (Au)(i,l) = cw u(i-1,l) + ce u(i+1,l) + cs u(i,l-1) + cn u(i,l+1) + cc u(i,l),
/// out-of-range neighbors read as zero.
struct Stencil {
    int nx = 0;
    int ny = 0;
    std::vector<cd> cc, cw, ce, cs, cn;

    void apply(const Field& u, Field& out) const;
    Field apply(const Field& u) const;
};

/// Rectangular (sub)grid description for assembly. Damping strengths are
/// derived per row/column from the speed at the grid's own edge, so a
/// subdomain built from an extended speed field reproduces the global
/// coefficients bit-exactly on shared columns.
struct StencilSpec {
    int nx = 0;
    int ny = 0;
    double h = 0.0;
    double omega = 0.0;
    const RealField* c = nullptr; ///< speeds on this grid, shape nx x ny
    AxisLayers xlay;              ///< x damping layers (widths; n must equal nx)
    AxisLayers ylay;              ///< y damping layers (n must equal ny)
    double r_target = 1e-2;
};

/// Assembles the damped Helmholtz coefficients
///   -alpha_x(x_i) d_x(alpha_x d_x u)/h^2 - alpha_y(y_l) d_y(alpha_y d_y u)/h^2 - k^2 u.
Stencil build_stencil(const StencilSpec& spec);

/// Operator over the full grid: exterior layers on both x sides and, for
/// YBoundary::Pml, both y sides; Dirichlet in y otherwise.
Stencil build_global_stencil(const Grid2D& grid, const Medium& medium, double r_target);

} // namespace helmsweep
