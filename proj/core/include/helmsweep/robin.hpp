// SPDX-FileCopyrightText: 2026 The helmsweep authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "helmsweep/block_tridiag.hpp"
#include "helmsweep/decomposition.hpp"
#include "helmsweep/field.hpp"
#include "helmsweep/grid.hpp"
#include "helmsweep/stencil.hpp"
#include "helmsweep/sweep.hpp"

namespace helmsweep {

/// Double-sweep baseline with first-order Robin (impedance) transmission
/// conditions instead of absorbing-layer interfaces. Subdomain problems are
/// closed by ghost elimination of (d/dx -+ i k) u = d at the interface half
/// points; both sweeps share one factorization per subdomain.
///
/// The outer Krylov iteration always runs on the full grid: Robin coupling
/// spreads residuals beyond the interface columns, so no reduced system of
/// the sweep-preconditioner kind exists here.
class RobinContext {
public:
    /// m_overlap >= 0 extends each subdomain past its right interface; the
    /// interface data is sampled inside the neighbor's overlap columns.
    /// With m_overlap = 0 the missing trace column is synthesized from the
    /// neighbor's own homogeneous Robin relation.
    RobinContext(const Grid2D& grid, const Medium& medium, const DecompositionPlan& plan,
                 double r_target, int m_overlap);

    Field sweep_right(const Field& f) const;
    Field sweep_left(const Field& g) const;

    /// P f = v + w with v = sweep_right(f), w = sweep_left(f - A v).
    Field apply_preconditioner(const Field& f) const;

    SolveStats solve(const Field& f, double tol, int max_iter, Field& u) const;

    const Stencil& global_operator() const { return A_; }

private:
    struct Subdomain {
        int j = 0;
        int lo = 0; ///< region start column (inclusive)
        int hi = 0; ///< region end column (exclusive)
        int m = 0;
        BlockLU lu;
        // Ghost-elimination data per row l at the Robin surfaces;
        // empty when the corresponding end is an exterior layer.
        std::vector<cd> tp_left, tm_left;
        std::vector<cd> tp_right, tm_right;
    };

    Field local_solve(const Subdomain& s, Field rhs) const;

    Grid2D grid_;
    DecompositionPlan plan_;
    int m_ov_ = 1;
    double ghost_a_ = 0.0; ///< ghost-column coefficient, -1/h^2
    Stencil A_;
    std::vector<Subdomain> subs_;
    RealField kglob_; ///< k over the full grid, for interface impedances
};

} // namespace helmsweep
