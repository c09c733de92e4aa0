// SPDX-FileCopyrightText: 2026 The helmsweep authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "helmsweep/block_tridiag.hpp"
#include "helmsweep/decomposition.hpp"
#include "helmsweep/field.hpp"
#include "helmsweep/grid.hpp"
#include "helmsweep/stencil.hpp"

namespace helmsweep {

/// Whether the outer Krylov iteration runs on the full grid or on the
/// interface columns only.
enum class SolveMode { Reduced, Full };

struct SolveStats {
    int iterations = 0;
    bool converged = false;
    double true_residual = 0.0; ///< ||f - A u||_2 / ||f||_2 on the full grid
    std::vector<double> residual_history;
};

/// Double-sweep preconditioner built from overlapping subdomain problems,
/// each closed with absorbing layers and factored once up front.
///
/// The two sweeps exchange data through two-column transmission sources at
/// the interfaces; the preconditioned operator therefore maps fields
/// supported on interface column pairs to fields supported there again,
/// which enables the reduced solve mode.
class SweepContext {
public:
    SweepContext(const Grid2D& grid, const Medium& medium, const DecompositionPlan& plan,
                 double r_target);

    /// Left-to-right pass; the result carries each subdomain's core columns.
    Field sweep_up(const Field& f) const;
    /// Right-to-left pass; the result carries the shifted core columns.
    Field sweep_down(const Field& g) const;

    /// P f = v + w with v = sweep_up(f), w = sweep_down(f - A v).
    Field apply_preconditioner(const Field& f) const;
    /// A P f, evaluated in residual form as f - (g - A w).
    Field apply_preconditioned_operator(const Field& f) const;

    /// Independent subdomain solves of the shifted-core restriction of f;
    /// the remainder f - A u~ is supported on the interface column pairs.
    Field presolve_interior(const Field& f) const;

    /// Interface trace layout: for each interior interface j = 1..J-1 the
    /// two columns beta_j and beta_j + 1, each as ny contiguous values.
    std::vector<cd> restrict_to_interfaces(const Field& x) const;
    Field prolong_from_interfaces(const std::vector<cd>& y) const;
    int interface_unknowns() const;

    SolveStats solve(const Field& f, double tol, int max_iter, SolveMode mode, Field& u) const;

    const Stencil& global_operator() const { return A_; }
    const DecompositionPlan& plan() const { return plan_; }
    const Grid2D& grid() const { return grid_; }

private:
    struct Subdomain {
        SubdomainExtent ext;
        int m = 0; ///< column count ext.grid_hi - ext.grid_lo
        BlockLU lu;
    };

    Field local_solve(const Subdomain& s, Field rhs) const;

    Grid2D grid_;
    DecompositionPlan plan_;
    Stencil A_;
    std::vector<Subdomain> subs_;
};

} // namespace helmsweep
