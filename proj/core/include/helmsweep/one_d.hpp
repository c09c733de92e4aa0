// SPDX-FileCopyrightText: 2026 The helmsweep authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "helmsweep/field.hpp"

namespace helmsweep {

/// Closed-form solution of -u'' - k^2 u = f on [x.front(), x.back()] with
/// radiation data h_left = (u' + iku) at the left end and
/// h_right = (-u' + iku) at the right end:
///   u(x) = (i/2k) int e^{ik|x-s|} f(s) ds
///        + h_left e^{ik(x-a)}/(2ik) + h_right e^{-ik(x-b)}/(2ik).
/// Integrals use the trapezoid rule on the given nodes, so discrete
/// identities between subdomain and whole-domain evaluations hold to
/// rounding precision.
std::vector<cd> solution_formula_1d(double k, const std::vector<double>& x,
                                    const std::vector<cd>& f, cd h_left, cd h_right);

enum class Schedule1D { Jacobi, DoubleSweep, Concurrent };

/// Domain split into J intervals by node indices bounds[0..J];
/// bounds[0] = 0 and bounds[J] = x.size()-1.
struct Sweep1DProblem {
    double k = 1.0;
    std::vector<double> x; ///< quadrature nodes, ascending
    std::vector<int> bounds;
    std::vector<cd> f;
    cd h_left{0.0};
    cd h_right{0.0};
};

struct Sweep1DResult {
    int steps = 0;
    std::vector<cd> composite;      ///< per-node field after the final step
    std::vector<double> sup_errors; ///< per step, against the whole-domain formula
};

/// Runs the chosen data-exchange schedule for n_steps steps (DoubleSweep
/// ignores n_steps: one forward and one backward pass). Subdomain solves
/// use the closed-form formula; interface data moves as outgoing radiation
/// traces, so Jacobi reproduces the whole-domain solution after exactly J
/// steps and DoubleSweep after its single pass.
Sweep1DResult sweep_1d(const Sweep1DProblem& prob, Schedule1D schedule, int n_steps);

/// Whole-domain formula truncated to [x[bounds[A]], x[bounds[B]]]: the field
/// subdomain j carries after n Jacobi steps, with A = max(0, j-n) and
/// B = min(J, j+n-1); boundary data enters once the window reaches an end.
std::vector<cd> truncated_formula_1d(const Sweep1DProblem& prob, int j, int n);

} // namespace helmsweep
