// SPDX-FileCopyrightText: 2026 The helmsweep authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <vector>

#include "helmsweep/field.hpp"

namespace helmsweep {

struct GmresResult {
    std::vector<cd> x;
    int iterations = 0; ///< operator applications performed
    bool converged = false;
    std::vector<double> residual_history; ///< relative residual after each iteration
};

/// Restart-free GMRES with zero initial guess, modified Gram-Schmidt
/// orthogonalization and complex Givens rotations. The inner product is
/// conjugate-linear in its first argument. A zero right-hand side returns
/// x = 0 after zero iterations; an exact Krylov breakdown is accepted as
/// convergence when the implied residual meets the tolerance.
GmresResult gmres(const std::function<std::vector<cd>(const std::vector<cd>&)>& apply,
                  const std::vector<cd>& b, double tol, int max_iter);

} // namespace helmsweep
