// SPDX-FileCopyrightText: 2026 The helmsweep authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "helmsweep/field.hpp"
#include "helmsweep/grid.hpp"

namespace helmsweep {

/// Horizontal wavenumber of the outgoing discrete mode: i sqrt(k^2 - eta^2)
/// for propagating modes (|eta| < k), -sqrt(eta^2 - k^2) for evanescent
/// ones. The grazing case |eta| = k is rejected.
cd lambda_of(double eta, double k);

/// Independent solver for a constant-speed strip: Dirichlet in y, damping
/// layers in x. Expands the right-hand side in the discrete sine basis of
/// the y direction and solves one complex tridiagonal system per mode with
/// the exact x-direction layer coefficients. Throws when a mode's
/// elimination hits a near-resonant pivot, naming the mode.
Field oracle_strip_solve(const Grid2D& grid, const Medium& medium, const Field& f,
                         double r_target);

} // namespace helmsweep
