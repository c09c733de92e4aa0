// SPDX-FileCopyrightText: 2026 The helmsweep authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <stdexcept>

#include "helmsweep/field.hpp"

namespace helmsweep {

enum class YBoundary { Pml, Dirichlet };

/// Full computational grid, exterior absorbing layers included.
struct Grid2D {
    int n_x = 0;       ///< columns, exterior layers included
    int n_y = 0;       ///< rows, exterior layers included when y_boundary == Pml
    double h = 0.0;    ///< uniform spacing, same in x and y
    int w_ext = 0;     ///< exterior layer width per side
    YBoundary y_boundary = YBoundary::Pml;

    void validate() const {
        if (n_x < 2 * w_ext + 3) throw std::invalid_argument("Grid2D: n_x < 2*w_ext + 3");
        if (n_y < 3) throw std::invalid_argument("Grid2D: n_y < 3");
        if (h <= 0) throw std::invalid_argument("Grid2D: h <= 0");
        if (w_ext < 0) throw std::invalid_argument("Grid2D: w_ext < 0");
    }
};

/// Wave speed over the full grid plus the angular frequency; k = omega / c.
struct Medium {
    double omega = 0.0;
    RealField c;

    double k(int i, int l) const { return omega / c(i, l); }
};

/// Absorbing-layer profile: sigma(depth) = sigma_max * depth^2 with
/// sigma_max chosen from a target normal-incidence reflection coefficient.
struct PmlSpec {
    int width = 4;
    double r_target = 1e-2;
};

/// sigma_max = 3 c_ref ln(1/R) / (2 L); R >= 1 disables the layer.
inline double sigma_max(double c_ref, double r_target, double L) {
    if (r_target >= 1.0 || L <= 0.0) return 0.0;
    return 3.0 * c_ref * std::log(1.0 / r_target) / (2.0 * L);
}

/// sigma at a given depth fraction of a layer.
inline double sigma_profile(double depth_fraction, double smax) {
    return smax * depth_fraction * depth_fraction;
}

/// Damping layers at both ends of one axis of an n-point (sub)grid.
/// Coordinates xi are 0-based grid indices; half points are xi +- 0.5.
/// Depth runs from 0 at the layer's inner half-face to 1 at the ghost face.
struct AxisLayers {
    int n = 0;
    int lw = 0;
    int rw = 0;

    double depth_left(double xi) const {
        if (lw <= 0) return 0.0;
        return std::max(0.0, ((lw - 0.5) - xi) / lw);
    }
    double depth_right(double xi) const {
        if (rw <= 0) return 0.0;
        return std::max(0.0, (xi - (n - rw - 0.5)) / rw);
    }
};

/// alpha(x) = 1 / (1 + i sigma(x)/omega); exactly 1 outside the layers.
inline cd alpha(double xi, const AxisLayers& lay, double smax_l, double smax_r, double omega) {
    double dl = lay.depth_left(xi);
    double dr = lay.depth_right(xi);
    double s = sigma_profile(dl, smax_l) + sigma_profile(dr, smax_r);
    if (s == 0.0) return cd(1.0, 0.0);
    return 1.0 / cd(1.0, s / omega);
}

} // namespace helmsweep
