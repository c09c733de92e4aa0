// SPDX-FileCopyrightText: 2026 The helmsweep authors
// SPDX-License-Identifier: Apache-2.0

#include "helmsweep/strip.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "helmsweep/stencil.hpp"

namespace helmsweep {

cd lambda_of(double eta, double k) {
    const double ae = std::abs(eta);
    if (ae == k) throw std::invalid_argument("lambda_of: grazing mode |eta| == k");
    if (ae < k) return cd(0.0, std::sqrt(k * k - eta * eta));
    return cd(-std::sqrt(eta * eta - k * k), 0.0);
}

Field oracle_strip_solve(const Grid2D& grid, const Medium& medium, const Field& f,
                         double r_target) {
    grid.validate();
    if (grid.y_boundary != YBoundary::Dirichlet)
        throw std::invalid_argument("strip oracle: requires Dirichlet y boundaries");
    require_shape(medium.c, grid.n_x, grid.n_y, "strip oracle medium");
    require_shape(f, grid.n_x, grid.n_y, "strip oracle rhs");
    const double c0 = medium.c(0, 0);
    for (const double cv : medium.c.a)
        if (cv != c0) throw std::invalid_argument("strip oracle: speed must be constant");

    const int nx = grid.n_x;
    const int ny = grid.n_y;
    const double h = grid.h;

    // x-direction coefficients including the layers; constant speed makes
    // them row independent, so reuse the assembled operator's first row and
    // strip the y part off the diagonal (ayc = 1 without y layers).
    const Stencil A = build_global_stencil(grid, medium, r_target);
    std::vector<cd> cw(static_cast<std::size_t>(nx)), ce(static_cast<std::size_t>(nx)),
        cx(static_cast<std::size_t>(nx));
    const double inv_h2 = 1.0 / (h * h);
    for (int i = 0; i < nx; ++i) {
        cw[static_cast<std::size_t>(i)] = A.cw[static_cast<std::size_t>(i)];
        ce[static_cast<std::size_t>(i)] = A.ce[static_cast<std::size_t>(i)];
        cx[static_cast<std::size_t>(i)] = A.cc[static_cast<std::size_t>(i)] - 2.0 * inv_h2;
    }

    // Discrete sine transform in y: s_m(l) = sin(pi m (l+1) / (ny+1)),
    // eigenvalue of the 1-D Dirichlet Laplacian mu_m = 4 sin^2(..)/h^2.
    const int M = ny;
    Field u(nx, ny);
    std::vector<cd> fhat(static_cast<std::size_t>(nx));
    std::vector<cd> diag(static_cast<std::size_t>(nx));
    std::vector<cd> rhs(static_cast<std::size_t>(nx));
    std::vector<double> sine(static_cast<std::size_t>(ny));
    for (int m = 1; m <= M; ++m) {
        const double arg = M_PI * m / (2.0 * (ny + 1));
        const double mu = 4.0 * inv_h2 * std::sin(arg) * std::sin(arg);
        for (int l = 0; l < ny; ++l)
            sine[static_cast<std::size_t>(l)] = std::sin(M_PI * m * (l + 1.0) / (ny + 1.0));
        const double fw = 2.0 / (ny + 1.0);
        for (int i = 0; i < nx; ++i) {
            cd s = 0.0;
            for (int l = 0; l < ny; ++l) s += f(i, l) * sine[static_cast<std::size_t>(l)];
            fhat[static_cast<std::size_t>(i)] = fw * s;
        }
        for (int i = 0; i < nx; ++i) {
            diag[static_cast<std::size_t>(i)] = cx[static_cast<std::size_t>(i)] + mu;
            rhs[static_cast<std::size_t>(i)] = fhat[static_cast<std::size_t>(i)];
        }
        // Thomas elimination with a resonance guard.
        for (int i = 0; i < nx; ++i) {
            if (i > 0) {
                const cd w = cw[static_cast<std::size_t>(i)] / diag[static_cast<std::size_t>(i) - 1];
                diag[static_cast<std::size_t>(i)] -= w * ce[static_cast<std::size_t>(i) - 1];
                rhs[static_cast<std::size_t>(i)] -= w * rhs[static_cast<std::size_t>(i) - 1];
            }
            const double scale =
                std::max({std::abs(cw[static_cast<std::size_t>(i)]),
                          std::abs(cx[static_cast<std::size_t>(i)] + mu),
                          std::abs(ce[static_cast<std::size_t>(i)])});
            if (std::abs(diag[static_cast<std::size_t>(i)]) < 1e-12 * scale)
                throw std::runtime_error("strip oracle: near-resonant mode " + std::to_string(m));
        }
        for (int i = nx - 1; i >= 0; --i) {
            cd s = rhs[static_cast<std::size_t>(i)];
            if (i + 1 < nx) s -= ce[static_cast<std::size_t>(i)] * rhs[static_cast<std::size_t>(i) + 1];
            rhs[static_cast<std::size_t>(i)] = s / diag[static_cast<std::size_t>(i)];
        }
        for (int i = 0; i < nx; ++i)
            for (int l = 0; l < ny; ++l)
                u(i, l) += rhs[static_cast<std::size_t>(i)] * sine[static_cast<std::size_t>(l)];
    }
    return u;
}

} // namespace helmsweep
