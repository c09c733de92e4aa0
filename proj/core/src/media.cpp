// SPDX-FileCopyrightText: 2026 The helmsweep authors
// SPDX-License-Identifier: Apache-2.0

#include "helmsweep/media.hpp"

#include <algorithm>
#include <stdexcept>

#include "helmsweep/prng.hpp"

namespace helmsweep {

RealField constant_medium(const Grid2D& grid, double c0) {
    grid.validate();
    if (c0 <= 0.0) throw std::invalid_argument("constant_medium: speed must be positive");
    return RealField(grid.n_x, grid.n_y, c0);
}

RealField random_medium(const Grid2D& grid, std::uint64_t seed, double amplitude, int passes) {
    grid.validate();
    if (amplitude < 0.0 || amplitude >= 1.0)
        throw std::invalid_argument("random_medium: amplitude must lie in [0, 1)");
    if (passes < 0) throw std::invalid_argument("random_medium: negative smoothing passes");
    const int nx = grid.n_x;
    const int ny = grid.n_y;
    RealField c(nx, ny);
    SplitMix64 rng{seed};
    for (int l = 0; l < ny; ++l)
        for (int i = 0; i < nx; ++i)
            c(i, l) = 1.0 + amplitude * (2.0 * rng.next_unit() - 1.0);

    constexpr double kernel[3][3] = {{1, 2, 1}, {2, 4, 2}, {1, 2, 1}};
    RealField tmp(nx, ny);
    for (int p = 0; p < passes; ++p) {
        for (int l = 0; l < ny; ++l) {
            for (int i = 0; i < nx; ++i) {
                double s = 0.0;
                for (int dy = -1; dy <= 1; ++dy) {
                    const int ll = std::clamp(l + dy, 0, ny - 1);
                    for (int dx = -1; dx <= 1; ++dx) {
                        const int ii = std::clamp(i + dx, 0, nx - 1);
                        s += kernel[dy + 1][dx + 1] * c(ii, ll);
                    }
                }
                tmp(i, l) = s / 16.0;
            }
        }
        std::swap(c.a, tmp.a);
    }
    return c;
}

RealField layered_medium(const Grid2D& grid, const std::vector<double>& speeds,
                         const std::vector<int>& interfaces) {
    grid.validate();
    if (speeds.empty()) throw std::invalid_argument("layered_medium: no speeds");
    if (interfaces.size() + 1 != speeds.size())
        throw std::invalid_argument("layered_medium: need one more speed than interfaces");
    for (const double s : speeds)
        if (s <= 0.0) throw std::invalid_argument("layered_medium: speeds must be positive");
    for (std::size_t b = 0; b < interfaces.size(); ++b) {
        if (interfaces[b] <= 0 || interfaces[b] >= grid.n_y)
            throw std::invalid_argument("layered_medium: interface row out of range");
        if (b > 0 && interfaces[b] <= interfaces[b - 1])
            throw std::invalid_argument("layered_medium: interfaces not increasing");
    }
    RealField c(grid.n_x, grid.n_y);
    std::size_t band = 0;
    for (int l = 0; l < grid.n_y; ++l) {
        while (band < interfaces.size() && l >= interfaces[band]) ++band;
        for (int i = 0; i < grid.n_x; ++i) c(i, l) = speeds[band];
    }
    return c;
}

Field build_point_source(const Grid2D& grid, int i, int l) {
    grid.validate();
    const int wy = grid.y_boundary == YBoundary::Pml ? grid.w_ext : 0;
    if (i < grid.w_ext || i >= grid.n_x - grid.w_ext || l < wy || l >= grid.n_y - wy)
        throw std::invalid_argument("build_point_source: node inside the exterior layers");
    Field f(grid.n_x, grid.n_y);
    f(i, l) = cd(1.0 / (grid.h * grid.h), 0.0);
    return f;
}

int default_source_index(int w_lo, int n_core) {
    return w_lo + n_core / 2;
}

} // namespace helmsweep
