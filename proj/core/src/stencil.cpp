// SPDX-FileCopyrightText: 2026 The helmsweep authors
// SPDX-License-Identifier: Apache-2.0

#include "helmsweep/stencil.hpp"

#include <stdexcept>

namespace helmsweep {

void Stencil::apply(const Field& u, Field& out) const {
    require_shape(u, nx, ny, "Stencil::apply input");
    require_shape(out, nx, ny, "Stencil::apply output");
    for (int l = 0; l < ny; ++l) {
        for (int i = 0; i < nx; ++i) {
            const std::size_t p = static_cast<std::size_t>(l) * nx + i;
            cd v = cc[p] * u.a[p];
            if (i > 0) v += cw[p] * u.a[p - 1];
            if (i + 1 < nx) v += ce[p] * u.a[p + 1];
            if (l > 0) v += cs[p] * u.a[p - nx];
            if (l + 1 < ny) v += cn[p] * u.a[p + nx];
            out.a[p] = v;
        }
    }
}

Field Stencil::apply(const Field& u) const {
    Field out(nx, ny);
    apply(u, out);
    return out;
}

namespace {

/// Damping strengths for one axis, one line at a time. The reference speed
/// is taken from the line's endpoint inside the respective layer.
struct LineDamping {
    double smax_lo = 0.0;
    double smax_hi = 0.0;
};

LineDamping x_damping(const StencilSpec& s, int l) {
    LineDamping d;
    if (s.xlay.lw > 0) d.smax_lo = sigma_max((*s.c)(0, l), s.r_target, s.xlay.lw * s.h);
    if (s.xlay.rw > 0) d.smax_hi = sigma_max((*s.c)(s.nx - 1, l), s.r_target, s.xlay.rw * s.h);
    return d;
}

LineDamping y_damping(const StencilSpec& s, int i) {
    LineDamping d;
    if (s.ylay.lw > 0) d.smax_lo = sigma_max((*s.c)(i, 0), s.r_target, s.ylay.lw * s.h);
    if (s.ylay.rw > 0) d.smax_hi = sigma_max((*s.c)(i, s.ny - 1), s.r_target, s.ylay.rw * s.h);
    return d;
}

} // namespace

Stencil build_stencil(const StencilSpec& spec) {
    if (spec.c == nullptr) throw std::invalid_argument("stencil: speed field missing");
    if (spec.nx < 1 || spec.ny < 1) throw std::invalid_argument("stencil: empty grid");
    if (spec.h <= 0.0) throw std::invalid_argument("stencil: nonpositive spacing");
    require_shape(*spec.c, spec.nx, spec.ny, "stencil speed field");
    if (spec.xlay.n != spec.nx || spec.ylay.n != spec.ny)
        throw std::invalid_argument("stencil: layer extents do not match grid");

    const int nx = spec.nx;
    const int ny = spec.ny;
    const double inv_h2 = 1.0 / (spec.h * spec.h);
    Stencil st;
    st.nx = nx;
    st.ny = ny;
    const std::size_t n = static_cast<std::size_t>(nx) * ny;
    st.cc.resize(n);
    st.cw.resize(n);
    st.ce.resize(n);
    st.cs.resize(n);
    st.cn.resize(n);

    // y damping depends on the column only; precompute per column.
    std::vector<LineDamping> ydamp(nx);
    for (int i = 0; i < nx; ++i) ydamp[i] = y_damping(spec, i);

    for (int l = 0; l < ny; ++l) {
        const LineDamping xd = x_damping(spec, l);
        for (int i = 0; i < nx; ++i) {
            const cd axc = alpha(i, spec.xlay, xd.smax_lo, xd.smax_hi, spec.omega);
            const cd axp = alpha(i + 0.5, spec.xlay, xd.smax_lo, xd.smax_hi, spec.omega);
            const cd axm = alpha(i - 0.5, spec.xlay, xd.smax_lo, xd.smax_hi, spec.omega);
            const LineDamping& yd = ydamp[i];
            const cd ayc = alpha(l, spec.ylay, yd.smax_lo, yd.smax_hi, spec.omega);
            const cd ayp = alpha(l + 0.5, spec.ylay, yd.smax_lo, yd.smax_hi, spec.omega);
            const cd aym = alpha(l - 0.5, spec.ylay, yd.smax_lo, yd.smax_hi, spec.omega);
            const double k = spec.omega / (*spec.c)(i, l);
            const std::size_t p = static_cast<std::size_t>(l) * nx + i;
            st.ce[p] = -axc * axp * inv_h2;
            st.cw[p] = -axc * axm * inv_h2;
            st.cn[p] = -ayc * ayp * inv_h2;
            st.cs[p] = -ayc * aym * inv_h2;
            st.cc[p] = axc * (axp + axm) * inv_h2 + ayc * (ayp + aym) * inv_h2 - k * k;
        }
    }
    return st;
}

Stencil build_global_stencil(const Grid2D& grid, const Medium& medium, double r_target) {
    grid.validate();
    require_shape(medium.c, grid.n_x, grid.n_y, "medium speed field");
    StencilSpec spec;
    spec.nx = grid.n_x;
    spec.ny = grid.n_y;
    spec.h = grid.h;
    spec.omega = medium.omega;
    spec.c = &medium.c;
    spec.xlay = AxisLayers{grid.n_x, grid.w_ext, grid.w_ext};
    const int wy = grid.y_boundary == YBoundary::Pml ? grid.w_ext : 0;
    spec.ylay = AxisLayers{grid.n_y, wy, wy};
    spec.r_target = r_target;
    return build_stencil(spec);
}

} // namespace helmsweep
