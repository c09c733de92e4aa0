// SPDX-FileCopyrightText: 2026 The helmsweep authors
// SPDX-License-Identifier: Apache-2.0

#include "helmsweep/robin.hpp"

#include <stdexcept>

#include "helmsweep/gmres.hpp"

namespace helmsweep {

namespace {

constexpr cd I{0.0, 1.0};

} // namespace

RobinContext::RobinContext(const Grid2D& grid, const Medium& medium,
                           const DecompositionPlan& plan, double r_target, int m_overlap)
    : grid_(grid), plan_(plan), m_ov_(m_overlap) {
    grid_.validate();
    require_shape(medium.c, grid_.n_x, grid_.n_y, "robin medium");
    if (plan_.n_x != grid_.n_x || plan_.w_ext != grid_.w_ext)
        throw std::invalid_argument("robin: plan does not match grid");
    if (m_ov_ < 0) throw std::invalid_argument("robin: negative overlap");
    for (int j = 1; j < plan_.J; ++j)
        if (plan_.beta[static_cast<std::size_t>(j)] + m_ov_ > grid_.n_x - 1)
            throw std::invalid_argument("robin: overlap reaches past the grid");

    ghost_a_ = -1.0 / (grid_.h * grid_.h);
    A_ = build_global_stencil(grid_, medium, r_target);

    const int ny = grid_.n_y;
    kglob_ = RealField(grid_.n_x, ny);
    for (int l = 0; l < ny; ++l)
        for (int i = 0; i < grid_.n_x; ++i) kglob_(i, l) = medium.k(i, l);

    const int wy = grid_.y_boundary == YBoundary::Pml ? grid_.w_ext : 0;
    const double h = grid_.h;
    subs_.reserve(static_cast<std::size_t>(plan_.J));
    for (int j = 1; j <= plan_.J; ++j) {
        Subdomain s;
        s.j = j;
        s.lo = j == 1 ? 0 : plan_.beta[static_cast<std::size_t>(j) - 1];
        s.hi = j == plan_.J ? grid_.n_x : plan_.beta[static_cast<std::size_t>(j)] + m_ov_;
        s.m = s.hi - s.lo;
        if (s.m < 2) throw std::invalid_argument("robin: subdomain thinner than 2 columns");

        RealField csub(s.m, ny);
        for (int ci = s.lo; ci < s.hi; ++ci)
            for (int l = 0; l < ny; ++l) csub(ci - s.lo, l) = medium.c(ci, l);
        StencilSpec spec;
        spec.nx = s.m;
        spec.ny = ny;
        spec.h = h;
        spec.omega = medium.omega;
        spec.c = &csub;
        spec.xlay = AxisLayers{s.m, j == 1 ? grid_.w_ext : 0, j == plan_.J ? grid_.w_ext : 0};
        spec.ylay = AxisLayers{ny, wy, wy};
        spec.r_target = r_target;
        Stencil local = build_stencil(spec);

        // Ghost elimination of (du/dx -+ i k u) = d at the boundary half
        // points folds the ghost column into the diagonal. The ghost
        // coefficient is exactly -1/h^2: interfaces carry no x damping.
        if (j > 1) {
            s.tp_left.resize(ny);
            s.tm_left.resize(ny);
            for (int l = 0; l < ny; ++l) {
                const double kh = 0.5 * (kglob_(s.lo - 1, l) + kglob_(s.lo, l));
                s.tp_left[l] = 1.0 / h + I * kh / 2.0;
                s.tm_left[l] = 1.0 / h - I * kh / 2.0;
                local.cc[static_cast<std::size_t>(l) * s.m] +=
                    ghost_a_ * (s.tp_left[l] / s.tm_left[l]);
            }
        }
        if (j < plan_.J) {
            s.tp_right.resize(ny);
            s.tm_right.resize(ny);
            for (int l = 0; l < ny; ++l) {
                const double kh = 0.5 * (kglob_(s.hi - 1, l) + kglob_(s.hi, l));
                s.tp_right[l] = 1.0 / h + I * kh / 2.0;
                s.tm_right[l] = 1.0 / h - I * kh / 2.0;
                local.cc[static_cast<std::size_t>(l) * s.m + s.m - 1] +=
                    ghost_a_ * (s.tp_right[l] / s.tm_right[l]);
            }
        }
        s.lu = BlockLU::factor(block_tridiag_from_stencil(local));
        subs_.push_back(std::move(s));
    }
}

Field RobinContext::local_solve(const Subdomain& s, Field rhs) const {
    require_shape(rhs, s.m, grid_.n_y, "robin subdomain rhs");
    s.lu.solve(rhs.a);
    return rhs;
}

Field RobinContext::sweep_right(const Field& f) const {
    require_shape(f, grid_.n_x, grid_.n_y, "sweep_right input");
    const int ny = grid_.n_y;
    const double h = grid_.h;
    Field v(grid_.n_x, ny);
    Field xprev;
    const Subdomain* sprev = nullptr;
    for (const Subdomain& s : subs_) {
        const int c0 = s.j == 1 ? 0 : plan_.beta[static_cast<std::size_t>(s.j) - 1];
        const int c1 = s.j == plan_.J ? grid_.n_x : plan_.beta[static_cast<std::size_t>(s.j)];
        Field rhs(s.m, ny);
        for (int ci = c0; ci < c1; ++ci)
            for (int l = 0; l < ny; ++l) rhs(ci - s.lo, l) = f(ci, l);
        if (s.j > 1) {
            const int b = plan_.beta[static_cast<std::size_t>(s.j) - 1];
            for (int l = 0; l < ny; ++l) {
                const double kh = 0.5 * (kglob_(b - 1, l) + kglob_(b, l));
                const cd ua = xprev(b - 1 - sprev->lo, l);
                // With zero overlap the trace column b lies outside the
                // neighbor; its homogeneous Robin relation supplies it.
                const cd ub = m_ov_ > 0 ? xprev(b - sprev->lo, l)
                                        : ua * (sprev->tp_right[static_cast<std::size_t>(l)] /
                                                sprev->tm_right[static_cast<std::size_t>(l)]);
                const cd d = (ub - ua) / h + I * kh * (ub + ua) / 2.0;
                rhs(0, l) += ghost_a_ * d / s.tm_left[static_cast<std::size_t>(l)];
            }
        }
        Field x = local_solve(s, std::move(rhs));
        for (int ci = c0; ci < c1; ++ci)
            for (int l = 0; l < ny; ++l) v(ci, l) = x(ci - s.lo, l);
        xprev = std::move(x);
        sprev = &s;
    }
    return v;
}

Field RobinContext::sweep_left(const Field& g) const {
    require_shape(g, grid_.n_x, grid_.n_y, "sweep_left input");
    const int ny = grid_.n_y;
    const double h = grid_.h;
    Field w(grid_.n_x, ny);
    Field xnext;
    const Subdomain* snext = nullptr;
    for (auto it = subs_.rbegin(); it != subs_.rend(); ++it) {
        const Subdomain& s = *it;
        // Ownership shifts one column right of the interfaces so each seam
        // pair of the composite lies inside a single subdomain.
        const int shift = m_ov_ > 0 ? 1 : 0;
        const int c0 = s.j == 1 ? 0 : plan_.beta[static_cast<std::size_t>(s.j) - 1] + shift;
        const int c1 =
            s.j == plan_.J ? grid_.n_x : plan_.beta[static_cast<std::size_t>(s.j)] + shift;
        Field rhs(s.m, ny);
        for (int ci = c0; ci < c1; ++ci)
            for (int l = 0; l < ny; ++l) rhs(ci - s.lo, l) = g(ci, l);
        if (s.j < plan_.J) {
            const int bl = plan_.beta[static_cast<std::size_t>(s.j)] + (m_ov_ > 0 ? m_ov_ - 1 : -1);
            for (int l = 0; l < ny; ++l) {
                const double kh = 0.5 * (kglob_(bl, l) + kglob_(bl + 1, l));
                const cd ub = xnext(bl + 1 - snext->lo, l);
                const cd ua = m_ov_ > 0 ? xnext(bl - snext->lo, l)
                                        : ub * (snext->tp_left[static_cast<std::size_t>(l)] /
                                                snext->tm_left[static_cast<std::size_t>(l)]);
                const cd d = (ub - ua) / h - I * kh * (ub + ua) / 2.0;
                rhs(bl - s.lo, l) -= ghost_a_ * d / s.tm_right[static_cast<std::size_t>(l)];
            }
        }
        Field x = local_solve(s, std::move(rhs));
        for (int ci = c0; ci < c1; ++ci)
            for (int l = 0; l < ny; ++l) w(ci, l) = x(ci - s.lo, l);
        xnext = std::move(x);
        snext = &s;
    }
    return w;
}

Field RobinContext::apply_preconditioner(const Field& f) const {
    Field v = sweep_right(f);
    Field g = A_.apply(v);
    for (std::size_t p = 0; p < g.a.size(); ++p) g.a[p] = f.a[p] - g.a[p];
    Field w = sweep_left(g);
    for (std::size_t p = 0; p < w.a.size(); ++p) w.a[p] += v.a[p];
    return w;
}

SolveStats RobinContext::solve(const Field& f, double tol, int max_iter, Field& u) const {
    require_shape(f, grid_.n_x, grid_.n_y, "robin solve rhs");
    const auto op = [this](const std::vector<cd>& z) {
        Field zf(grid_.n_x, grid_.n_y);
        zf.a = z;
        return A_.apply(apply_preconditioner(zf)).a;
    };
    GmresResult r = gmres(op, f.a, tol, max_iter);
    Field zf(grid_.n_x, grid_.n_y);
    zf.a = std::move(r.x);
    u = apply_preconditioner(zf);
    SolveStats stats;
    stats.iterations = r.iterations;
    stats.converged = r.converged;
    stats.residual_history = std::move(r.residual_history);
    Field Au = A_.apply(u);
    double num = 0.0;
    for (std::size_t p = 0; p < Au.a.size(); ++p) num += std::norm(f.a[p] - Au.a[p]);
    const double den = norm2(f);
    stats.true_residual = den > 0 ? std::sqrt(num) / den : std::sqrt(num);
    return stats;
}

} // namespace helmsweep
