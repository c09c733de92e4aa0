// SPDX-FileCopyrightText: 2026 The helmsweep authors
// SPDX-License-Identifier: Apache-2.0

#include "helmsweep/sweep.hpp"

#include <algorithm>
#include <stdexcept>

#include "helmsweep/gmres.hpp"

namespace helmsweep {

SweepContext::SweepContext(const Grid2D& grid, const Medium& medium,
                           const DecompositionPlan& plan, double r_target)
    : grid_(grid), plan_(plan) {
    grid_.validate();
    require_shape(medium.c, grid_.n_x, grid_.n_y, "sweep medium");
    if (plan_.n_x != grid_.n_x || plan_.w_ext != grid_.w_ext)
        throw std::invalid_argument("sweep: plan does not match grid");

    A_ = build_global_stencil(grid_, medium, r_target);

    const int ny = grid_.n_y;
    const int wy = grid_.y_boundary == YBoundary::Pml ? grid_.w_ext : 0;
    subs_.reserve(plan_.subs.size());
    for (const SubdomainExtent& e : plan_.subs) {
        Subdomain s;
        s.ext = e;
        s.m = e.width();
        // Extended speed: owned columns copied, pads repeat the owned edge
        // column so core coefficients agree bit-exactly with the global ones.
        RealField csub(s.m, ny);
        for (int ci = e.grid_lo; ci < e.grid_hi; ++ci) {
            const int src = std::clamp(ci, e.core_lo, e.tcore_hi - 1);
            for (int l = 0; l < ny; ++l) csub(ci - e.grid_lo, l) = medium.c(src, l);
        }
        StencilSpec spec;
        spec.nx = s.m;
        spec.ny = ny;
        spec.h = grid_.h;
        spec.omega = medium.omega;
        spec.c = &csub;
        spec.xlay = AxisLayers{s.m, e.j == 1 ? grid_.w_ext : plan_.w_pml,
                               e.j == plan_.J ? grid_.w_ext : plan_.w_pml};
        spec.ylay = AxisLayers{ny, wy, wy};
        spec.r_target = r_target;
        const Stencil local = build_stencil(spec);
        s.lu = BlockLU::factor(block_tridiag_from_stencil(local));
        subs_.push_back(std::move(s));
    }
}

Field SweepContext::local_solve(const Subdomain& s, Field rhs) const {
    require_shape(rhs, s.m, grid_.n_y, "subdomain rhs");
    s.lu.solve(rhs.a);
    return rhs;
}

Field SweepContext::sweep_up(const Field& f) const {
    require_shape(f, grid_.n_x, grid_.n_y, "sweep_up input");
    const int ny = grid_.n_y;
    const double h = grid_.h;
    Field v(grid_.n_x, ny);
    Field xprev;
    const SubdomainExtent* eprev = nullptr;
    for (const Subdomain& s : subs_) {
        const SubdomainExtent& e = s.ext;
        Field rhs(s.m, ny);
        for (int ci = e.core_lo; ci < e.core_hi; ++ci)
            for (int l = 0; l < ny; ++l) rhs(ci - e.grid_lo, l) = f(ci, l);
        if (e.j > 1) {
            // Transmission from the previous subdomain across interface
            // columns (b-1, b): a forward-difference trace re-emitted as a
            // two-column source.
            const int b = plan_.beta[static_cast<std::size_t>(e.j) - 1];
            for (int l = 0; l < ny; ++l) {
                const cd T = (xprev(b - eprev->grid_lo, l) - xprev(b - 1 - eprev->grid_lo, l)) / h;
                rhs(b - 1 - e.grid_lo, l) += -T / h;
                rhs(b - e.grid_lo, l) += -T / h;
            }
        }
        Field x = local_solve(s, std::move(rhs));
        for (int ci = e.core_lo; ci < e.core_hi; ++ci)
            for (int l = 0; l < ny; ++l) v(ci, l) = x(ci - e.grid_lo, l);
        xprev = std::move(x);
        eprev = &e;
    }
    return v;
}

Field SweepContext::sweep_down(const Field& g) const {
    require_shape(g, grid_.n_x, grid_.n_y, "sweep_down input");
    const int ny = grid_.n_y;
    const double h = grid_.h;
    Field w(grid_.n_x, ny);
    Field xnext;
    const SubdomainExtent* enext = nullptr;
    for (auto it = subs_.rbegin(); it != subs_.rend(); ++it) {
        const Subdomain& s = *it;
        const SubdomainExtent& e = s.ext;
        Field rhs(s.m, ny);
        for (int ci = e.tcore_lo; ci < e.tcore_hi; ++ci)
            for (int l = 0; l < ny; ++l) rhs(ci - e.grid_lo, l) = g(ci, l);
        if (e.j < plan_.J) {
            const int b = plan_.beta[static_cast<std::size_t>(e.j)];
            for (int l = 0; l < ny; ++l) {
                const cd T = (xnext(b + 1 - enext->grid_lo, l) - xnext(b - enext->grid_lo, l)) / h;
                rhs(b - e.grid_lo, l) += T / h;
                rhs(b + 1 - e.grid_lo, l) += T / h;
            }
        }
        Field x = local_solve(s, std::move(rhs));
        for (int ci = e.tcore_lo; ci < e.tcore_hi; ++ci)
            for (int l = 0; l < ny; ++l) w(ci, l) = x(ci - e.grid_lo, l);
        xnext = std::move(x);
        enext = &e;
    }
    return w;
}

Field SweepContext::apply_preconditioner(const Field& f) const {
    Field v = sweep_up(f);
    Field g = A_.apply(v);
    for (std::size_t p = 0; p < g.a.size(); ++p) g.a[p] = f.a[p] - g.a[p];
    Field w = sweep_down(g);
    for (std::size_t p = 0; p < w.a.size(); ++p) w.a[p] += v.a[p];
    return w;
}

Field SweepContext::apply_preconditioned_operator(const Field& f) const {
    Field v = sweep_up(f);
    Field g = A_.apply(v);
    for (std::size_t p = 0; p < g.a.size(); ++p) g.a[p] = f.a[p] - g.a[p];
    Field w = sweep_down(g);
    Field hh = A_.apply(w);
    for (std::size_t p = 0; p < hh.a.size(); ++p) hh.a[p] = f.a[p] - (g.a[p] - hh.a[p]);
    return hh;
}

Field SweepContext::presolve_interior(const Field& f) const {
    require_shape(f, grid_.n_x, grid_.n_y, "presolve input");
    const int ny = grid_.n_y;
    Field ut(grid_.n_x, ny);
    for (const Subdomain& s : subs_) {
        const SubdomainExtent& e = s.ext;
        Field rhs(s.m, ny);
        for (int ci = e.tcore_lo; ci < e.tcore_hi; ++ci)
            for (int l = 0; l < ny; ++l) rhs(ci - e.grid_lo, l) = f(ci, l);
        Field x = local_solve(s, std::move(rhs));
        for (int ci = e.tcore_lo; ci < e.tcore_hi; ++ci)
            for (int l = 0; l < ny; ++l) ut(ci, l) = x(ci - e.grid_lo, l);
    }
    return ut;
}

int SweepContext::interface_unknowns() const {
    return 2 * (plan_.J - 1) * grid_.n_y;
}

std::vector<cd> SweepContext::restrict_to_interfaces(const Field& x) const {
    require_shape(x, grid_.n_x, grid_.n_y, "interface restriction input");
    std::vector<cd> y;
    y.reserve(static_cast<std::size_t>(interface_unknowns()));
    for (int j = 1; j < plan_.J; ++j)
        for (int d = 0; d < 2; ++d) {
            const int col = plan_.beta[static_cast<std::size_t>(j)] + d;
            for (int l = 0; l < grid_.n_y; ++l) y.push_back(x(col, l));
        }
    return y;
}

Field SweepContext::prolong_from_interfaces(const std::vector<cd>& y) const {
    if (y.size() != static_cast<std::size_t>(interface_unknowns()))
        throw std::invalid_argument("interface prolongation: size mismatch");
    Field x(grid_.n_x, grid_.n_y);
    std::size_t q = 0;
    for (int j = 1; j < plan_.J; ++j)
        for (int d = 0; d < 2; ++d) {
            const int col = plan_.beta[static_cast<std::size_t>(j)] + d;
            for (int l = 0; l < grid_.n_y; ++l) x(col, l) = y[q++];
        }
    return x;
}

SolveStats SweepContext::solve(const Field& f, double tol, int max_iter, SolveMode mode,
                               Field& u) const {
    require_shape(f, grid_.n_x, grid_.n_y, "solve rhs");
    SolveStats stats;
    if (mode == SolveMode::Reduced) {
        Field ut = presolve_interior(f);
        if (plan_.J == 1) {
            // One subdomain covers the grid; the presolve is the solution.
            u = std::move(ut);
            stats.iterations = 1;
            stats.converged = true;
        } else {
            Field phi = A_.apply(ut);
            for (std::size_t p = 0; p < phi.a.size(); ++p) phi.a[p] = f.a[p] - phi.a[p];
            const auto op = [this](const std::vector<cd>& y) {
                return restrict_to_interfaces(
                    apply_preconditioned_operator(prolong_from_interfaces(y)));
            };
            GmresResult r = gmres(op, restrict_to_interfaces(phi), tol, max_iter);
            u = apply_preconditioner(prolong_from_interfaces(r.x));
            for (std::size_t p = 0; p < u.a.size(); ++p) u.a[p] += ut.a[p];
            stats.iterations = r.iterations;
            stats.converged = r.converged;
            stats.residual_history = std::move(r.residual_history);
        }
    } else {
        const auto op = [this](const std::vector<cd>& z) {
            Field zf(grid_.n_x, grid_.n_y);
            zf.a = z;
            return apply_preconditioned_operator(zf).a;
        };
        GmresResult r = gmres(op, f.a, tol, max_iter);
        Field zf(grid_.n_x, grid_.n_y);
        zf.a = std::move(r.x);
        u = apply_preconditioner(zf);
        stats.iterations = r.iterations;
        stats.converged = r.converged;
        stats.residual_history = std::move(r.residual_history);
    }
    Field Au = A_.apply(u);
    double num = 0.0;
    for (std::size_t p = 0; p < Au.a.size(); ++p) num += std::norm(f.a[p] - Au.a[p]);
    const double den = norm2(f);
    stats.true_residual = den > 0 ? std::sqrt(num) / den : std::sqrt(num);
    return stats;
}

} // namespace helmsweep
