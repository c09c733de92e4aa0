// SPDX-FileCopyrightText: 2026 The helmsweep authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <vector>

#include "doctest.h"
#include "helmsweep/decomposition.hpp"
#include "helmsweep/media.hpp"
#include "helmsweep/prng.hpp"
#include "helmsweep/sweep.hpp"

using namespace helmsweep;

namespace {

struct Setup {
    Grid2D grid;
    Medium med;
    DecompositionPlan plan;
};

Setup constant_setup(int n_core, int w_ext, int J, int w_pml, double frequency) {
    Setup s;
    s.grid.n_x = n_core + 2 * w_ext;
    s.grid.n_y = n_core + 2 * w_ext;
    s.grid.h = 1.0 / n_core;
    s.grid.w_ext = w_ext;
    s.grid.y_boundary = YBoundary::Pml;
    s.med.omega = 2.0 * M_PI * frequency;
    s.med.c = constant_medium(s.grid, 1.0);
    s.plan = plan_decomposition(s.grid, J, w_pml);
    return s;
}

Field random_field(const Grid2D& g, std::uint64_t seed) {
    Field f(g.n_x, g.n_y);
    SplitMix64 rng{seed};
    for (cd& z : f.a) z = cd(rng.next_unit() - 0.5, rng.next_unit() - 0.5);
    return f;
}

/// Largest entry outside the interface column pairs (beta_j, beta_j + 1).
double off_interface_max(const Field& r, const DecompositionPlan& plan) {
    std::vector<bool> on(static_cast<std::size_t>(r.nx), false);
    for (int j = 1; j < plan.J; ++j) {
        on[static_cast<std::size_t>(plan.beta[static_cast<std::size_t>(j)])] = true;
        on[static_cast<std::size_t>(plan.beta[static_cast<std::size_t>(j)]) + 1] = true;
    }
    double m = 0.0;
    for (int l = 0; l < r.ny; ++l)
        for (int i = 0; i < r.nx; ++i)
            if (!on[static_cast<std::size_t>(i)]) m = std::max(m, std::abs(r(i, l)));
    return m;
}

double core_max(const Field& v, const SubdomainExtent& e) {
    double m = 0.0;
    for (int l = 0; l < v.ny; ++l)
        for (int i = e.core_lo; i < e.core_hi; ++i) m = std::max(m, std::abs(v(i, l)));
    return m;
}

double rel_diff(const Field& a, const Field& b) {
    double num = 0.0, den = 0.0;
    for (std::size_t p = 0; p < a.a.size(); ++p) {
        num += std::norm(a.a[p] - b.a[p]);
        den += std::norm(b.a[p]);
    }
    return std::sqrt(num / den);
}

} // namespace

TEST_CASE("zero input stays zero through every stage") {
    const Setup s = constant_setup(40, 4, 4, 4, 4.0);
    const SweepContext ctx(s.grid, s.med, s.plan, 1e-2);
    const Field z(s.grid.n_x, s.grid.n_y);
    for (const cd& q : ctx.sweep_up(z).a) CHECK(q == cd(0.0));
    for (const cd& q : ctx.sweep_down(z).a) CHECK(q == cd(0.0));
    for (const cd& q : ctx.apply_preconditioned_operator(z).a) CHECK(q == cd(0.0));
}

TEST_CASE("J = 1 preconditioner is the exact inverse") {
    Setup s = constant_setup(40, 4, 1, 4, 4.0);
    const SweepContext ctx(s.grid, s.med, s.plan, 1e-2);
    const Field f = random_field(s.grid, 7);

    const Field APf = ctx.apply_preconditioned_operator(f);
    double num = 0.0;
    for (std::size_t p = 0; p < f.a.size(); ++p) num += std::norm(APf.a[p] - f.a[p]);
    CHECK(std::sqrt(num) <= 1e-9 * norm2(f));

    Field u;
    const SolveStats st = ctx.solve(f, 1e-6, 10, SolveMode::Reduced, u);
    CHECK(st.converged);
    CHECK(st.iterations == 1);
    CHECK(st.true_residual <= 1e-9);
}

TEST_CASE("one upward sweep reaches every subdomain") {
    const Setup s = constant_setup(60, 4, 5, 4, 6.0);
    const SweepContext ctx(s.grid, s.med, s.plan, 1e-2);
    const int i0 = (s.plan.subs[0].core_lo + s.plan.subs[0].core_hi) / 2;
    const Field f = build_point_source(s.grid, i0, s.grid.n_y / 2);
    const Field v = ctx.sweep_up(f);
    for (const SubdomainExtent& e : s.plan.subs) CHECK(core_max(v, e) > 0.0);
}

TEST_CASE("one downward sweep reaches the first subdomain") {
    const Setup s = constant_setup(60, 4, 5, 4, 6.0);
    const SweepContext ctx(s.grid, s.med, s.plan, 1e-2);
    const SubdomainExtent& last = s.plan.subs.back();
    const int i0 = (last.core_lo + last.core_hi) / 2;
    const Field g = build_point_source(s.grid, i0, s.grid.n_y / 2);
    const Field w = ctx.sweep_down(g);
    CHECK(core_max(w, s.plan.subs.front()) > 0.0);
}

TEST_CASE("P and AP are linear") {
    const Setup s = constant_setup(40, 4, 4, 4, 4.0);
    const SweepContext ctx(s.grid, s.med, s.plan, 1e-2);
    const Field f1 = random_field(s.grid, 11), f2 = random_field(s.grid, 12);
    const cd a(0.7, -0.3), b(-1.1, 0.4);

    Field comb(s.grid.n_x, s.grid.n_y);
    for (std::size_t p = 0; p < comb.a.size(); ++p) comb.a[p] = a * f1.a[p] + b * f2.a[p];

    for (bool use_ap : {false, true}) {
        auto op = [&](const Field& f) {
            return use_ap ? ctx.apply_preconditioned_operator(f) : ctx.apply_preconditioner(f);
        };
        const Field lhs = op(comb);
        const Field r1 = op(f1), r2 = op(f2);
        double num = 0.0, den = 0.0;
        for (std::size_t p = 0; p < lhs.a.size(); ++p) {
            num += std::norm(lhs.a[p] - (a * r1.a[p] + b * r2.a[p]));
            den += std::norm(lhs.a[p]);
        }
        CHECK(std::sqrt(num / den) <= 1e-12);
    }
}

TEST_CASE("residual of AP is supported on the interface pairs") {
    const Setup s = constant_setup(60, 4, 5, 4, 6.0);
    const SweepContext ctx(s.grid, s.med, s.plan, 1e-2);
    const Field f = random_field(s.grid, 21);
    const Field APf = ctx.apply_preconditioned_operator(f);
    Field r(s.grid.n_x, s.grid.n_y);
    for (std::size_t p = 0; p < r.a.size(); ++p) r.a[p] = f.a[p] - APf.a[p];
    CHECK(off_interface_max(r, s.plan) <= 1e-12 * norm_inf(f));
}

TEST_CASE("presolve remainder is supported on the interface pairs") {
    const Setup s = constant_setup(60, 4, 5, 4, 6.0);
    const SweepContext ctx(s.grid, s.med, s.plan, 1e-2);

    SUBCASE("random data") {
        const Field f = random_field(s.grid, 31);
        const Field ut = ctx.presolve_interior(f);
        Field phi = ctx.global_operator().apply(ut);
        for (std::size_t p = 0; p < phi.a.size(); ++p) phi.a[p] = f.a[p] - phi.a[p];
        CHECK(off_interface_max(phi, s.plan) <= 1e-12 * norm_inf(f));

        // nothing is lost by restricting phi to the interface pairs
        const Field back = ctx.prolong_from_interfaces(ctx.restrict_to_interfaces(phi));
        double err = 0.0;
        for (std::size_t p = 0; p < phi.a.size(); ++p)
            err = std::max(err, std::abs(back.a[p] - phi.a[p]));
        CHECK(err <= 1e-12 * norm_inf(f));
    }

    SUBCASE("data in one core touches only the adjacent pairs") {
        const SubdomainExtent& mid = s.plan.subs[2];
        const int i0 = (mid.tcore_lo + mid.tcore_hi) / 2;
        const Field f = build_point_source(s.grid, i0, s.grid.n_y / 2);
        const Field ut = ctx.presolve_interior(f);
        Field phi = ctx.global_operator().apply(ut);
        for (std::size_t p = 0; p < phi.a.size(); ++p) phi.a[p] = f.a[p] - phi.a[p];

        const int bl = s.plan.beta[2], br = s.plan.beta[3];
        double off = 0.0, on = 0.0;
        for (int l = 0; l < s.grid.n_y; ++l)
            for (int i = 0; i < s.grid.n_x; ++i) {
                const bool adj = i == bl || i == bl + 1 || i == br || i == br + 1;
                (adj ? on : off) = std::max(adj ? on : off, std::abs(phi(i, l)));
            }
        CHECK(off <= 1e-12 * norm_inf(f));
        CHECK(on > 0.0);
    }
}

TEST_CASE("restrict and prolong are partial inverses") {
    const Setup s = constant_setup(40, 4, 4, 4, 4.0);
    const SweepContext ctx(s.grid, s.med, s.plan, 1e-2);
    REQUIRE(ctx.interface_unknowns() == 2 * (s.plan.J - 1) * s.grid.n_y);

    std::vector<cd> y(static_cast<std::size_t>(ctx.interface_unknowns()));
    SplitMix64 rng{43};
    for (cd& z : y) z = cd(rng.next_unit() - 0.5, rng.next_unit() - 0.5);

    const std::vector<cd> back = ctx.restrict_to_interfaces(ctx.prolong_from_interfaces(y));
    CHECK(back == y);

    const Field once = ctx.prolong_from_interfaces(y);
    const Field twice = ctx.prolong_from_interfaces(ctx.restrict_to_interfaces(once));
    CHECK(once.a == twice.a);
}

TEST_CASE("wide layers make the strip preconditioner nearly exact") {
    Grid2D g;
    g.n_x = 200;
    g.n_y = 21;
    g.h = 1.0 / 120;
    g.w_ext = 40;
    g.y_boundary = YBoundary::Dirichlet;
    Medium med;
    med.omega = 2.0 * M_PI * 5.0;
    med.c = constant_medium(g, 1.0);
    const DecompositionPlan plan = plan_decomposition(g, 2, 40);
    const SweepContext ctx(g, med, plan, 1e-6);

    const Field f = random_field(g, 55);
    const Field APf = ctx.apply_preconditioned_operator(f);
    double num = 0.0;
    for (std::size_t p = 0; p < f.a.size(); ++p) num += std::norm(f.a[p] - APf.a[p]);
    CHECK(std::sqrt(num) / norm2(f) <= 1e-2);
}

TEST_CASE("constant-medium reference case converges in few iterations") {
    const Setup s = constant_setup(100, 4, 10, 4, 10.0);
    const SweepContext ctx(s.grid, s.med, s.plan, 1e-2);
    const Field f = build_point_source(
        s.grid, default_source_index(s.grid.w_ext, 100), default_source_index(s.grid.w_ext, 100));
    Field u;
    const SolveStats st = ctx.solve(f, 1e-6, 200, SolveMode::Reduced, u);
    CHECK(st.converged);
    CHECK(st.iterations <= 6);
    CHECK(st.true_residual <= 5e-6);
}

TEST_CASE("reduced and full modes produce the same field") {
    Grid2D g;
    g.n_x = 60;
    g.n_y = 50;
    g.h = 1.0 / 52;
    g.w_ext = 4;
    g.y_boundary = YBoundary::Pml;
    Medium med;
    med.omega = 2.0 * M_PI * 5.0;
    med.c = random_medium(g, 42, 0.25, 5);
    const DecompositionPlan plan = plan_decomposition(g, 4, 4);
    const SweepContext ctx(g, med, plan, 1e-2);
    const Field f = build_point_source(g, g.n_x / 2, g.n_y / 2);

    Field ur, uf;
    const SolveStats sr = ctx.solve(f, 1e-8, 100, SolveMode::Reduced, ur);
    const SolveStats sf = ctx.solve(f, 1e-8, 100, SolveMode::Full, uf);
    REQUIRE(sr.converged);
    REQUIRE(sf.converged);
    CHECK(rel_diff(ur, uf) <= 1e-6);
}

TEST_CASE("solves are bitwise deterministic") {
    const Setup s = constant_setup(40, 4, 4, 4, 4.0);
    const SweepContext ctx(s.grid, s.med, s.plan, 1e-2);
    const Field f = build_point_source(s.grid, s.grid.n_x / 2, s.grid.n_y / 2);
    Field u1, u2;
    const SolveStats s1 = ctx.solve(f, 1e-6, 50, SolveMode::Reduced, u1);
    const SolveStats s2 = ctx.solve(f, 1e-6, 50, SolveMode::Reduced, u2);
    CHECK(s1.iterations == s2.iterations);
    CHECK(u1.a == u2.a);
}
