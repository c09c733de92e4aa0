// SPDX-FileCopyrightText: 2026 The helmsweep authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

#include "doctest.h"
#include "helmsweep/decomposition.hpp"
#include "helmsweep/media.hpp"
#include "helmsweep/prng.hpp"
#include "helmsweep/stencil.hpp"
#include "helmsweep/strip.hpp"
#include "helmsweep/sweep.hpp"

using namespace helmsweep;

namespace {

Eigen::MatrixXcd dense_of(const Stencil& st) {
    const int N = st.nx * st.ny;
    Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(N, N);
    for (int l = 0; l < st.ny; ++l)
        for (int i = 0; i < st.nx; ++i) {
            const int p = l * st.nx + i;
            A(p, p) = st.cc[static_cast<std::size_t>(p)];
            if (i > 0) A(p, p - 1) = st.cw[static_cast<std::size_t>(p)];
            if (i + 1 < st.nx) A(p, p + 1) = st.ce[static_cast<std::size_t>(p)];
            if (l > 0) A(p, p - st.nx) = st.cs[static_cast<std::size_t>(p)];
            if (l + 1 < st.ny) A(p, p + st.nx) = st.cn[static_cast<std::size_t>(p)];
        }
    return A;
}

Grid2D strip_grid(int n_x, int n_y, double h, int w_ext) {
    Grid2D g;
    g.n_x = n_x;
    g.n_y = n_y;
    g.h = h;
    g.w_ext = w_ext;
    g.y_boundary = YBoundary::Dirichlet;
    return g;
}

} // namespace

TEST_CASE("outgoing-mode wavenumber branch") {
    const cd prop = lambda_of(3.0, 5.0);
    CHECK(std::abs(prop - cd(0.0, 4.0)) <= 1e-14);
    const cd evan = lambda_of(5.0, 3.0);
    CHECK(std::abs(evan - cd(-4.0, 0.0)) <= 1e-14);
    CHECK(std::abs(lambda_of(-3.0, 5.0) - cd(0.0, 4.0)) <= 1e-14);
    CHECK_THROWS_AS(lambda_of(2.0, 2.0), std::invalid_argument);
}

TEST_CASE("zero data gives the zero field") {
    const Grid2D g = strip_grid(20, 9, 0.1, 4);
    Medium med;
    med.omega = 2.0 * M_PI;
    med.c = constant_medium(g, 1.0);
    const Field u = oracle_strip_solve(g, med, Field(g.n_x, g.n_y), 1e-2);
    for (const cd& z : u.a) CHECK(z == cd(0.0));
}

TEST_CASE("matches a dense factorization of the assembled operator") {
    const Grid2D g = strip_grid(30, 20, 0.05, 6);
    Medium med;
    med.omega = 2.0 * M_PI * 4.0;
    med.c = constant_medium(g, 1.0);

    Field f(g.n_x, g.n_y);
    SplitMix64 rng{5};
    for (cd& z : f.a) z = cd(rng.next_unit() - 0.5, rng.next_unit() - 0.5);

    const Field u = oracle_strip_solve(g, med, f, 1e-2);

    const Eigen::MatrixXcd A = dense_of(build_global_stencil(g, med, 1e-2));
    Eigen::VectorXcd fv(A.cols());
    for (int p = 0; p < A.cols(); ++p) fv(p) = f.a[static_cast<std::size_t>(p)];
    const Eigen::VectorXcd ref = A.partialPivLu().solve(fv);

    double num = 0.0;
    for (int p = 0; p < ref.size(); ++p) num += std::norm(u.a[static_cast<std::size_t>(p)] - ref(p));
    CHECK(std::sqrt(num) <= 1e-10 * ref.norm());
}

TEST_CASE("a single transverse mode stays a single mode") {
    const Grid2D g = strip_grid(24, 11, 0.05, 4);
    Medium med;
    med.omega = 2.0 * M_PI * 3.0;
    med.c = constant_medium(g, 1.0);

    const int m = 3;
    Field f(g.n_x, g.n_y);
    SplitMix64 rng{9};
    for (int i = 0; i < g.n_x; ++i) {
        const cd prof(rng.next_unit() - 0.5, rng.next_unit() - 0.5);
        for (int l = 0; l < g.n_y; ++l)
            f(i, l) = prof * std::sin(M_PI * m * (l + 1.0) / (g.n_y + 1.0));
    }
    const Field u = oracle_strip_solve(g, med, f, 1e-2);

    const double scale = norm_inf(u);
    for (int mp = 1; mp <= g.n_y; ++mp) {
        if (mp == m) continue;
        double worst = 0.0;
        for (int i = 0; i < g.n_x; ++i) {
            cd s = 0.0;
            for (int l = 0; l < g.n_y; ++l)
                s += u(i, l) * std::sin(M_PI * mp * (l + 1.0) / (g.n_y + 1.0));
            worst = std::max(worst, std::abs(s) * 2.0 / (g.n_y + 1.0));
        }
        CHECK(worst <= 1e-12 * scale);
    }
}

TEST_CASE("requires the geometry it is specialized for") {
    Medium med;
    med.omega = 2.0 * M_PI;

    Grid2D pml_y = strip_grid(20, 9, 0.1, 4);
    pml_y.y_boundary = YBoundary::Pml;
    med.c = constant_medium(pml_y, 1.0);
    CHECK_THROWS_AS(oracle_strip_solve(pml_y, med, Field(20, 9), 1e-2), std::invalid_argument);

    const Grid2D g = strip_grid(20, 9, 0.1, 4);
    med.c = constant_medium(g, 1.0);
    med.c(7, 3) = 1.5;
    CHECK_THROWS_AS(oracle_strip_solve(g, med, Field(20, 9), 1e-2), std::invalid_argument);
}

TEST_CASE("an exactly resonant mode is reported by index") {
    // Layers disabled: the x system for mode m is the Dirichlet Laplacian
    // shifted by mu_m - k^2, singular when k^2 = mu_1 + nu_1.
    const Grid2D g = strip_grid(9, 8, 0.1, 2);
    const double inv_h2 = 1.0 / (g.h * g.h);
    const double mu1 = 4.0 * inv_h2 * std::pow(std::sin(M_PI / (2.0 * (g.n_y + 1))), 2);
    const double nu1 = 4.0 * inv_h2 * std::pow(std::sin(M_PI / (2.0 * (g.n_x + 1))), 2);
    const double k = std::sqrt(mu1 + nu1);
    Medium med;
    med.omega = 1.0;
    med.c = constant_medium(g, 1.0 / k);

    Field f(g.n_x, g.n_y);
    f(4, 3) = 1.0;
    bool threw = false;
    try {
        oracle_strip_solve(g, med, f, 1.0);
    } catch (const std::runtime_error& e) {
        threw = true;
        CHECK(std::string(e.what()).find("mode 1") != std::string::npos);
    }
    CHECK(threw);
}

TEST_CASE("the sweep solver reproduces the oracle on a strip") {
    Grid2D g = strip_grid(100, 59, 1.0 / 60, 20);
    Medium med;
    med.omega = 2.0 * M_PI * 6.2;
    med.c = constant_medium(g, 1.0);
    const DecompositionPlan plan = plan_decomposition(g, 6, 20);
    const SweepContext ctx(g, med, plan, 1e-6);

    const int q = default_source_index(g.w_ext, 60);
    const Field f = build_point_source(g, q, g.n_y / 2);
    Field u;
    const SolveStats st = ctx.solve(f, 1e-10, 50, SolveMode::Reduced, u);
    REQUIRE(st.converged);

    const Field ref = oracle_strip_solve(g, med, f, 1e-6);
    double num = 0.0, den = 0.0;
    for (std::size_t p = 0; p < u.a.size(); ++p) {
        num += std::norm(u.a[p] - ref.a[p]);
        den += std::norm(ref.a[p]);
    }
    CHECK(std::sqrt(num / den) <= 1e-8);
}
