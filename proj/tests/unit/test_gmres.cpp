// SPDX-FileCopyrightText: 2026 The helmsweep authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <vector>

#include <Eigen/Dense>

#include "doctest.h"
#include "helmsweep/gmres.hpp"
#include "helmsweep/prng.hpp"

using namespace helmsweep;

namespace {

std::vector<cd> random_vector(int n, std::uint64_t seed) {
    std::vector<cd> v(static_cast<std::size_t>(n));
    SplitMix64 rng{seed};
    for (cd& z : v) z = cd(rng.next_unit() - 0.5, rng.next_unit() - 0.5);
    return v;
}

/// Random complex matrix with a diagonal boost; well conditioned for the
/// sizes used here.
Eigen::MatrixXcd random_matrix(int n, std::uint64_t seed) {
    Eigen::MatrixXcd A(n, n);
    SplitMix64 rng{seed};
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            A(r, c) = cd(rng.next_unit() - 0.5, rng.next_unit() - 0.5);
    for (int r = 0; r < n; ++r) A(r, r) += cd(2.0 + n / 10.0, 1.0);
    return A;
}

std::function<std::vector<cd>(const std::vector<cd>&)> apply_of(const Eigen::MatrixXcd& A) {
    return [&A](const std::vector<cd>& x) {
        Eigen::VectorXcd xv(A.cols());
        for (int p = 0; p < A.cols(); ++p) xv(p) = x[static_cast<std::size_t>(p)];
        const Eigen::VectorXcd yv = A * xv;
        std::vector<cd> y(static_cast<std::size_t>(A.rows()));
        for (int p = 0; p < A.rows(); ++p) y[static_cast<std::size_t>(p)] = yv(p);
        return y;
    };
}

} // namespace

TEST_CASE("identity converges in one iteration") {
    const std::vector<cd> b = random_vector(9, 4);
    const GmresResult r = gmres([](const std::vector<cd>& x) { return x; }, b, 1e-12, 20);
    CHECK(r.converged);
    CHECK(r.iterations == 1);
    for (std::size_t p = 0; p < b.size(); ++p) CHECK(std::abs(r.x[p] - b[p]) <= 1e-12);
}

TEST_CASE("zero right-hand side returns zero without iterating") {
    const std::vector<cd> b(6, cd(0.0));
    const GmresResult r = gmres([](const std::vector<cd>& x) { return x; }, b, 1e-10, 20);
    CHECK(r.converged);
    CHECK(r.iterations == 0);
    for (const cd& z : r.x) CHECK(z == cd(0.0));
}

TEST_CASE("diagonal system inverts entrywise") {
    const std::vector<cd> b = {cd(1.0), cd(1.0), cd(1.0)};
    auto apply = [](const std::vector<cd>& x) {
        return std::vector<cd>{x[0], 2.0 * x[1], 3.0 * x[2]};
    };
    const GmresResult r = gmres(apply, b, 1e-12, 10);
    CHECK(r.converged);
    CHECK(r.iterations <= 3);
    CHECK(std::abs(r.x[0] - cd(1.0)) <= 1e-10);
    CHECK(std::abs(r.x[1] - cd(0.5)) <= 1e-10);
    CHECK(std::abs(r.x[2] - cd(1.0 / 3.0)) <= 1e-10);
}

TEST_CASE("n-step exactness on dense systems") {
    for (int n : {3, 8, 14, 20}) {
        const Eigen::MatrixXcd A = random_matrix(n, static_cast<std::uint64_t>(n));
        const std::vector<cd> b = random_vector(n, static_cast<std::uint64_t>(n) + 50);
        const GmresResult r = gmres(apply_of(A), b, 1e-12, n);
        CHECK(r.converged);
        CHECK(r.iterations <= n);
        Eigen::VectorXcd xv(n), bv(n);
        for (int p = 0; p < n; ++p) {
            xv(p) = r.x[static_cast<std::size_t>(p)];
            bv(p) = b[static_cast<std::size_t>(p)];
        }
        CHECK((A * xv - bv).norm() <= 1e-10 * bv.norm());
    }
}

TEST_CASE("residual history is nonincreasing and matches the true residual") {
    const int n = 24;
    const Eigen::MatrixXcd A = random_matrix(n, 77);
    const std::vector<cd> b = random_vector(n, 78);
    const GmresResult r = gmres(apply_of(A), b, 1e-10, n);
    REQUIRE(r.converged);
    REQUIRE(!r.residual_history.empty());

    for (std::size_t q = 1; q < r.residual_history.size(); ++q)
        CHECK(r.residual_history[q] <= r.residual_history[q - 1] + 1e-12);

    // the recurrence value at the accepted step vs an explicit recomputation
    Eigen::VectorXcd xv(n), bv(n);
    for (int p = 0; p < n; ++p) {
        xv(p) = r.x[static_cast<std::size_t>(p)];
        bv(p) = b[static_cast<std::size_t>(p)];
    }
    const double truth = (bv - A * xv).norm() / bv.norm();
    CHECK(std::abs(truth - r.residual_history.back()) <= 1e-8);
}

TEST_CASE("history length equals the iteration count") {
    const int n = 12;
    const Eigen::MatrixXcd A = random_matrix(n, 91);
    const std::vector<cd> b = random_vector(n, 92);
    const GmresResult r = gmres(apply_of(A), b, 1e-9, n);
    CHECK(static_cast<int>(r.residual_history.size()) == r.iterations);
}

TEST_CASE("hitting max_iter without the tolerance reports non-convergence") {
    const int n = 16;
    const Eigen::MatrixXcd A = random_matrix(n, 13);
    const std::vector<cd> b = random_vector(n, 14);
    const GmresResult r = gmres(apply_of(A), b, 1e-14, 2);
    CHECK(!r.converged);
    CHECK(r.iterations == 2);
}
