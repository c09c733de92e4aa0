// SPDX-FileCopyrightText: 2026 The helmsweep authors
// SPDX-License-Identifier: Apache-2.0

#include "helmsweep/one_d.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace helmsweep {

namespace {

constexpr cd I{0.0, 1.0};

/// One interval [x[qa], x[qb]] with trapezoid prefix integrals of
///   P1[q] = int_a^{x_q} e^{-ik(s-a)} f(s) ds,
///   P2[q] = int_{x_q}^b e^{ik(s-a)} f(s) ds,
/// phases referenced to the interval's left end a.
struct Interval {
    double k = 0.0;
    int qa = 0, qb = 0;
    double a = 0.0, b = 0.0;
    std::vector<cd> P1, P2;
    cd expL; ///< e^{ikL}

    Interval(double k_, const std::vector<double>& x, const std::vector<cd>& f, int qa_, int qb_)
        : k(k_), qa(qa_), qb(qb_), a(x[static_cast<std::size_t>(qa_)]),
          b(x[static_cast<std::size_t>(qb_)]) {
        const int n = qb - qa + 1;
        P1.assign(static_cast<std::size_t>(n), cd(0.0));
        P2.assign(static_cast<std::size_t>(n), cd(0.0));
        for (int q = 1; q < n; ++q) {
            const double x0 = x[static_cast<std::size_t>(qa + q - 1)];
            const double x1 = x[static_cast<std::size_t>(qa + q)];
            const cd g0 = std::exp(-I * k * (x0 - a)) * f[static_cast<std::size_t>(qa + q - 1)];
            const cd g1 = std::exp(-I * k * (x1 - a)) * f[static_cast<std::size_t>(qa + q)];
            P1[static_cast<std::size_t>(q)] =
                P1[static_cast<std::size_t>(q) - 1] + 0.5 * (x1 - x0) * (g0 + g1);
        }
        for (int q = n - 2; q >= 0; --q) {
            const double x0 = x[static_cast<std::size_t>(qa + q)];
            const double x1 = x[static_cast<std::size_t>(qa + q + 1)];
            const cd g0 = std::exp(I * k * (x0 - a)) * f[static_cast<std::size_t>(qa + q)];
            const cd g1 = std::exp(I * k * (x1 - a)) * f[static_cast<std::size_t>(qa + q + 1)];
            P2[static_cast<std::size_t>(q)] =
                P2[static_cast<std::size_t>(q) + 1] + 0.5 * (x1 - x0) * (g0 + g1);
        }
        expL = std::exp(I * k * (b - a));
    }

    /// Field at the interval's nodes for radiation data (h1, h2).
    std::vector<cd> field(const std::vector<double>& x, cd h1, cd h2) const {
        const int n = qb - qa + 1;
        std::vector<cd> u(static_cast<std::size_t>(n));
        const cd c_int = I / (2.0 * k);
        const cd c_bc = 1.0 / (2.0 * I * k);
        for (int q = 0; q < n; ++q) {
            const double xi = x[static_cast<std::size_t>(qa + q)];
            const cd ep = std::exp(I * k * (xi - a));
            const cd em = std::exp(-I * k * (xi - a));
            const cd emb = std::exp(-I * k * (xi - b));
            u[static_cast<std::size_t>(q)] = c_int * (ep * P1[static_cast<std::size_t>(q)] +
                                                      em * P2[static_cast<std::size_t>(q)]) +
                                             c_bc * (h1 * ep + h2 * emb);
        }
        return u;
    }

    /// Outgoing traces: (u' + iku) at b and (-u' + iku) at a.
    cd out_right(cd h1) const { return expL * (h1 - P1.back()); }
    cd out_left(cd h2) const { return expL * h2 - P2.front(); }
};

void validate(const Sweep1DProblem& p) {
    if (p.k <= 0.0) throw std::invalid_argument("sweep_1d: k must be positive");
    if (p.x.size() < 2 || p.f.size() != p.x.size())
        throw std::invalid_argument("sweep_1d: bad sample arrays");
    for (std::size_t q = 1; q < p.x.size(); ++q)
        if (!(p.x[q] > p.x[q - 1])) throw std::invalid_argument("sweep_1d: nodes not ascending");
    if (p.bounds.size() < 2 || p.bounds.front() != 0 ||
        p.bounds.back() != static_cast<int>(p.x.size()) - 1)
        throw std::invalid_argument("sweep_1d: bounds must span the node range");
    for (std::size_t j = 1; j < p.bounds.size(); ++j)
        if (p.bounds[j] <= p.bounds[j - 1])
            throw std::invalid_argument("sweep_1d: bounds not increasing");
}

} // namespace

std::vector<cd> solution_formula_1d(double k, const std::vector<double>& x,
                                    const std::vector<cd>& f, cd h_left, cd h_right) {
    if (k <= 0.0) throw std::invalid_argument("solution_formula_1d: k must be positive");
    if (x.size() < 2 || f.size() != x.size())
        throw std::invalid_argument("solution_formula_1d: bad sample arrays");
    Interval iv(k, x, f, 0, static_cast<int>(x.size()) - 1);
    return iv.field(x, h_left, h_right);
}

std::vector<cd> truncated_formula_1d(const Sweep1DProblem& p, int j, int n) {
    validate(p);
    const int J = static_cast<int>(p.bounds.size()) - 1;
    if (j < 1 || j > J) throw std::invalid_argument("truncated_formula_1d: subdomain index");
    if (n < 1) throw std::invalid_argument("truncated_formula_1d: step count");
    const int A = std::max(0, j - n);
    const int B = std::min(J, j + n - 1);
    const int qa = p.bounds[static_cast<std::size_t>(A)];
    const int qb = p.bounds[static_cast<std::size_t>(B)];
    Interval iv(p.k, p.x, p.f, qa, qb);
    const cd h1 = A == 0 ? p.h_left : cd(0.0);
    const cd h2 = B == J ? p.h_right : cd(0.0);
    std::vector<cd> u = iv.field(p.x, h1, h2);
    const int lo = p.bounds[static_cast<std::size_t>(j) - 1] - qa;
    const int hi = p.bounds[static_cast<std::size_t>(j)] - qa;
    return std::vector<cd>(u.begin() + lo, u.begin() + hi + 1);
}

Sweep1DResult sweep_1d(const Sweep1DProblem& p, Schedule1D schedule, int n_steps) {
    validate(p);
    if (schedule != Schedule1D::DoubleSweep && n_steps < 1)
        throw std::invalid_argument("sweep_1d: need at least one step");
    const int J = static_cast<int>(p.bounds.size()) - 1;

    std::vector<Interval> ivs;
    ivs.reserve(static_cast<std::size_t>(J));
    for (int j = 1; j <= J; ++j)
        ivs.emplace_back(p.k, p.x, p.f, p.bounds[static_cast<std::size_t>(j) - 1],
                         p.bounds[static_cast<std::size_t>(j)]);

    const std::vector<cd> exact = solution_formula_1d(p.k, p.x, p.f, p.h_left, p.h_right);

    // State: per-subdomain incoming data and stored outgoing traces.
    std::vector<cd> h1(static_cast<std::size_t>(J) + 1, cd(0.0));
    std::vector<cd> h2(static_cast<std::size_t>(J) + 1, cd(0.0));
    std::vector<cd> outR(static_cast<std::size_t>(J) + 1, cd(0.0));
    std::vector<cd> outL(static_cast<std::size_t>(J) + 2, cd(0.0));

    const auto update = [&](int j, const std::vector<cd>& srcR, const std::vector<cd>& srcL) {
        h1[static_cast<std::size_t>(j)] =
            j == 1 ? p.h_left : srcR[static_cast<std::size_t>(j) - 1];
        h2[static_cast<std::size_t>(j)] =
            j == J ? p.h_right : srcL[static_cast<std::size_t>(j) + 1];
        outR[static_cast<std::size_t>(j)] =
            ivs[static_cast<std::size_t>(j) - 1].out_right(h1[static_cast<std::size_t>(j)]);
        outL[static_cast<std::size_t>(j)] =
            ivs[static_cast<std::size_t>(j) - 1].out_left(h2[static_cast<std::size_t>(j)]);
    };

    Sweep1DResult res;
    const auto record = [&]() {
        res.composite.assign(p.x.size(), cd(0.0));
        for (int j = 1; j <= J; ++j) {
            const std::vector<cd> u =
                ivs[static_cast<std::size_t>(j) - 1].field(p.x, h1[static_cast<std::size_t>(j)],
                                                           h2[static_cast<std::size_t>(j)]);
            const int qa = p.bounds[static_cast<std::size_t>(j) - 1];
            for (std::size_t q = 0; q < u.size(); ++q)
                res.composite[static_cast<std::size_t>(qa) + q] = u[q];
        }
        double err = 0.0;
        for (std::size_t q = 0; q < exact.size(); ++q)
            err = std::max(err, std::abs(res.composite[q] - exact[q]));
        res.sup_errors.push_back(err);
    };

    if (schedule == Schedule1D::Jacobi) {
        for (int n = 0; n < n_steps; ++n) {
            const std::vector<cd> oldR = outR;
            const std::vector<cd> oldL = outL;
            for (int j = 1; j <= J; ++j) update(j, oldR, oldL);
            record();
        }
        res.steps = n_steps;
    } else if (schedule == Schedule1D::DoubleSweep) {
        // Forward pass propagates left data; the backward pass right data.
        // out_right depends on incoming left data only (and vice versa), so
        // one pass each way reproduces the whole-domain solution.
        for (int j = 1; j <= J; ++j) update(j, outR, outL);
        for (int j = J; j >= 1; --j) update(j, outR, outL);
        record();
        res.steps = 1;
    } else {
        for (int n = 1; n <= n_steps; ++n) {
            const int ja = std::min(n, J);
            const int jb = std::max(1, J + 1 - n);
            update(ja, outR, outL);
            if (jb != ja) update(jb, outR, outL);
            record();
        }
        res.steps = n_steps;
    }
    return res;
}

} // namespace helmsweep
