// SPDX-FileCopyrightText: 2026 The helmsweep authors
// SPDX-License-Identifier: Apache-2.0

#include "helmsweep/gmres.hpp"

#include <cmath>
#include <stdexcept>

namespace helmsweep {

namespace {

cd dot(const std::vector<cd>& a, const std::vector<cd>& b) {
    cd s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
    return s;
}

} // namespace

GmresResult gmres(const std::function<std::vector<cd>(const std::vector<cd>&)>& apply,
                  const std::vector<cd>& b, double tol, int max_iter) {
    GmresResult res;
    res.x.assign(b.size(), cd(0.0));
    const double nb = norm2(b);
    if (nb == 0.0) {
        res.converged = true;
        return res;
    }
    if (max_iter < 1) throw std::invalid_argument("gmres: max_iter < 1");

    std::vector<std::vector<cd>> V;
    V.reserve(static_cast<std::size_t>(max_iter) + 1);
    {
        std::vector<cd> v0 = b;
        for (cd& z : v0) z /= nb;
        V.push_back(std::move(v0));
    }
    // Column-compressed Hessenberg after rotations: hcols[k] holds the
    // upper-triangular column of length k+1.
    std::vector<std::vector<cd>> hcols;
    std::vector<double> cs; ///< rotation cosines (real)
    std::vector<cd> sn;     ///< rotation sines
    std::vector<cd> g{cd(nb)};

    int k = 0;
    bool done = false;
    for (; k < max_iter && !done; ++k) {
        std::vector<cd> w = apply(V[static_cast<std::size_t>(k)]);
        if (w.size() != b.size()) throw std::invalid_argument("gmres: operator changed size");

        std::vector<cd> h(static_cast<std::size_t>(k) + 2);
        for (int i = 0; i <= k; ++i) {
            const cd hik = dot(V[static_cast<std::size_t>(i)], w);
            h[static_cast<std::size_t>(i)] = hik;
            const std::vector<cd>& vi = V[static_cast<std::size_t>(i)];
            for (std::size_t p = 0; p < w.size(); ++p) w[p] -= hik * vi[p];
        }
        const double hk = norm2(w);
        h[static_cast<std::size_t>(k) + 1] = cd(hk);
        const bool breakdown = (hk == 0.0);
        if (!breakdown) {
            for (cd& z : w) z /= hk;
            V.push_back(std::move(w));
        }

        // Apply the accumulated rotations to the new column.
        for (int i = 0; i < k; ++i) {
            const cd t = cs[static_cast<std::size_t>(i)] * h[static_cast<std::size_t>(i)] +
                         sn[static_cast<std::size_t>(i)] * h[static_cast<std::size_t>(i) + 1];
            h[static_cast<std::size_t>(i) + 1] =
                -std::conj(sn[static_cast<std::size_t>(i)]) * h[static_cast<std::size_t>(i)] +
                cs[static_cast<std::size_t>(i)] * h[static_cast<std::size_t>(i) + 1];
            h[static_cast<std::size_t>(i)] = t;
        }
        // New rotation zeroing the subdiagonal entry (real and >= 0).
        const cd a = h[static_cast<std::size_t>(k)];
        const double bb = h[static_cast<std::size_t>(k) + 1].real();
        const double r = std::sqrt(std::norm(a) + bb * bb);
        double ck;
        cd sk;
        if (r == 0.0) {
            ck = 1.0;
            sk = cd(0.0);
        } else if (std::abs(a) == 0.0) {
            ck = 0.0;
            sk = cd(1.0);
        } else {
            ck = std::abs(a) / r;
            sk = (a / std::abs(a)) * (bb / r);
        }
        h[static_cast<std::size_t>(k)] = ck * a + sk * bb;
        h[static_cast<std::size_t>(k) + 1] = cd(0.0);
        cs.push_back(ck);
        sn.push_back(sk);
        g.push_back(-std::conj(sk) * g[static_cast<std::size_t>(k)]);
        g[static_cast<std::size_t>(k)] *= ck;

        h.resize(static_cast<std::size_t>(k) + 1);
        hcols.push_back(std::move(h));

        const double rel = std::abs(g[static_cast<std::size_t>(k) + 1]) / nb;
        res.residual_history.push_back(rel);
        if (rel <= tol || breakdown) done = true;
    }
    res.iterations = k;
    res.converged = res.residual_history.back() <= tol;

    // x = V_k y with R y = g spanning the first k rotated columns.
    std::vector<cd> y(static_cast<std::size_t>(k));
    for (int i = k - 1; i >= 0; --i) {
        cd s = g[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            s -= hcols[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] *
                 y[static_cast<std::size_t>(j)];
        y[static_cast<std::size_t>(i)] = s / hcols[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
    }
    for (int j = 0; j < k; ++j) {
        const std::vector<cd>& vj = V[static_cast<std::size_t>(j)];
        const cd yj = y[static_cast<std::size_t>(j)];
        for (std::size_t p = 0; p < res.x.size(); ++p) res.x[p] += yj * vj[p];
    }
    return res;
}

} // namespace helmsweep
