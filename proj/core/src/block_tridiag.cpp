// SPDX-FileCopyrightText: 2026 The helmsweep authors
// SPDX-License-Identifier: Apache-2.0

#include "helmsweep/block_tridiag.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace helmsweep {

namespace {

void block_mul_vec(const DenseBlock& A, const cd* x, cd* y, double sign) {
    const int m = A.m;
    for (int r = 0; r < m; ++r) {
        cd s = 0;
        for (int c = 0; c < m; ++c) s += A.at(r, c) * x[c];
        y[r] += sign * s;
    }
}

/// C -= A * B, all m x m.
void block_mul_sub(const DenseBlock& A, const DenseBlock& B, DenseBlock& C) {
    const int m = A.m;
    for (int r = 0; r < m; ++r) {
        for (int k = 0; k < m; ++k) {
            const cd a = A.at(r, k);
            if (a == cd(0.0)) continue;
            for (int c = 0; c < m; ++c) C.at(r, c) -= a * B.at(k, c);
        }
    }
}

/// In-place LU with partial pivoting. Returns false on a singular pivot.
bool lu_factor(DenseBlock& A, std::vector<int>& piv) {
    const int m = A.m;
    piv.resize(m);
    double scale = 0.0;
    for (const cd& z : A.a) scale = std::max(scale, std::abs(z));
    if (scale == 0.0) return false;
    for (int k = 0; k < m; ++k) {
        int p = k;
        double best = std::abs(A.at(k, k));
        for (int r = k + 1; r < m; ++r) {
            const double v = std::abs(A.at(r, k));
            if (v > best) {
                best = v;
                p = r;
            }
        }
        if (best <= 1e-14 * scale) return false;
        piv[k] = p;
        if (p != k)
            for (int c = 0; c < m; ++c) std::swap(A.at(k, c), A.at(p, c));
        const cd inv = 1.0 / A.at(k, k);
        for (int r = k + 1; r < m; ++r) {
            const cd f = A.at(r, k) * inv;
            A.at(r, k) = f;
            if (f == cd(0.0)) continue;
            for (int c = k + 1; c < m; ++c) A.at(r, c) -= f * A.at(k, c);
        }
    }
    return true;
}

void lu_solve(const DenseBlock& LU, const std::vector<int>& piv, cd* b) {
    const int m = LU.m;
    // All interchanges first: the stored multiplier rows already carry the
    // later swaps, so interleaving swaps with the forward pass mispairs them.
    for (int k = 0; k < m; ++k)
        if (piv[k] != k) std::swap(b[k], b[piv[k]]);
    for (int k = 0; k < m; ++k)
        for (int r = k + 1; r < m; ++r) b[r] -= LU.at(r, k) * b[k];
    for (int k = m - 1; k >= 0; --k) {
        for (int c = k + 1; c < m; ++c) b[k] -= LU.at(k, c) * b[c];
        b[k] /= LU.at(k, k);
    }
}

} // namespace

std::vector<cd> BlockTridiagonalMatrix::multiply(const std::vector<cd>& x) const {
    const std::size_t n = static_cast<std::size_t>(n_blocks) * block_size;
    if (x.size() != n) throw std::invalid_argument("block tridiag multiply: size mismatch");
    std::vector<cd> y(n, cd(0.0));
    const int m = block_size;
    for (int r = 0; r < n_blocks; ++r) {
        cd* yr = y.data() + static_cast<std::size_t>(r) * m;
        block_mul_vec(D[r], x.data() + static_cast<std::size_t>(r) * m, yr, 1.0);
        if (r > 0) block_mul_vec(L[r], x.data() + static_cast<std::size_t>(r - 1) * m, yr, 1.0);
        if (r + 1 < n_blocks)
            block_mul_vec(U[r], x.data() + static_cast<std::size_t>(r + 1) * m, yr, 1.0);
    }
    return y;
}

BlockTridiagonalMatrix block_tridiag_from_stencil(const Stencil& st) {
    BlockTridiagonalMatrix mat;
    mat.n_blocks = st.ny;
    mat.block_size = st.nx;
    mat.D.assign(st.ny, DenseBlock(st.nx));
    mat.L.assign(st.ny, DenseBlock(st.nx));
    mat.U.assign(st.ny, DenseBlock(st.nx));
    for (int l = 0; l < st.ny; ++l) {
        DenseBlock& Dl = mat.D[l];
        for (int i = 0; i < st.nx; ++i) {
            const std::size_t p = static_cast<std::size_t>(l) * st.nx + i;
            Dl.at(i, i) = st.cc[p];
            if (i > 0) Dl.at(i, i - 1) = st.cw[p];
            if (i + 1 < st.nx) Dl.at(i, i + 1) = st.ce[p];
            if (l > 0) mat.L[l].at(i, i) = st.cs[p];
            if (l + 1 < st.ny) mat.U[l].at(i, i) = st.cn[p];
        }
    }
    return mat;
}

BlockLU BlockLU::factor(const BlockTridiagonalMatrix& mat) {
    if (mat.n_blocks < 1 || mat.block_size < 1)
        throw std::invalid_argument("block LU: empty matrix");
    BlockLU f;
    f.m_ = mat.block_size;
    f.lu_.resize(mat.n_blocks);
    f.C_.resize(mat.n_blocks);
    f.L_ = mat.L;
    DenseBlock S = mat.D[0];
    for (int r = 0;; ++r) {
        f.lu_[r].lu = S;
        if (!lu_factor(f.lu_[r].lu, f.lu_[r].piv))
            throw std::runtime_error("block LU: singular Schur block " + std::to_string(r));
        if (r + 1 == mat.n_blocks) break;
        // C_r = S_r^{-1} U_r, one triangular solve per column of U_r.
        DenseBlock C(f.m_);
        std::vector<cd> col(f.m_);
        for (int c = 0; c < f.m_; ++c) {
            for (int rr = 0; rr < f.m_; ++rr) col[rr] = mat.U[r].at(rr, c);
            lu_solve(f.lu_[r].lu, f.lu_[r].piv, col.data());
            for (int rr = 0; rr < f.m_; ++rr) C.at(rr, c) = col[rr];
        }
        f.C_[r] = std::move(C);
        S = mat.D[r + 1];
        block_mul_sub(mat.L[r + 1], f.C_[r], S);
    }
    return f;
}

void BlockLU::solve(std::vector<cd>& b) const {
    const int R = n_blocks();
    const std::size_t n = static_cast<std::size_t>(R) * m_;
    if (b.size() != n) throw std::invalid_argument("block LU solve: size mismatch");
    // Forward: y_r = S_r^{-1} (b_r - L_r y_{r-1}); overwrite b with y.
    for (int r = 0; r < R; ++r) {
        cd* br = b.data() + static_cast<std::size_t>(r) * m_;
        if (r > 0) block_mul_vec(L_[r], b.data() + static_cast<std::size_t>(r - 1) * m_, br, -1.0);
        lu_solve(lu_[r].lu, lu_[r].piv, br);
    }
    // Backward: x_r = y_r - C_r x_{r+1}.
    for (int r = R - 2; r >= 0; --r) {
        cd* br = b.data() + static_cast<std::size_t>(r) * m_;
        block_mul_vec(C_[r], b.data() + static_cast<std::size_t>(r + 1) * m_, br, -1.0);
    }
}

std::vector<cd> BlockLU::solve_copy(const std::vector<cd>& b) const {
    std::vector<cd> x = b;
    solve(x);
    return x;
}

} // namespace helmsweep
