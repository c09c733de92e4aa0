// SPDX-FileCopyrightText: 2026 The helmsweep authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "helmsweep/field.hpp"
#include "helmsweep/stencil.hpp"

namespace helmsweep {

/// Dense complex m x m block, row major.
struct DenseBlock {
    int m = 0;
    std::vector<cd> a;

    DenseBlock() = default;
    explicit DenseBlock(int m_) : m(m_), a(static_cast<std::size_t>(m_) * m_) {}

    cd& at(int r, int c) { return a[static_cast<std::size_t>(r) * m + c]; }
    const cd& at(int r, int c) const { return a[static_cast<std::size_t>(r) * m + c]; }
};

/// Block-tridiagonal system with one block row per grid line l:
///   L_r x_{r-1} + D_r x_r + U_r x_{r+1} = b_r.
/// L and U are diagonal blocks (the y couplings of the five-point operator)
/// but are stored dense for uniform elimination code.
struct BlockTridiagonalMatrix {
    int n_blocks = 0;
    int block_size = 0;
    std::vector<DenseBlock> D;
    std::vector<DenseBlock> L; ///< L[0] unused
    std::vector<DenseBlock> U; ///< U[n_blocks-1] unused

    std::vector<cd> multiply(const std::vector<cd>& x) const;
};

/// Reinterprets a five-point operator as a block-tridiagonal matrix,
/// blocks indexed by the slow (y) direction.
BlockTridiagonalMatrix block_tridiag_from_stencil(const Stencil& st);

/// Block LU factorization: S_1 = D_1, S_r = D_r - L_r S_{r-1}^{-1} U_{r-1},
/// with partial pivoting inside each Schur block only.
class BlockLU {
public:
    BlockLU() = default;

    /// Throws std::runtime_error naming the block index when a Schur
    /// complement block is numerically singular.
    static BlockLU factor(const BlockTridiagonalMatrix& mat);

    void solve(std::vector<cd>& b) const;
    std::vector<cd> solve_copy(const std::vector<cd>& b) const;

    int n_blocks() const { return static_cast<int>(lu_.size()); }
    int block_size() const { return m_; }

private:
    struct FactoredBlock {
        DenseBlock lu;        ///< in-place LU of S_r
        std::vector<int> piv; ///< row permutation of S_r
    };

    int m_ = 0;
    std::vector<FactoredBlock> lu_;
    std::vector<DenseBlock> C_; ///< C_r = S_r^{-1} U_r, r < n_blocks-1
    std::vector<DenseBlock> L_; ///< copy of the subdiagonal blocks, L_[0] unused
};

} // namespace helmsweep
