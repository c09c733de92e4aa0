// SPDX-FileCopyrightText: 2026 The helmsweep authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace helmsweep {

using cd = std::complex<double>;

/// Dense 2-D array indexed (i, l) with x fastest: entry p = l * nx + i.
/// The flat layout matches the unknown ordering of the linear systems and
/// the on-disk field format (y as the outer index).
template <class T>
struct Array2D {
    int nx = 0;
    int ny = 0;
    std::vector<T> a;

    Array2D() = default;
    Array2D(int nx_, int ny_, T fill = T{})
        : nx(nx_), ny(ny_), a(static_cast<std::size_t>(nx_) * ny_, fill) {}

    T& operator()(int i, int l) { return a[static_cast<std::size_t>(l) * nx + i]; }
    const T& operator()(int i, int l) const { return a[static_cast<std::size_t>(l) * nx + i]; }

    std::size_t size() const { return a.size(); }
    bool same_shape(const Array2D& o) const { return nx == o.nx && ny == o.ny; }
};

using Field = Array2D<cd>;
using RealField = Array2D<double>;

template <class T>
void require_shape(const Array2D<T>& u, int nx, int ny, const char* what) {
    if (u.nx != nx || u.ny != ny)
        throw std::invalid_argument(std::string(what) + ": field shape mismatch");
}

inline double norm2(const std::vector<cd>& v) {
    double s = 0;
    for (const cd& z : v) s += std::norm(z);
    return std::sqrt(s);
}

inline double norm2(const Field& u) { return norm2(u.a); }

inline double norm_inf(const Field& u) {
    double s = 0;
    for (const cd& z : u.a) s = std::max(s, std::abs(z));
    return s;
}

} // namespace helmsweep
