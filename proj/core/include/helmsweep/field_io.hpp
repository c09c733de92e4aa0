// SPDX-FileCopyrightText: 2026 The helmsweep authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "helmsweep/field.hpp"

namespace helmsweep {

struct FieldMeta {
    int n_x = 0;
    int n_y = 0;
    double h = 0.0;
};

/// Writes the raw samples as little-endian float64 pairs (re, im), y as the
/// outer index, plus a JSON sidecar at path + ".json" describing the shape.
void write_field(const std::string& path, const Field& u, double h);

/// Reads a field written by write_field. Throws std::runtime_error on a
/// missing or inconsistent sidecar or a payload whose size does not match
/// 16 * n_x * n_y bytes.
Field read_field(const std::string& path, FieldMeta* meta = nullptr);

} // namespace helmsweep
