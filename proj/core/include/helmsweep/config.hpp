// SPDX-FileCopyrightText: 2026 The helmsweep authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "helmsweep/grid.hpp"
#include "helmsweep/sweep.hpp"

namespace helmsweep {

enum class MediumType { Constant, Random, Layered, File };
enum class SourceType { Point, File };
enum class Method { Pml, Robin };

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// One solver run. Text form is sectioned key = value lines; parse,
/// serialize and parse again is the identity on every field.
struct RunConfig {
    // [grid]
    int n_core_x = 100;
    int n_core_y = 100;
    double h = 0.01;
    double frequency = 10.0; ///< omega / 2 pi
    YBoundary y_boundary = YBoundary::Pml;

    // [medium]
    MediumType medium = MediumType::Constant;
    double c0 = 1.0;
    double amplitude = 0.25;
    int smoothing_passes = 5;
    std::uint64_t seed = 42;
    std::vector<double> speeds;
    std::vector<int> interfaces;
    std::string medium_path;

    // [source]; i, j are 0-based full-grid indices, -1 = interior center
    SourceType source = SourceType::Point;
    int source_i = -1;
    int source_j = -1;
    std::string source_path;

    // [solver]
    Method method = Method::Pml;
    SolveMode mode = SolveMode::Reduced;
    int J = 10;
    int w_pml = 4;
    int w_ext = -1; ///< resolved to w_pml when left unset
    double r_target = 1e-2;
    int m_overlap = 1;
    double tol = 1e-6;
    int max_iter = 200;

    // [output]
    std::string out_field;
    std::string out_summary;

    friend bool operator==(const RunConfig&, const RunConfig&) = default;

    int resolved_w_ext() const { return w_ext < 0 ? w_pml : w_ext; }
    int n_x() const { return n_core_x + 2 * resolved_w_ext(); }
    int n_y() const {
        return n_core_y + (y_boundary == YBoundary::Pml ? 2 * resolved_w_ext() : 0);
    }
};

/// Throws ConfigError on unknown sections/keys or malformed values.
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);

/// Canonical text form; optional keys that are unset are omitted.
std::string serialize_config(const RunConfig& cfg);

/// Field-level checks (positivity, ranges). Geometric feasibility is
/// checked later by the grid and decomposition constructors.
void validate_config(const RunConfig& cfg);

} // namespace helmsweep
