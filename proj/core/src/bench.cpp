// SPDX-FileCopyrightText: 2026 The helmsweep authors
// SPDX-License-Identifier: Apache-2.0

#include "helmsweep/bench.hpp"

#include <chrono>
#include <sstream>
#include <stdexcept>

#include "helmsweep/runner.hpp"

namespace helmsweep {

namespace {

constexpr const char* kCsvHeader =
    "n_x,n_y,h,frequency,J,w_pml,method,iterations,residual,seconds,converged";

RunConfig base_config(int n, double frequency) {
    RunConfig cfg;
    cfg.n_core_x = cfg.n_core_y = n;
    cfg.h = 1.0 / n;
    cfg.frequency = frequency;
    cfg.J = n / 10;
    cfg.w_pml = 4;
    cfg.tol = 1e-6;
    cfg.max_iter = 200;
    return cfg;
}

/// Random-suite frequencies follow the halving of h from 7.14 at 100^2.
double random_frequency(int n) {
    switch (n) {
    case 100: return 7.14;
    case 200: return 14.29;
    case 400: return 28.57;
    case 800: return 57.14;
    default: return 114.29; // 1600
    }
}

} // namespace

std::vector<RunConfig> paper_tables_preset(bool large) {
    std::vector<int> sizes{100, 200, 400};
    if (large) {
        sizes.push_back(800);
        sizes.push_back(1600);
    }
    std::vector<RunConfig> suite;
    for (const bool random : {false, true}) {
        for (const int n : sizes) {
            for (const Method method : {Method::Pml, Method::Robin}) {
                RunConfig cfg = base_config(n, random ? random_frequency(n) : n / 10.0);
                cfg.medium = random ? MediumType::Random : MediumType::Constant;
                cfg.method = method;
                suite.push_back(cfg);
            }
        }
    }
    return suite;
}

std::vector<BenchRow> run_bench(const std::vector<RunConfig>& suite) {
    std::vector<BenchRow> rows;
    rows.reserve(suite.size());
    for (const RunConfig& cfg : suite) {
        BenchRow row;
        row.n_x = cfg.n_x();
        row.n_y = cfg.n_y();
        row.h = cfg.h;
        row.frequency = cfg.frequency;
        row.J = cfg.J;
        row.w_pml = cfg.w_pml;
        row.method = cfg.method == Method::Pml ? "pml" : "robin";
        const auto t0 = std::chrono::steady_clock::now();
        try {
            const RunOutcome out = run_solve(cfg);
            row.iterations = out.stats.iterations;
            row.residual = out.stats.true_residual;
            row.converged = out.stats.converged;
        } catch (const std::exception&) {
            // Failed rows stay in the table with converged = false.
            row.iterations = 0;
            row.residual = -1.0;
            row.converged = false;
        }
        row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
    std::ostringstream out;
    out.precision(12);
    out << kCsvHeader << "\n";
    for (const BenchRow& r : rows)
        out << r.n_x << ',' << r.n_y << ',' << r.h << ',' << r.frequency << ',' << r.J << ','
            << r.w_pml << ',' << r.method << ',' << r.iterations << ',' << r.residual << ','
            << r.seconds << ',' << (r.converged ? 1 : 0) << "\n";
    return out.str();
}

std::vector<BenchRow> parse_bench_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != kCsvHeader)
        throw std::runtime_error("bench csv: bad header");
    std::vector<BenchRow> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string cell;
        std::vector<std::string> cells;
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        if (cells.size() != 11) throw std::runtime_error("bench csv: bad row '" + line + "'");
        BenchRow r;
        r.n_x = std::stoi(cells[0]);
        r.n_y = std::stoi(cells[1]);
        r.h = std::stod(cells[2]);
        r.frequency = std::stod(cells[3]);
        r.J = std::stoi(cells[4]);
        r.w_pml = std::stoi(cells[5]);
        r.method = cells[6];
        r.iterations = std::stoi(cells[7]);
        r.residual = std::stod(cells[8]);
        r.seconds = std::stod(cells[9]);
        r.converged = std::stoi(cells[10]) != 0;
        rows.push_back(std::move(r));
    }
    return rows;
}

} // namespace helmsweep
