// SPDX-FileCopyrightText: 2026 The helmsweep authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "helmsweep/bench.hpp"
#include "helmsweep/config.hpp"
#include "helmsweep/decomposition.hpp"
#include "helmsweep/media.hpp"
#include "helmsweep/one_d.hpp"
#include "helmsweep/runner.hpp"
#include "helmsweep/strip.hpp"

namespace hs = helmsweep;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNoConvergence = 1;
constexpr int kExitBadConfig = 2;

int cmd_solve(const std::string& config_path, const std::string& out_field,
              const std::string& mode) {
    hs::RunConfig cfg = hs::load_config(config_path);
    if (!out_field.empty()) cfg.out_field = out_field;
    if (mode == "reduced") cfg.mode = hs::SolveMode::Reduced;
    else if (mode == "full") cfg.mode = hs::SolveMode::Full;
    else if (!mode.empty()) throw hs::ConfigError("mode must be reduced or full");

    const hs::RunOutcome out = hs::run_solve(cfg);
    std::printf("method=%s grid=%dx%d J=%d iterations=%d converged=%s residual=%.3e "
                "setup=%.2fs solve=%.2fs\n",
                cfg.method == hs::Method::Pml ? "pml" : "robin", out.grid.n_x, out.grid.n_y,
                cfg.J, out.stats.iterations, out.stats.converged ? "yes" : "no",
                out.stats.true_residual, out.setup_seconds, out.solve_seconds);
    return out.stats.converged ? kExitOk : kExitNoConvergence;
}

int cmd_bench(const std::string& preset, bool large, const std::string& out_path) {
    if (preset != "paper-tables") throw hs::ConfigError("unknown preset '" + preset + "'");
    const std::vector<hs::RunConfig> suite = hs::paper_tables_preset(large);
    const std::vector<hs::BenchRow> rows = hs::run_bench(suite);
    const std::string csv = hs::bench_csv(rows);
    if (out_path.empty() || out_path == "-") {
        std::cout << csv;
    } else {
        std::ofstream out(out_path, std::ios::trunc);
        if (!out) throw hs::ConfigError("cannot open " + out_path);
        out << csv;
    }
    bool all_ok = true;
    for (const hs::BenchRow& r : rows) {
        std::fprintf(stderr, "%-6s n=%d J=%d iterations=%d residual=%.2e %s\n", r.method.c_str(),
                     r.n_x, r.J, r.iterations, r.residual, r.converged ? "ok" : "FAILED");
        all_ok = all_ok && r.converged;
    }
    return all_ok ? kExitOk : kExitNoConvergence;
}

bool check(const char* name, bool ok, double value) {
    std::printf("%-44s %s (%.3e)\n", name, ok ? "pass" : "FAIL", value);
    return ok;
}

/// Sweep solve on a constant strip against the mode-space direct solver.
int oracle_strip() {
    hs::RunConfig cfg;
    cfg.n_core_x = 60;
    cfg.n_core_y = 59;
    cfg.h = 1.0 / 60;
    cfg.frequency = 6.2;
    cfg.y_boundary = hs::YBoundary::Dirichlet;
    cfg.J = 6;
    cfg.w_pml = 20;
    cfg.w_ext = 20;
    cfg.r_target = 1e-6;
    cfg.tol = 1e-6;

    const hs::RunOutcome out = hs::run_solve(cfg);
    const hs::Grid2D grid = hs::grid_from_config(cfg);
    const hs::Medium med = hs::medium_from_config(cfg, grid);
    const hs::Field f = hs::source_from_config(cfg, grid);
    const hs::Field ref = hs::oracle_strip_solve(grid, med, f, cfg.r_target);
    double num = 0.0, den = 0.0;
    for (std::size_t p = 0; p < ref.a.size(); ++p) {
        num += std::norm(out.u.a[p] - ref.a[p]);
        den += std::norm(ref.a[p]);
    }
    const double rel = std::sqrt(num / den);
    bool ok = true;
    ok &= check("strip: iterations <= 3", out.stats.iterations <= 3, out.stats.iterations);
    ok &= check("strip: matches mode-space solution", rel <= 1e-6, rel);
    return ok ? kExitOk : kExitNoConvergence;
}

/// Interface-data schedules against the closed-form whole-domain solution.
int oracle_1d() {
    hs::Sweep1DProblem prob;
    prob.k = 8.0;
    const int n = 1601;
    const int J = 4;
    prob.x.resize(n);
    prob.f.resize(n);
    for (int q = 0; q < n; ++q) {
        prob.x[static_cast<std::size_t>(q)] = q / double(n - 1);
        const double d = (prob.x[static_cast<std::size_t>(q)] - 0.4) / 0.05;
        prob.f[static_cast<std::size_t>(q)] = std::exp(-d * d);
    }
    prob.bounds = {0, 400, 800, 1200, 1600};
    prob.h_left = hs::cd(0.0, 2.0 * prob.k);

    bool ok = true;
    const hs::Sweep1DResult jac = hs::sweep_1d(prob, hs::Schedule1D::Jacobi, J);
    ok &= check("1d: jacobi exact at n = J", jac.sup_errors.back() <= 1e-8,
                jac.sup_errors.back());
    ok &= check("1d: jacobi not yet exact at n = 2", jac.sup_errors[1] > 1e-3,
                jac.sup_errors[1]);
    const hs::Sweep1DResult ds = hs::sweep_1d(prob, hs::Schedule1D::DoubleSweep, 1);
    ok &= check("1d: double sweep exact after one pass", ds.sup_errors.back() <= 1e-8,
                ds.sup_errors.back());
    const hs::Sweep1DResult con = hs::sweep_1d(prob, hs::Schedule1D::Concurrent, J);
    ok &= check("1d: concurrent exact at n = J", con.sup_errors.back() <= 1e-8,
                con.sup_errors.back());
    return ok ? kExitOk : kExitNoConvergence;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Helmholtz double-sweep domain decomposition solver"};
    app.require_subcommand(1);

    std::string config_path, out_field, mode;
    CLI::App* solve = app.add_subcommand("solve", "Run one configured solve");
    solve->add_option("--config", config_path, "Config file path")->required();
    solve->add_option("--out-field", out_field, "Write the solution field here");
    solve->add_option("--mode", mode, "Override solver mode: reduced or full");

    std::string preset = "paper-tables", bench_out;
    bool large = false;
    CLI::App* bench = app.add_subcommand("bench", "Run a benchmark suite");
    bench->add_option("--preset", preset, "Suite preset (paper-tables)");
    bench->add_flag("--large", large, "Include the 800^2 and 1600^2 sizes");
    bench->add_option("--out", bench_out, "CSV output path ('-' for stdout)");

    std::string oracle_case;
    CLI::App* oracle = app.add_subcommand("oracle", "Run a semi-analytic oracle suite");
    oracle->add_option("--case", oracle_case, "strip or 1d")->required();

    try {
        app.parse(argc, argv);
        if (solve->parsed()) return cmd_solve(config_path, out_field, mode);
        if (bench->parsed()) return cmd_bench(preset, large, bench_out);
        if (oracle_case == "strip") return oracle_strip();
        if (oracle_case == "1d") return oracle_1d();
        throw hs::ConfigError("unknown oracle case '" + oracle_case + "'");
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitBadConfig;
    } catch (const hs::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadConfig;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNoConvergence;
    }
}
