// SPDX-FileCopyrightText: 2026 The helmsweep authors
// SPDX-License-Identifier: Apache-2.0

#include <string>

#include "doctest.h"
#include "helmsweep/config.hpp"

using namespace helmsweep;

namespace {

std::string contains_msg(const std::exception& e) { return e.what(); }

template <class F> std::string error_of(F&& fn) {
    try {
        fn();
    } catch (const ConfigError& e) {
        return contains_msg(e);
    }
    return {};
}

} // namespace

TEST_CASE("empty text yields the defaults") {
    const RunConfig cfg = parse_config("");
    CHECK(cfg == RunConfig{});
    CHECK(cfg.n_core_x == 100);
    CHECK(cfg.h == 0.01);
    CHECK(cfg.method == Method::Pml);
    CHECK(cfg.mode == SolveMode::Reduced);
    CHECK(cfg.J == 10);
    CHECK(cfg.w_pml == 4);
    CHECK(cfg.w_ext == -1);
    CHECK(cfg.resolved_w_ext() == 4);
    CHECK(cfg.n_x() == 108);
    CHECK(cfg.n_y() == 108);
    CHECK(cfg.tol == 1e-6);
    CHECK(cfg.max_iter == 200);
    CHECK(cfg.seed == 42);
    validate_config(cfg); // must not throw
}

TEST_CASE("comments, blank lines and spacing are tolerated") {
    const RunConfig cfg = parse_config("# leading comment\n"
                                       "\n"
                                       "[grid]\n"
                                       "  n_core_x =  200   ; trailing comment\n"
                                       "h=0.005\n"
                                       "[solver]\n"
                                       "J = 20 # twenty\n");
    CHECK(cfg.n_core_x == 200);
    CHECK(cfg.h == 0.005);
    CHECK(cfg.J == 20);
}

TEST_CASE("parse, serialize, parse is the identity") {
    SUBCASE("defaults") {
        const RunConfig cfg;
        CHECK(parse_config(serialize_config(cfg)) == cfg);
    }

    SUBCASE("every field set") {
        RunConfig cfg;
        cfg.n_core_x = 64;
        cfg.n_core_y = 48;
        cfg.h = 1.0 / 64;
        cfg.frequency = 6.4;
        cfg.y_boundary = YBoundary::Dirichlet;
        cfg.medium = MediumType::Layered;
        cfg.speeds = {1.0, 1.5, 0.75};
        cfg.interfaces = {16, 40};
        cfg.source = SourceType::Point;
        cfg.source_i = 31;
        cfg.source_j = 17;
        cfg.method = Method::Robin;
        cfg.mode = SolveMode::Full;
        cfg.J = 4;
        cfg.w_pml = 6;
        cfg.w_ext = 8;
        cfg.r_target = 1e-4;
        cfg.m_overlap = 2;
        cfg.tol = 1e-8;
        cfg.max_iter = 321;
        cfg.out_field = "out/u.bin";
        cfg.out_summary = "out/run.txt";
        CHECK(parse_config(serialize_config(cfg)) == cfg);
    }

    SUBCASE("file-backed medium and source") {
        RunConfig cfg;
        cfg.medium = MediumType::File;
        cfg.medium_path = "data/c.bin";
        cfg.source = SourceType::File;
        cfg.source_path = "data/f.bin";
        cfg.seed = 123456789012345ULL;
        CHECK(parse_config(serialize_config(cfg)) == cfg);
    }

    SUBCASE("non-decimal reals survive") {
        RunConfig cfg;
        cfg.h = 1.0 / 3.0;
        cfg.frequency = 28.571428571428573;
        cfg.tol = 3e-9;
        CHECK(parse_config(serialize_config(cfg)) == cfg);
    }
}

TEST_CASE("parse errors carry the line number") {
    CHECK(error_of([] { parse_config("[grid]\nbogus = 1\n"); }).find("line 2") !=
          std::string::npos);
    CHECK(error_of([] { parse_config("[grid]\nn_core_x = ten\n"); }).find("line 2") !=
          std::string::npos);
    CHECK(error_of([] { parse_config("\n\n[nope]\n"); }).find("line 3") != std::string::npos);
    CHECK(error_of([] { parse_config("n_core_x = 10\n"); }).find("line 1") != std::string::npos);
    CHECK(error_of([] { parse_config("[grid\n"); }).find("line 1") != std::string::npos);
    CHECK(error_of([] { parse_config("[grid]\njust words\n"); }).find("line 2") !=
          std::string::npos);
    CHECK(error_of([] { parse_config("[solver]\nmode = sideways\n"); }).find("line 2") !=
          std::string::npos);
    CHECK(error_of([] { parse_config("[grid]\nh = 0.01 extra\n"); }).find("line 2") !=
          std::string::npos);
}

TEST_CASE("field validation") {
    RunConfig cfg;

    SUBCASE("nonpositive h") {
        cfg.h = 0.0;
        CHECK_THROWS_AS(validate_config(cfg), ConfigError);
    }
    SUBCASE("tol out of range") {
        cfg.tol = 2.0;
        CHECK_THROWS_AS(validate_config(cfg), ConfigError);
    }
    SUBCASE("zero w_ext") {
        cfg.w_ext = 0;
        CHECK_THROWS_AS(validate_config(cfg), ConfigError);
    }
    SUBCASE("r_target above one") {
        cfg.r_target = 1.5;
        CHECK_THROWS_AS(validate_config(cfg), ConfigError);
    }
    SUBCASE("random amplitude at one") {
        cfg.medium = MediumType::Random;
        cfg.amplitude = 1.0;
        CHECK_THROWS_AS(validate_config(cfg), ConfigError);
    }
    SUBCASE("layered speed and interface counts must pair up") {
        cfg.medium = MediumType::Layered;
        cfg.speeds = {1.0, 2.0};
        cfg.interfaces = {10, 20};
        CHECK_THROWS_AS(validate_config(cfg), ConfigError);
    }
    SUBCASE("file medium needs a path") {
        cfg.medium = MediumType::File;
        CHECK_THROWS_AS(validate_config(cfg), ConfigError);
    }
    SUBCASE("half-set point source") {
        cfg.source_i = 5;
        CHECK_THROWS_AS(validate_config(cfg), ConfigError);
    }
    SUBCASE("negative m_overlap") {
        cfg.m_overlap = -1;
        CHECK_THROWS_AS(validate_config(cfg), ConfigError);
    }
}

TEST_CASE("missing config file is a config error") {
    CHECK_THROWS_AS(load_config("/nonexistent/helmsweep.cfg"), ConfigError);
}
