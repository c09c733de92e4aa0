// SPDX-FileCopyrightText: 2026 The helmsweep authors
// SPDX-License-Identifier: Apache-2.0

#include "helmsweep/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace helmsweep {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(int line_no, const std::string& what) {
    throw ConfigError("config line " + std::to_string(line_no) + ": " + what);
}

double parse_double(const std::string& v, int line_no) {
    try {
        std::size_t pos = 0;
        const double d = std::stod(v, &pos);
        if (pos != v.size()) fail(line_no, "trailing characters in number '" + v + "'");
        return d;
    } catch (const std::logic_error&) {
        fail(line_no, "bad number '" + v + "'");
    }
}

long long parse_int(const std::string& v, int line_no) {
    try {
        std::size_t pos = 0;
        const long long n = std::stoll(v, &pos);
        if (pos != v.size()) fail(line_no, "trailing characters in integer '" + v + "'");
        return n;
    } catch (const std::logic_error&) {
        fail(line_no, "bad integer '" + v + "'");
    }
}

std::uint64_t parse_u64(const std::string& v, int line_no) {
    try {
        std::size_t pos = 0;
        const unsigned long long n = std::stoull(v, &pos);
        if (pos != v.size()) fail(line_no, "trailing characters in integer '" + v + "'");
        return n;
    } catch (const std::logic_error&) {
        fail(line_no, "bad unsigned integer '" + v + "'");
    }
}

std::vector<std::string> split_list(const std::string& v) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(v);
    while (std::getline(in, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

} // namespace

RunConfig parse_config(const std::string& text) {
    RunConfig cfg;
    std::string section;
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = raw;
        const auto hash = line.find_first_of("#;");
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') fail(line_no, "unterminated section header");
            section = trim(line.substr(1, line.size() - 2));
            if (section != "grid" && section != "medium" && section != "source" &&
                section != "solver" && section != "output")
                fail(line_no, "unknown section '" + section + "'");
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) fail(line_no, "expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (key.empty()) fail(line_no, "empty key");
        if (section.empty()) fail(line_no, "key outside any section");

        if (section == "grid") {
            if (key == "n_core_x") cfg.n_core_x = static_cast<int>(parse_int(val, line_no));
            else if (key == "n_core_y") cfg.n_core_y = static_cast<int>(parse_int(val, line_no));
            else if (key == "h") cfg.h = parse_double(val, line_no);
            else if (key == "frequency") cfg.frequency = parse_double(val, line_no);
            else if (key == "y_boundary") {
                if (val == "pml") cfg.y_boundary = YBoundary::Pml;
                else if (val == "dirichlet") cfg.y_boundary = YBoundary::Dirichlet;
                else fail(line_no, "y_boundary must be pml or dirichlet");
            } else fail(line_no, "unknown grid key '" + key + "'");
        } else if (section == "medium") {
            if (key == "type") {
                if (val == "constant") cfg.medium = MediumType::Constant;
                else if (val == "random") cfg.medium = MediumType::Random;
                else if (val == "layered") cfg.medium = MediumType::Layered;
                else if (val == "file") cfg.medium = MediumType::File;
                else fail(line_no, "unknown medium type '" + val + "'");
            } else if (key == "c") cfg.c0 = parse_double(val, line_no);
            else if (key == "amplitude") cfg.amplitude = parse_double(val, line_no);
            else if (key == "smoothing_passes")
                cfg.smoothing_passes = static_cast<int>(parse_int(val, line_no));
            else if (key == "seed") cfg.seed = parse_u64(val, line_no);
            else if (key == "speeds") {
                cfg.speeds.clear();
                for (const std::string& s : split_list(val))
                    cfg.speeds.push_back(parse_double(s, line_no));
            } else if (key == "interfaces") {
                cfg.interfaces.clear();
                for (const std::string& s : split_list(val))
                    cfg.interfaces.push_back(static_cast<int>(parse_int(s, line_no)));
            } else if (key == "path") cfg.medium_path = val;
            else fail(line_no, "unknown medium key '" + key + "'");
        } else if (section == "source") {
            if (key == "type") {
                if (val == "point") cfg.source = SourceType::Point;
                else if (val == "file") cfg.source = SourceType::File;
                else fail(line_no, "unknown source type '" + val + "'");
            } else if (key == "i") cfg.source_i = static_cast<int>(parse_int(val, line_no));
            else if (key == "j") cfg.source_j = static_cast<int>(parse_int(val, line_no));
            else if (key == "path") cfg.source_path = val;
            else fail(line_no, "unknown source key '" + key + "'");
        } else if (section == "solver") {
            if (key == "method") {
                if (val == "pml") cfg.method = Method::Pml;
                else if (val == "robin") cfg.method = Method::Robin;
                else fail(line_no, "method must be pml or robin");
            } else if (key == "mode") {
                if (val == "reduced") cfg.mode = SolveMode::Reduced;
                else if (val == "full") cfg.mode = SolveMode::Full;
                else fail(line_no, "mode must be reduced or full");
            } else if (key == "J") cfg.J = static_cast<int>(parse_int(val, line_no));
            else if (key == "w_pml") cfg.w_pml = static_cast<int>(parse_int(val, line_no));
            else if (key == "w_ext") cfg.w_ext = static_cast<int>(parse_int(val, line_no));
            else if (key == "r_target") cfg.r_target = parse_double(val, line_no);
            else if (key == "m_overlap") cfg.m_overlap = static_cast<int>(parse_int(val, line_no));
            else if (key == "tol") cfg.tol = parse_double(val, line_no);
            else if (key == "max_iter") cfg.max_iter = static_cast<int>(parse_int(val, line_no));
            else fail(line_no, "unknown solver key '" + key + "'");
        } else { // output
            if (key == "field") cfg.out_field = val;
            else if (key == "summary") cfg.out_summary = val;
            else fail(line_no, "unknown output key '" + key + "'");
        }
    }
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

std::string serialize_config(const RunConfig& cfg) {
    std::ostringstream out;
    out.precision(17);
    out << "[grid]\n";
    out << "n_core_x = " << cfg.n_core_x << "\n";
    out << "n_core_y = " << cfg.n_core_y << "\n";
    out << "h = " << cfg.h << "\n";
    out << "frequency = " << cfg.frequency << "\n";
    out << "y_boundary = " << (cfg.y_boundary == YBoundary::Pml ? "pml" : "dirichlet") << "\n";
    out << "\n[medium]\n";
    switch (cfg.medium) {
    case MediumType::Constant: out << "type = constant\n"; break;
    case MediumType::Random: out << "type = random\n"; break;
    case MediumType::Layered: out << "type = layered\n"; break;
    case MediumType::File: out << "type = file\n"; break;
    }
    out << "c = " << cfg.c0 << "\n";
    out << "amplitude = " << cfg.amplitude << "\n";
    out << "smoothing_passes = " << cfg.smoothing_passes << "\n";
    out << "seed = " << cfg.seed << "\n";
    if (!cfg.speeds.empty()) {
        out << "speeds = ";
        for (std::size_t b = 0; b < cfg.speeds.size(); ++b)
            out << (b ? ", " : "") << cfg.speeds[b];
        out << "\n";
    }
    if (!cfg.interfaces.empty()) {
        out << "interfaces = ";
        for (std::size_t b = 0; b < cfg.interfaces.size(); ++b)
            out << (b ? ", " : "") << cfg.interfaces[b];
        out << "\n";
    }
    if (!cfg.medium_path.empty()) out << "path = " << cfg.medium_path << "\n";
    out << "\n[source]\n";
    out << "type = " << (cfg.source == SourceType::Point ? "point" : "file") << "\n";
    if (cfg.source_i >= 0) out << "i = " << cfg.source_i << "\n";
    if (cfg.source_j >= 0) out << "j = " << cfg.source_j << "\n";
    if (!cfg.source_path.empty()) out << "path = " << cfg.source_path << "\n";
    out << "\n[solver]\n";
    out << "method = " << (cfg.method == Method::Pml ? "pml" : "robin") << "\n";
    out << "mode = " << (cfg.mode == SolveMode::Reduced ? "reduced" : "full") << "\n";
    out << "J = " << cfg.J << "\n";
    out << "w_pml = " << cfg.w_pml << "\n";
    if (cfg.w_ext >= 0) out << "w_ext = " << cfg.w_ext << "\n";
    out << "r_target = " << cfg.r_target << "\n";
    out << "m_overlap = " << cfg.m_overlap << "\n";
    out << "tol = " << cfg.tol << "\n";
    out << "max_iter = " << cfg.max_iter << "\n";
    out << "\n[output]\n";
    if (!cfg.out_field.empty()) out << "field = " << cfg.out_field << "\n";
    if (!cfg.out_summary.empty()) out << "summary = " << cfg.out_summary << "\n";
    return out.str();
}

void validate_config(const RunConfig& cfg) {
    if (cfg.n_core_x < 1 || cfg.n_core_y < 1) throw ConfigError("interior size must be positive");
    if (cfg.h <= 0.0) throw ConfigError("h must be positive");
    if (cfg.frequency <= 0.0) throw ConfigError("frequency must be positive");
    if (!(cfg.tol > 0.0 && cfg.tol < 1.0)) throw ConfigError("tol must lie in (0, 1)");
    if (cfg.max_iter < 1) throw ConfigError("max_iter must be positive");
    if (cfg.J < 1) throw ConfigError("J must be positive");
    if (cfg.w_pml < 1) throw ConfigError("w_pml must be positive");
    if (cfg.w_ext == 0 || cfg.w_ext < -1) throw ConfigError("w_ext must be positive");
    if (!(cfg.r_target > 0.0 && cfg.r_target <= 1.0))
        throw ConfigError("r_target must lie in (0, 1]");
    if (cfg.m_overlap < 0) throw ConfigError("m_overlap must be nonnegative");
    switch (cfg.medium) {
    case MediumType::Constant:
        if (cfg.c0 <= 0.0) throw ConfigError("constant speed must be positive");
        break;
    case MediumType::Random:
        if (cfg.amplitude < 0.0 || cfg.amplitude >= 1.0)
            throw ConfigError("random medium amplitude must lie in [0, 1)");
        if (cfg.smoothing_passes < 0) throw ConfigError("smoothing_passes must be nonnegative");
        break;
    case MediumType::Layered:
        if (cfg.speeds.empty()) throw ConfigError("layered medium needs speeds");
        if (cfg.interfaces.size() + 1 != cfg.speeds.size())
            throw ConfigError("layered medium needs one more speed than interfaces");
        break;
    case MediumType::File:
        if (cfg.medium_path.empty()) throw ConfigError("file medium needs a path");
        break;
    }
    if (cfg.source == SourceType::File && cfg.source_path.empty())
        throw ConfigError("file source needs a path");
    if ((cfg.source_i >= 0) != (cfg.source_j >= 0))
        throw ConfigError("set both source indices or neither");
}

} // namespace helmsweep
