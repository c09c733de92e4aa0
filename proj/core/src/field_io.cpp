// SPDX-FileCopyrightText: 2026 The helmsweep authors
// SPDX-License-Identifier: Apache-2.0

#include "helmsweep/field_io.hpp"

#include <bit>
#include <cstring>
#include <fstream>

#include "json.hpp"

namespace helmsweep {

namespace {

constexpr const char* kLayout = "complex128-y-outer";

static_assert(sizeof(double) == 8, "field format requires 8-byte doubles");

/// Byte-swaps each 8-byte lane in place when the host is big endian.
void to_little_endian(std::vector<unsigned char>& buf) {
    if constexpr (std::endian::native == std::endian::little) {
        (void)buf;
    } else {
        for (std::size_t p = 0; p + 8 <= buf.size(); p += 8)
            for (std::size_t q = 0; q < 4; ++q) std::swap(buf[p + q], buf[p + 7 - q]);
    }
}

} // namespace

void write_field(const std::string& path, const Field& u, double h) {
    std::vector<unsigned char> buf(u.a.size() * 16);
    std::memcpy(buf.data(), u.a.data(), buf.size());
    to_little_endian(buf);
    {
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("write_field: cannot open " + path);
        out.write(reinterpret_cast<const char*>(buf.data()),
                  static_cast<std::streamsize>(buf.size()));
        if (!out) throw std::runtime_error("write_field: short write to " + path);
    }
    nlohmann::json meta;
    meta["n_x"] = u.nx;
    meta["n_y"] = u.ny;
    meta["h"] = h;
    meta["layout"] = kLayout;
    std::ofstream side(path + ".json", std::ios::trunc);
    if (!side) throw std::runtime_error("write_field: cannot open " + path + ".json");
    side << meta.dump(2) << '\n';
}

Field read_field(const std::string& path, FieldMeta* meta_out) {
    nlohmann::json meta;
    {
        std::ifstream side(path + ".json");
        if (!side) throw std::runtime_error("read_field: missing sidecar " + path + ".json");
        try {
            side >> meta;
        } catch (const nlohmann::json::exception& e) {
            throw std::runtime_error("read_field: bad sidecar: " + std::string(e.what()));
        }
    }
    int nx = 0, ny = 0;
    double h = 0.0;
    std::string layout;
    try {
        nx = meta.at("n_x").get<int>();
        ny = meta.at("n_y").get<int>();
        h = meta.at("h").get<double>();
        layout = meta.at("layout").get<std::string>();
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error("read_field: incomplete sidecar: " + std::string(e.what()));
    }
    if (layout != kLayout) throw std::runtime_error("read_field: unknown layout " + layout);
    if (nx < 1 || ny < 1) throw std::runtime_error("read_field: nonpositive shape in sidecar");

    std::ifstream in(path, std::ios::binary | std::ios::ate);
    if (!in) throw std::runtime_error("read_field: cannot open " + path);
    const auto bytes = static_cast<std::size_t>(in.tellg());
    const std::size_t want = static_cast<std::size_t>(nx) * ny * 16;
    if (bytes != want)
        throw std::runtime_error("read_field: payload is " + std::to_string(bytes) +
                                 " bytes, sidecar implies " + std::to_string(want));
    in.seekg(0);
    std::vector<unsigned char> buf(want);
    in.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(want));
    if (!in) throw std::runtime_error("read_field: short read from " + path);
    to_little_endian(buf);
    Field u(nx, ny);
    std::memcpy(u.a.data(), buf.data(), want);
    if (meta_out) *meta_out = FieldMeta{nx, ny, h};
    return u;
}

} // namespace helmsweep
