// Copyright 2026 The LSR Authors
// SPDX-License-Identifier: Apache-2.0

#include "lsr/raster_io.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <string_view>

namespace lsr {

namespace fs = std::filesystem;

namespace {

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) {
        throw IoError("failed reading " + path.string());
    }
    return std::move(buffer).str();
}

void write_file(const fs::path& path, std::string_view bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open " + path.string() + " for writing");
    }
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    out.close();
    if (!out) {
        throw IoError("failed writing " + path.string());
    }
}

template <typename T>
void put_le(std::string& out, T value) {
    std::array<char, sizeof(T)> bytes;
    std::memcpy(bytes.data(), &value, sizeof(T));
    if constexpr (std::endian::native == std::endian::big) {
        std::reverse(bytes.begin(), bytes.end());
    }
    out.append(bytes.data(), bytes.size());
}

template <typename T>
T get_le(std::string_view in, std::size_t offset) {
    std::array<char, sizeof(T)> bytes;
    std::memcpy(bytes.data(), in.data() + offset, sizeof(T));
    if constexpr (std::endian::native == std::endian::big) {
        std::reverse(bytes.begin(), bytes.end());
    }
    T value;
    std::memcpy(&value, bytes.data(), sizeof(T));
    return value;
}

bool has_binary_magic(std::string_view bytes) {
    return bytes.size() >= sizeof(kBinaryMagic) &&
           std::memcmp(bytes.data(), kBinaryMagic, sizeof(kBinaryMagic)) == 0;
}

bool has_pgm_magic(std::string_view bytes) {
    return bytes.size() >= 2 && bytes[0] == 'P' && (bytes[1] == '5' || bytes[1] == '2');
}

template <typename T>
bool parse_number(std::string_view token, T& out) {
    // from_chars rejects a leading '+', which some writers emit.
    if (!token.empty() && token.front() == '+') {
        token.remove_prefix(1);
    }
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
    return ec == std::errc() && ptr == token.data() + token.size();
}

template <typename T>
std::string format_number(T value) {
    std::array<char, 64> buf;
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    return std::string(buf.data(), ptr);
}

// ---------------------------------------------------------------------------
// ESRI ASCII grid

class LineTokenizer {
public:
    explicit LineTokenizer(std::string_view text) : text_(text) {}

    // Next whitespace separated token; line() reports where it started.
    bool next(std::string_view& token) {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            if (text_[pos_] == '\n') {
                ++line_;
            }
            ++pos_;
        }
        if (pos_ >= text_.size()) {
            return false;
        }
        const std::size_t start = pos_;
        while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        token = text_.substr(start, pos_ - start);
        return true;
    }

    // Peek whether the next token starts a header keyword.
    bool at_keyword() {
        const std::size_t saved_pos = pos_;
        const std::size_t saved_line = line_;
        std::string_view token;
        const bool ok = next(token) && std::isalpha(static_cast<unsigned char>(token.front()));
        pos_ = saved_pos;
        line_ = saved_line;
        return ok;
    }

    std::size_t line() const { return line_; }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
};

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

DemGrid parse_ascii_grid(std::string_view text, const std::string& source) {
    LineTokenizer tok(text);
    std::optional<double> ncols, nrows, cellsize, xll, yll, nodata;
    bool x_is_corner = true;
    bool y_is_corner = true;

    std::string_view key;
    while (tok.at_keyword()) {
        tok.next(key);
        const std::size_t line = tok.line();
        std::string_view value;
        if (!tok.next(value) || tok.line() != line) {
            throw ParseError(source, line, "header key '" + std::string(key) + "' has no value");
        }
        double number = 0.0;
        if (!parse_number(value, number)) {
            throw ParseError(source, line,
                             "header value '" + std::string(value) + "' for '" + std::string(key) +
                                 "' is not a number");
        }
        const std::string k = lower(key);
        if (k == "ncols") {
            ncols = number;
        } else if (k == "nrows") {
            nrows = number;
        } else if (k == "cellsize") {
            cellsize = number;
        } else if (k == "xllcorner" || k == "xllcenter") {
            xll = number;
            x_is_corner = k == "xllcorner";
        } else if (k == "yllcorner" || k == "yllcenter") {
            yll = number;
            y_is_corner = k == "yllcorner";
        } else if (k == "nodata_value") {
            nodata = number;
        } else {
            throw ParseError(source, line, "unknown header key '" + std::string(key) + "'");
        }
    }

    const std::size_t body_line = tok.line();
    auto require = [&](const std::optional<double>& v, const char* name) {
        if (!v) {
            throw ParseError(source, body_line, std::string("missing header key '") + name + "'");
        }
        return *v;
    };
    auto require_count = [&](const std::optional<double>& v, const char* name) {
        const double n = require(v, name);
        if (n < 2 || n != std::floor(n) || n > 1e8) {
            throw ParseError(source, 0, std::string("header '") + name + "' must be an integer >= 2");
        }
        return static_cast<std::size_t>(n);
    };
    const std::size_t cols = require_count(ncols, "ncols");
    const std::size_t rows = require_count(nrows, "nrows");
    const double cs = require(cellsize, "cellsize");
    if (!(cs > 0.0)) {
        throw ParseError(source, 0, "header 'cellsize' must be positive");
    }

    GridGeometry g;
    g.rows = rows;
    g.cols = cols;
    g.cell_size = cs;
    g.origin_x = require(xll, "xllcorner") + (x_is_corner ? 0.5 * cs : 0.0);
    g.origin_y = require(yll, "yllcorner") + (y_is_corner ? 0.5 * cs : 0.0);

    std::optional<float> sentinel;
    if (nodata) {
        sentinel = static_cast<float>(*nodata);
    }

    std::vector<float> values(rows * cols);
    std::size_t count = 0;
    std::string_view token;
    while (tok.next(token)) {
        float v = 0.0f;
        if (!parse_number(token, v)) {
            throw ParseError(source, tok.line(), "value '" + std::string(token) + "' is not a number");
        }
        if (count >= values.size()) {
            throw StructuralError(source + ": more values than nrows x ncols (" +
                                  std::to_string(rows) + " x " + std::to_string(cols) + ")");
        }
        // File rows run north to south; grid row 0 is the southern row.
        const std::size_t file_row = count / cols;
        const std::size_t j = count % cols;
        values[(rows - 1 - file_row) * cols + j] = v;
        ++count;
    }
    if (count != values.size()) {
        throw StructuralError(source + ": header declares " + std::to_string(rows) + " rows x " +
                              std::to_string(cols) + " cols but body holds " +
                              std::to_string(count) + " values (" + std::to_string(count / cols) +
                              " full rows)");
    }
    return DemGrid(g, std::move(values), sentinel);
}

std::string format_ascii_grid(const DemGrid& dem) {
    const GridGeometry& g = dem.geometry();
    std::string out;
    out += "ncols " + std::to_string(g.cols) + "\n";
    out += "nrows " + std::to_string(g.rows) + "\n";
    // Centre registration keeps the origin bit-exact on reload.
    out += "xllcenter " + format_number(g.origin_x) + "\n";
    out += "yllcenter " + format_number(g.origin_y) + "\n";
    out += "cellsize " + format_number(g.cell_size) + "\n";
    std::optional<float> sentinel = dem.nodata();
    if (!sentinel && dem.has_nodata()) {
        sentinel = -9999.0f;
    }
    if (sentinel) {
        out += "NODATA_value " + format_number(*sentinel) + "\n";
    }
    for (std::size_t r = 0; r < g.rows; ++r) {
        const std::size_t i = g.rows - 1 - r;
        for (std::size_t j = 0; j < g.cols; ++j) {
            if (j) {
                out += ' ';
            }
            float v = dem(i, j);
            if (std::isnan(v)) {
                v = *sentinel;
            }
            out += format_number(v);
        }
        out += '\n';
    }
    return out;
}

// ---------------------------------------------------------------------------
// LDEM1 binary

template <typename T>
std::string format_binary(const Grid<T>& grid) {
    const GridGeometry& g = grid.geometry();
    std::string out;
    out.reserve(kBinaryHeaderSize + g.size() * 4);
    out.append(kBinaryMagic, sizeof(kBinaryMagic));
    out.append(2, '\0');
    put_le<std::uint32_t>(out, static_cast<std::uint32_t>(g.rows));
    put_le<std::uint32_t>(out, static_cast<std::uint32_t>(g.cols));
    put_le<double>(out, g.cell_size);
    for (T v : grid.values()) {
        const float f = grid.is_nodata_value(v) ? std::numeric_limits<float>::quiet_NaN()
                                                : static_cast<float>(v);
        put_le<float>(out, f);
    }
    return out;
}

DemGrid parse_binary(std::string_view bytes, const std::string& source) {
    if (bytes.size() < kBinaryHeaderSize) {
        throw StructuralError(source + ": truncated LDEM1 header");
    }
    const auto rows = get_le<std::uint32_t>(bytes, 8);
    const auto cols = get_le<std::uint32_t>(bytes, 12);
    const auto cs = get_le<double>(bytes, 16);
    const std::uint64_t expected =
        kBinaryHeaderSize + std::uint64_t{rows} * std::uint64_t{cols} * sizeof(float);
    if (bytes.size() != expected) {
        throw StructuralError(source + ": header declares " + std::to_string(rows) + " x " +
                              std::to_string(cols) + " values, file size is " +
                              std::to_string(bytes.size()) + " bytes (expected " +
                              std::to_string(expected) + ")");
    }
    GridGeometry g;
    g.rows = rows;
    g.cols = cols;
    g.cell_size = cs;
    try {
        g.validate();
    } catch (const DomainError& e) {
        throw StructuralError(source + ": " + e.what());
    }
    std::vector<float> values(g.size());
    for (std::size_t k = 0; k < values.size(); ++k) {
        values[k] = get_le<float>(bytes, kBinaryHeaderSize + k * sizeof(float));
        if (std::isinf(values[k])) {
            throw StructuralError(source + ": non-finite value at index " + std::to_string(k));
        }
    }
    return DemGrid(g, std::move(values));
}

// ---------------------------------------------------------------------------
// PGM

Raster parse_pgm(std::string_view bytes, const std::string& source) {
    const bool binary = bytes[1] == '5';
    std::size_t pos = 2;
    std::size_t line = 1;
    auto next_header_token = [&](const char* what) {
        while (pos < bytes.size()) {
            const char c = bytes[pos];
            if (c == '#') {
                while (pos < bytes.size() && bytes[pos] != '\n') {
                    ++pos;
                }
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                line += c == '\n';
                ++pos;
            } else {
                break;
            }
        }
        const std::size_t start = pos;
        while (pos < bytes.size() && std::isdigit(static_cast<unsigned char>(bytes[pos]))) {
            ++pos;
        }
        unsigned long value = 0;
        if (start == pos || !parse_number(bytes.substr(start, pos - start), value)) {
            throw ParseError(source, line, std::string("expected PGM ") + what);
        }
        return value;
    };
    const unsigned long width = next_header_token("width");
    const unsigned long height = next_header_token("height");
    const unsigned long maxval = next_header_token("maxval");
    if (width < 2 || height < 2 || maxval == 0 || maxval > 65535) {
        throw ParseError(source, line, "PGM dimensions or maxval out of range");
    }

    GridGeometry g;
    g.rows = height;
    g.cols = width;
    std::vector<double> values(g.size());
    const double scale = 1.0 / static_cast<double>(maxval);
    const std::size_t count = g.size();
    auto store = [&](std::size_t k, unsigned long raw) {
        if (raw > maxval) {
            throw ParseError(source, line, "PGM sample exceeds maxval");
        }
        const std::size_t i = g.rows - 1 - k / g.cols;
        values[i * g.cols + k % g.cols] = static_cast<double>(raw) * scale;
    };

    if (binary) {
        ++pos;  // single whitespace after maxval
        const std::size_t sample_bytes = maxval < 256 ? 1 : 2;
        if (bytes.size() - std::min(pos, bytes.size()) < count * sample_bytes) {
            throw StructuralError(source + ": PGM raster data truncated");
        }
        for (std::size_t k = 0; k < count; ++k) {
            unsigned long raw = static_cast<unsigned char>(bytes[pos + k * sample_bytes]);
            if (sample_bytes == 2) {
                raw = (raw << 8) | static_cast<unsigned char>(bytes[pos + k * 2 + 1]);
            }
            store(k, raw);
        }
    } else {
        for (std::size_t k = 0; k < count; ++k) {
            unsigned long raw = 0;
            try {
                raw = next_header_token("sample");
            } catch (const ParseError&) {
                if (pos >= bytes.size()) {
                    throw StructuralError(source + ": PGM raster data truncated");
                }
                throw;
            }
            store(k, raw);
        }
    }
    return Raster(g, std::move(values));
}

}  // namespace

GridFormat format_for_path(const fs::path& path) {
    const std::string ext = lower(path.extension().string());
    return (ext == ".asc" || ext == ".txt") ? GridFormat::EsriAscii : GridFormat::Binary;
}

DemGrid load_dem(const fs::path& path) {
    const std::string bytes = read_file(path);
    const std::string source = path.string();
    if (has_binary_magic(bytes)) {
        return parse_binary(bytes, source);
    }
    if (has_pgm_magic(bytes)) {
        throw ParseError(source, 1, "PGM is accepted for albedo rasters only, not elevations");
    }
    return parse_ascii_grid(bytes, source);
}

void save_dem(const DemGrid& dem, const fs::path& path) { save_dem(dem, path, format_for_path(path)); }

void save_dem(const DemGrid& dem, const fs::path& path, GridFormat format) {
    write_file(path, format == GridFormat::EsriAscii ? format_ascii_grid(dem) : format_binary(dem));
}

Raster load_raster(const fs::path& path) {
    const std::string bytes = read_file(path);
    const std::string source = path.string();
    if (has_pgm_magic(bytes)) {
        return parse_pgm(bytes, source);
    }
    if (has_binary_magic(bytes)) {
        return to_raster(parse_binary(bytes, source));
    }
    return to_raster(parse_ascii_grid(bytes, source));
}

void save_raster(const Raster& raster, const fs::path& path) { write_file(path, format_binary(raster)); }

Raster register_to(const Raster& raster, const GridGeometry& geometry) {
    if (raster.rows() != geometry.rows || raster.cols() != geometry.cols) {
        throw ConfigError("", "raster is " + std::to_string(raster.rows()) + "x" +
                                  std::to_string(raster.cols()) + " but the DEM is " +
                                  std::to_string(geometry.rows) + "x" +
                                  std::to_string(geometry.cols));
    }
    return Raster(geometry, std::vector<double>(raster.values().begin(), raster.values().end()));
}

}  // namespace lsr
