// Copyright 2026 The LSR Authors
// SPDX-License-Identifier: Apache-2.0

#include "lsr/image_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "lsr/raster_io.hpp"

namespace lsr {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

std::string encode_pgm(const Gray8Image& image) {
    std::string out = "P5\n" + std::to_string(image.width) + " " + std::to_string(image.height) + "\n255\n";
    out.append(reinterpret_cast<const char*>(image.pixels.data()), image.pixels.size());
    return out;
}

void write_pgm(const Gray8Image& image, const fs::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open " + path.string() + " for writing");
    }
    const std::string bytes = encode_pgm(image);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) {
        throw IoError("failed writing " + path.string());
    }
}

Gray8Image read_pgm8(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open " + path.string());
    }
    std::string magic;
    int maxval = 0;
    Gray8Image image;
    in >> magic >> image.width >> image.height >> maxval;
    if (magic != "P5" || !in || maxval != 255 || image.width <= 0 || image.height <= 0) {
        throw ParseError(path.string(), 1, "not an 8-bit binary PGM");
    }
    in.get();
    image.pixels.resize(static_cast<std::size_t>(image.width) * image.height);
    in.read(reinterpret_cast<char*>(image.pixels.data()), static_cast<std::streamsize>(image.pixels.size()));
    if (!in) {
        throw StructuralError(path.string() + ": PGM raster data truncated");
    }
    return image;
}

void save_radiance(const ImageBuffer& image, const fs::path& path) {
    GridGeometry g;
    g.rows = static_cast<std::size_t>(image.height);
    g.cols = static_cast<std::size_t>(image.width);
    std::vector<double> values(image.radiance.begin(), image.radiance.end());
    save_raster(Raster(g, std::move(values)), path);
}

std::string metadata_json(const RenderMetadata& m, double exposure_scale) {
    ordered_json j;
    j["sun"] = {{"elevation_deg", m.sun.elevation_deg},
                {"azimuth_deg", m.sun.azimuth_deg},
                {"intensity", m.sun.intensity}};
    j["pose"] = {{"position_m", {m.pose.position.x(), m.pose.position.y(), m.pose.position.z()}},
                 {"roll_deg", m.pose.roll},
                 {"pitch_deg", m.pose.pitch},
                 {"yaw_deg", m.pose.yaw}};
    j["model"] = {{"kind", std::string(reflectance_key(m.model.kind))}, {"B0", m.model.b0}};
    j["shadow_method"] = std::string(shadow_method_key(m.shadow_method));
    j["exposure_scale"] = exposure_scale;
    j["hit_pixels"] = m.hit_pixels;
    auto optional = [](const std::optional<double>& v) { return v ? ordered_json(*v) : ordered_json(); };
    j["mean_phase_angle_deg"] = optional(m.mean_phase_deg);
    j["center_slant_range_m"] = optional(m.center_slant_range);
    j["center_gsd_m"] = optional(m.center_gsd);
    return j.dump(2) + "\n";
}

void write_metadata(const RenderMetadata& metadata, double exposure_scale, const fs::path& path) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) {
        throw IoError("cannot open " + path.string() + " for writing");
    }
    out << metadata_json(metadata, exposure_scale);
    if (!out) {
        throw IoError("failed writing " + path.string());
    }
}

void write_frame(const ImageBuffer& image, double exposure_scale, const fs::path& image_path) {
    write_pgm(Gray8Image{image.width, image.height, quantize(image, exposure_scale)}, image_path);
    fs::path sidecar = image_path;
    sidecar.replace_extension(".json");
    write_metadata(image.metadata, exposure_scale, sidecar);
}

}  // namespace lsr
