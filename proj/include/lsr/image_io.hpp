// Copyright 2026 The LSR Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "lsr/render.hpp"

namespace lsr {

struct Gray8Image {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels;  // row-major, top row first
};

/// Binary PGM: "P5\n<w> <h>\n255\n" followed by the raw bytes.
std::string encode_pgm(const Gray8Image& image);
void write_pgm(const Gray8Image& image, const std::filesystem::path& path);
Gray8Image read_pgm8(const std::filesystem::path& path);

/// Radiance as an LDEM1 raster (unit cells), image rows in top-to-bottom order.
void save_radiance(const ImageBuffer& image, const std::filesystem::path& path);

/// Metadata sidecar as pretty-printed JSON text.
std::string metadata_json(const RenderMetadata& metadata, double exposure_scale);
void write_metadata(const RenderMetadata& metadata, double exposure_scale,
                    const std::filesystem::path& path);

/// Writes `<stem>.pgm`-style image at `image_path` and its JSON sidecar next
/// to it (same path with a .json extension).
void write_frame(const ImageBuffer& image, double exposure_scale,
                 const std::filesystem::path& image_path);

}  // namespace lsr
