// Copyright 2026 The LSR Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "lsr/camera.hpp"
#include "lsr/grid.hpp"
#include "lsr/horizon.hpp"
#include "lsr/illumination.hpp"
#include "lsr/photometry.hpp"
#include "lsr/shadow.hpp"
#include "lsr/terrain.hpp"

namespace lsr {

/// DEM plus every map derived from or registered to it. Immutable once built
/// and shared between scenes.
struct TerrainProducts {
    DemGrid dem;
    Raster albedo;
    NormalMap normals;
    std::optional<HorizonMap> horizon;
};

/// Builds normals (and a horizon map when horizon_azimuths > 0). `albedo`
/// must be registered to the DEM; when absent a uniform raster is used.
std::shared_ptr<const TerrainProducts> make_terrain(DemGrid dem, std::optional<Raster> albedo,
                                                    double uniform_albedo = 1.0,
                                                    std::size_t horizon_azimuths = 0);

struct Scene {
    std::shared_ptr<const TerrainProducts> terrain;
    SunState sun;
    Intrinsics intrinsics;
    Pose pose;
    ReflectanceModel model;
    RenderOptions options;
};

struct RenderMetadata {
    SunState sun;
    Pose pose;
    ReflectanceModel model;
    ShadowMethod shadow_method = ShadowMethod::Raymarch;
    std::size_t hit_pixels = 0;
    std::optional<double> mean_phase_deg;     // over hit pixels
    std::optional<double> center_slant_range;  // boresight range, meters
    std::optional<double> center_gsd;          // meters per pixel at the boresight
};

struct ImageBuffer {
    int width = 0;
    int height = 0;
    std::vector<float> radiance;  // row-major, row 0 at the top of the image
    RenderMetadata metadata;

    float at(int u, int v) const { return radiance[static_cast<std::size_t>(v) * width + u]; }
};

/// Renders one image, fanning rows out over `workers` OpenMP threads
/// (0 = runtime default). Output is bit-identical for every worker count.
/// Throws ConfigError for an incomplete or unregistered scene.
ImageBuffer render(const Scene& scene, int workers = 0);

/// Single-threaded reference of the same kernel.
ImageBuffer render_serial(const Scene& scene);

/// DN = round(clamp(radiance * exposure_scale, 0, 1) * 255).
std::vector<std::uint8_t> quantize(const ImageBuffer& image, double exposure_scale);

}  // namespace lsr
