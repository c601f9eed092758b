// Copyright 2026 The LSR Authors
// SPDX-License-Identifier: Apache-2.0

#include "lsr/render.hpp"

#include <algorithm>
#include <cmath>
#include <omp.h>
#include <span>

#include <spdlog/spdlog.h>

#include "lsr/intersect.hpp"

namespace lsr {

std::shared_ptr<const TerrainProducts> make_terrain(DemGrid dem, std::optional<Raster> albedo,
                                                    double uniform_albedo,
                                                    std::size_t horizon_azimuths) {
    auto products = std::make_shared<TerrainProducts>();
    const GridGeometry geometry = dem.geometry();
    products->normals = derive_normal_map(dem);
    if (horizon_azimuths > 0) {
        products->horizon = compute_horizon_map(dem, horizon_azimuths);
    }
    products->albedo = albedo ? std::move(*albedo) : Raster(geometry, uniform_albedo);
    products->dem = std::move(dem);
    return products;
}

namespace {

struct RowStats {
    std::size_t hits = 0;
    double phase_sum = 0.0;
};

// Everything the per-pixel kernel needs, resolved once per render.
class RenderContext {
public:
    explicit RenderContext(const Scene& scene)
        : scene_(scene),
          terrain_(checked_terrain(scene)),
          tracer_(terrain_.dem),
          caster_(terrain_.dem, terrain_.horizon ? &*terrain_.horizon : nullptr, scene.options),
          rotation_(rotation_of(scene.pose)),
          sun_dir_(sun_direction(scene.sun)),
          bias_(kShadowBiasCells * terrain_.dem.cell_size()),
          range_to_light_(scene.options.light_distance.value_or(1.0)) {}

    void render_row(int v, std::span<float> out, RowStats& stats) const {
        const Intrinsics& in = scene_.intrinsics;
        for (int u = 0; u < in.width_px; ++u) {
            out[static_cast<std::size_t>(u)] = static_cast<float>(shade_pixel(u, v, stats));
        }
    }

    RenderMetadata base_metadata() const {
        RenderMetadata meta;
        meta.sun = scene_.sun;
        meta.pose = scene_.pose;
        meta.model = scene_.model;
        meta.shadow_method = scene_.options.shadow_method;
        const Intrinsics& in = scene_.intrinsics;
        const Ray boresight = image_plane_ray(in, scene_.pose, 0.5 * in.width_px, 0.5 * in.height_px);
        if (auto hit = tracer_.intersect(boresight, scene_.options.max_range); hit && hit->t > 0.0) {
            meta.center_slant_range = hit->t;
            meta.center_gsd = ground_sample_distance(in, hit->t);
        }
        return meta;
    }

private:
    static const TerrainProducts& checked_terrain(const Scene& scene) {
        if (!scene.terrain) {
            throw ConfigError("terrain", "scene has no terrain");
        }
        const TerrainProducts& t = *scene.terrain;
        const GridGeometry& g = t.dem.geometry();
        if (t.albedo.rows() != g.rows || t.albedo.cols() != g.cols) {
            throw ConfigError("albedo", "albedo raster is " + std::to_string(t.albedo.rows()) + "x" +
                                            std::to_string(t.albedo.cols()) + " but the DEM is " +
                                            std::to_string(g.rows) + "x" + std::to_string(g.cols));
        }
        if (t.normals.geometry() != g) {
            throw ConfigError("normals", "normal map is not registered to the DEM");
        }
        for (double a : t.albedo.values()) {
            if (!std::isnan(a) && !(a >= 0.0 && a <= 1.0)) {
                throw ConfigError("albedo", "albedo values must lie in [0, 1]");
            }
        }
        try {
            scene.intrinsics.validate();
        } catch (const DomainError& e) {
            throw ConfigError("camera", e.what());
        }
        try {
            scene.sun.validate();
        } catch (const DomainError& e) {
            throw ConfigError("sun", e.what());
        }
        try {
            scene.model.validate();
        } catch (const DomainError& e) {
            throw ConfigError("model", e.what());
        }
        try {
            scene.options.validate();
        } catch (const DomainError& e) {
            throw ConfigError("render", e.what());
        }
        if (scene.options.shadow_method == ShadowMethod::HorizonMap && !t.horizon) {
            throw ConfigError("render.shadow_method", "horizon shadows need a precomputed horizon map");
        }
        return t;
    }

    double shade_pixel(int u, int v, RowStats& stats) const {
        const Ray ray = pixel_ray(scene_.intrinsics, scene_.pose.position, rotation_, u, v);
        const auto hit = tracer_.intersect(ray, scene_.options.max_range);
        if (!hit) {
            return scene_.options.background;
        }
        if (hit->nodata) {
            return 0.0;
        }
        const double x = hit->point.x();
        const double y = hit->point.y();
        const auto normal = terrain_.normals.sample(x, y);
        const double albedo = sample_bilinear(terrain_.albedo, x, y);
        if (!normal || std::isnan(albedo)) {
            return 0.0;
        }
        const Eigen::Vector3d view = -ray.direction;

        ShadingGeometry geom;
        geom.cos_incidence = normal->dot(sun_dir_);
        geom.cos_emission = normal->dot(view);
        geom.range_to_light = range_to_light_;
        // Facets turned away from the sun are dark under every law.
        geom.in_shadow = geom.cos_incidence <= 0.0 ||
                         caster_.in_shadow(hit->point + bias_ * *normal, sun_dir_);

        ++stats.hits;
        stats.phase_sum += phase_angle(sun_dir_, view);
        return shade(scene_.model, albedo, scene_.sun.intensity, geom);
    }

    const Scene& scene_;
    const TerrainProducts& terrain_;
    HeightfieldTracer tracer_;
    ShadowCaster caster_;
    Eigen::Matrix3d rotation_;
    Eigen::Vector3d sun_dir_;
    double bias_;
    double range_to_light_;
};

ImageBuffer allocate(const Scene& scene) {
    ImageBuffer image;
    image.width = scene.intrinsics.width_px;
    image.height = scene.intrinsics.height_px;
    image.radiance.assign(static_cast<std::size_t>(image.width) * image.height, 0.0f);
    return image;
}

void finish(const RenderContext& ctx, ImageBuffer& image, std::span<const RowStats> rows) {
    image.metadata = ctx.base_metadata();
    // Reduce in row order so the sum does not depend on scheduling.
    double phase_sum = 0.0;
    for (const RowStats& r : rows) {
        image.metadata.hit_pixels += r.hits;
        phase_sum += r.phase_sum;
    }
    if (image.metadata.hit_pixels > 0) {
        image.metadata.mean_phase_deg = phase_sum / static_cast<double>(image.metadata.hit_pixels);
    }
}

}  // namespace

ImageBuffer render(const Scene& scene, int workers) {
    RenderContext ctx(scene);
    ImageBuffer image = allocate(scene);
    std::vector<RowStats> rows(static_cast<std::size_t>(image.height));
    const int threads = workers > 0 ? workers : omp_get_max_threads();
    const auto width = static_cast<std::size_t>(image.width);
    spdlog::debug("render {}x{} on {} threads", image.width, image.height, threads);

    // Exceptions must not cross the parallel region.
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (int v = 0; v < image.height; ++v) {
        try {
            ctx.render_row(v, std::span<float>(image.radiance).subspan(v * width, width),
                           rows[static_cast<std::size_t>(v)]);
        } catch (...) {
#pragma omp critical(lsr_render_failure)
            if (!failure) {
                failure = std::current_exception();
            }
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    finish(ctx, image, rows);
    return image;
}

ImageBuffer render_serial(const Scene& scene) {
    RenderContext ctx(scene);
    ImageBuffer image = allocate(scene);
    std::vector<RowStats> rows(static_cast<std::size_t>(image.height));
    const auto width = static_cast<std::size_t>(image.width);
    for (int v = 0; v < image.height; ++v) {
        ctx.render_row(v, std::span<float>(image.radiance).subspan(v * width, width),
                       rows[static_cast<std::size_t>(v)]);
    }
    finish(ctx, image, rows);
    return image;
}

std::vector<std::uint8_t> quantize(const ImageBuffer& image, double exposure_scale) {
    if (!(exposure_scale > 0.0)) {
        throw DomainError("exposure_scale must be positive");
    }
    std::vector<std::uint8_t> out(image.radiance.size());
    for (std::size_t k = 0; k < out.size(); ++k) {
        const double scaled = std::clamp(static_cast<double>(image.radiance[k]) * exposure_scale, 0.0, 1.0);
        out[k] = static_cast<std::uint8_t>(std::lround(scaled * 255.0));
    }
    return out;
}

}  // namespace lsr
