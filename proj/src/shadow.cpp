// Copyright 2026 The LSR Authors
// SPDX-License-Identifier: Apache-2.0

#include "lsr/shadow.hpp"

#include <algorithm>
#include <cmath>

#include "lsr/camera.hpp"

namespace lsr {

std::string_view shadow_method_key(ShadowMethod method) {
    switch (method) {
        case ShadowMethod::Raymarch:
            return "raymarch";
        case ShadowMethod::HorizonMap:
            return "horizon";
        case ShadowMethod::None:
            return "none";
    }
    return "raymarch";
}

std::optional<ShadowMethod> parse_shadow_method(std::string_view key) {
    if (key == "raymarch") {
        return ShadowMethod::Raymarch;
    }
    if (key == "horizon" || key == "horizon_map") {
        return ShadowMethod::HorizonMap;
    }
    if (key == "none") {
        return ShadowMethod::None;
    }
    return std::nullopt;
}

void RenderOptions::validate() const {
    if (shadow_step && !(*shadow_step > 0.0)) {
        throw DomainError("shadow_step must be positive");
    }
    if (!(max_range > 0.0)) {
        throw DomainError("max_range must be positive");
    }
    if (light_distance && !(*light_distance > 0.0)) {
        throw DomainError("light_distance must be positive");
    }
    if (!std::isfinite(background) || background < 0.0) {
        throw DomainError("background radiance must be finite and non-negative");
    }
}

ShadowCaster::ShadowCaster(const DemGrid& dem, const HorizonMap* horizon, const RenderOptions& options)
    : dem_(dem),
      horizon_(horizon),
      method_(options.shadow_method),
      step_(options.shadow_step.value_or(0.5 * dem.cell_size())),
      max_range_(options.max_range),
      z_top_(elevation_range(dem).max) {
    options.validate();
    if (method_ == ShadowMethod::HorizonMap) {
        if (horizon_ == nullptr) {
            throw DomainError("horizon shadow method needs a horizon map");
        }
        if (horizon_->geometry().rows != dem.rows() || horizon_->geometry().cols != dem.cols()) {
            throw DomainError("horizon map is not registered to the DEM");
        }
    }
}

bool ShadowCaster::in_shadow(const Eigen::Vector3d& point, const Eigen::Vector3d& sun_dir) const {
    if (sun_dir.z() <= 0.0) {
        return true;
    }
    switch (method_) {
        case ShadowMethod::Raymarch:
            return march(point, sun_dir);
        case ShadowMethod::HorizonMap:
            return lookup(point, sun_dir);
        case ShadowMethod::None:
            return false;
    }
    return false;
}

bool ShadowCaster::march(const Eigen::Vector3d& point, const Eigen::Vector3d& sun_dir) const {
    const Eigen::Vector3d start = point + kShadowBiasCells * dem_.cell_size() * sun_dir;
    for (std::size_t k = 1;; ++k) {
        const double d = static_cast<double>(k) * step_;
        if (d > max_range_) {
            return false;
        }
        const Eigen::Vector3d q = start + d * sun_dir;
        if (q.z() > z_top_) {
            return false;
        }
        auto terrain = try_sample_bilinear(dem_, q.x(), q.y());
        if (!terrain) {
            return false;
        }
        if (!std::isnan(*terrain) && *terrain > q.z()) {
            return true;
        }
    }
}

bool ShadowCaster::lookup(const Eigen::Vector3d& point, const Eigen::Vector3d& sun_dir) const {
    const GridGeometry& g = dem_.geometry();
    auto nearest = [&](double f, std::size_t n) {
        return static_cast<std::size_t>(std::clamp(std::round(f), 0.0, static_cast<double>(n - 1)));
    };
    const std::size_t j = nearest((point.x() - g.origin_x) / g.cell_size, g.cols);
    const std::size_t i = nearest((point.y() - g.origin_y) / g.cell_size, g.rows);
    const double azimuth = rad_to_deg(std::atan2(sun_dir.x(), sun_dir.y()));
    const double elevation = rad_to_deg(std::asin(std::clamp(sun_dir.z(), -1.0, 1.0)));
    const float horizon = horizon_->angle_deg(i, j, horizon_->sector_for_azimuth(azimuth));
    return !std::isnan(horizon) && elevation < horizon;
}

bool shadow_test(const DemGrid& dem, const HorizonMap* horizon, const Eigen::Vector3d& point,
                 const Eigen::Vector3d& sun_dir, const RenderOptions& options) {
    return ShadowCaster(dem, horizon, options).in_shadow(point, sun_dir);
}

}  // namespace lsr
