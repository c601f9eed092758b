// Copyright 2026 The LSR Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string_view>

#include <Eigen/Core>

#include "lsr/grid.hpp"
#include "lsr/horizon.hpp"
#include "lsr/terrain.hpp"

namespace lsr {

enum class ShadowMethod { Raymarch, HorizonMap, None };

/// "raymarch", "horizon", "none". Parsing also accepts "horizon_map".
std::string_view shadow_method_key(ShadowMethod method);
std::optional<ShadowMethod> parse_shadow_method(std::string_view key);

struct RenderOptions {
    ShadowMethod shadow_method = ShadowMethod::Raymarch;
    std::optional<double> shadow_step;  // meters; defaults to cell_size / 2
    double max_range = 1e7;             // meters
    double background = 0.0;            // radiance of miss pixels
    std::optional<double> light_distance;  // finite light range for the Lommel-Seeliger 1/r^2

    /// Throws DomainError for non-positive step or range.
    void validate() const;
};

/// Self-intersection lift applied before shadow rays, as a fraction of cell size.
inline constexpr double kShadowBiasCells = 1e-3;

/// Sun-visibility test against a DEM, by marching toward the sun or by
/// looking up a precomputed horizon map. Holds references; the DEM and
/// horizon map must outlive it.
class ShadowCaster {
public:
    ShadowCaster(const DemGrid& dem, const HorizonMap* horizon, const RenderOptions& options);

    /// True when `point` cannot see the sun along `sun_dir` (unit, toward sun).
    bool in_shadow(const Eigen::Vector3d& point, const Eigen::Vector3d& sun_dir) const;

    double step() const { return step_; }

private:
    bool march(const Eigen::Vector3d& point, const Eigen::Vector3d& sun_dir) const;
    bool lookup(const Eigen::Vector3d& point, const Eigen::Vector3d& sun_dir) const;

    const DemGrid& dem_;
    const HorizonMap* horizon_;
    ShadowMethod method_;
    double step_;
    double max_range_;
    double z_top_;
};

/// Single query; builds a ShadowCaster. Throws DomainError when the horizon
/// method is requested without a map or with a map of different shape.
bool shadow_test(const DemGrid& dem, const HorizonMap* horizon, const Eigen::Vector3d& point,
                 const Eigen::Vector3d& sun_dir, const RenderOptions& options);

}  // namespace lsr
