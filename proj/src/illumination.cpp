// Copyright 2026 The LSR Authors
// SPDX-License-Identifier: Apache-2.0

#include "lsr/illumination.hpp"

#include <algorithm>
#include <cmath>

#include "lsr/camera.hpp"
#include "lsr/error.hpp"

namespace lsr {

void SunState::validate() const {
    if (!(elevation_deg >= -90.0 && elevation_deg <= 90.0)) {
        throw DomainError("sun elevation must lie in [-90, 90] degrees");
    }
    if (!std::isfinite(azimuth_deg)) {
        throw DomainError("sun azimuth must be finite");
    }
    if (!(intensity >= 0.0) || !std::isfinite(intensity)) {
        throw DomainError("sun intensity must be finite and non-negative");
    }
}

Eigen::Vector3d sun_direction(const SunState& sun) {
    const double el = deg_to_rad(sun.elevation_deg);
    const double az = deg_to_rad(sun.azimuth_deg);
    // Exact zeros for cardinal directions keep marches on edge rows in the grid.
    auto snap = [](double v) { return std::abs(v) < 1e-12 ? 0.0 : v; };
    const double c = snap(std::cos(el));
    return {snap(std::sin(az)) * c, snap(std::cos(az)) * c, std::sin(el)};
}

double phase_angle(const Eigen::Vector3d& sun_dir, const Eigen::Vector3d& view_dir) {
    if (std::abs(sun_dir.norm() - 1.0) > 1e-6 || std::abs(view_dir.norm() - 1.0) > 1e-6) {
        throw DomainError("phase_angle needs unit vectors");
    }
    return rad_to_deg(std::acos(std::clamp(sun_dir.dot(view_dir), -1.0, 1.0)));
}

SunState sun_for_nadir_phase(double phase_deg, double azimuth_deg, double intensity) {
    if (!(phase_deg >= 0.0 && phase_deg <= 180.0)) {
        throw DomainError("phase angle must lie in [0, 180] degrees");
    }
    SunState sun{90.0 - phase_deg, azimuth_deg, intensity};
    sun.validate();
    return sun;
}

}  // namespace lsr
