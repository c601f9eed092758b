// Copyright 2026 The LSR Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Core>

namespace lsr {

/// Directional sun. Azimuth is clockwise from north (+y); intensity is I0.
struct SunState {
    double elevation_deg = 90.0;
    double azimuth_deg = 0.0;
    double intensity = 1.0;

    /// Throws DomainError unless elevation in [-90, 90] and intensity >= 0.
    void validate() const;
};

/// Unit vector from the surface toward the sun:
/// (sin az cos el, cos az cos el, sin el).
Eigen::Vector3d sun_direction(const SunState& sun);

/// Angle in degrees between the directions to the sun and to the camera.
/// Throws DomainError when either input deviates from unit length by > 1e-6.
double phase_angle(const Eigen::Vector3d& sun_dir, const Eigen::Vector3d& view_dir);

/// Sun placement producing `phase_deg` for a nadir camera: elevation = 90 - phase.
SunState sun_for_nadir_phase(double phase_deg, double azimuth_deg, double intensity);

}  // namespace lsr
