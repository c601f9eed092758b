// Copyright 2026 The LSR Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <numbers>

#include <Eigen/Core>

namespace lsr {

constexpr double deg_to_rad(double deg) { return deg * (std::numbers::pi / 180.0); }
constexpr double rad_to_deg(double rad) { return rad * (180.0 / std::numbers::pi); }

/// Wraps an angle in degrees into (-180, 180].
double normalize_angle_deg(double deg);

/// Pinhole intrinsics. exposure_scale multiplies radiance before 8-bit quantisation.
struct Intrinsics {
    double focal_length = 0.0;  // m
    double pixel_pitch = 0.0;   // m
    int width_px = 0;
    int height_px = 0;
    double exposure_scale = 1.0;

    /// Throws DomainError unless every field is strictly positive and finite.
    void validate() const;
};

/// Camera position in the world frame (x east, y north, z up) and attitude in
/// degrees. Angles are wrapped into (-180, 180] by make_pose.
struct Pose {
    Eigen::Vector3d position = Eigen::Vector3d::Zero();
    double roll = 0.0;
    double pitch = 0.0;
    double yaw = 0.0;
};

Pose make_pose(const Eigen::Vector3d& position, double roll_deg, double pitch_deg, double yaw_deg);

struct Ray {
    Eigen::Vector3d origin;
    Eigen::Vector3d direction;  // unit length

    Eigen::Vector3d at(double t) const { return origin + t * direction; }
};

/// R = Rz(yaw) * Ry(pitch) * Rx(roll), angles in degrees.
Eigen::Matrix3d rotation_from_rpy(double roll_deg, double pitch_deg, double yaw_deg);

inline Eigen::Matrix3d rotation_of(const Pose& pose) {
    return rotation_from_rpy(pose.roll, pose.pitch, pose.yaw);
}

/// Ray through image-plane point (x, y) in pixel units, where (0, 0) is the
/// top-left sensor corner and (width, height) the bottom-right one. Camera
/// frame: +x image right, +y image up, boresight -z. Throws RangeError outside
/// the sensor.
Ray image_plane_ray(const Intrinsics& intrinsics, const Pose& pose, double x, double y);

/// Ray through the centre of pixel (u, v) (u right, v down), i.e. the image
/// plane point (u + 0.5, v + 0.5). Throws RangeError unless 0 <= u < width and
/// 0 <= v < height.
Ray pixel_ray(const Intrinsics& intrinsics, const Pose& pose, double u, double v);

/// Same as pixel_ray with the rotation precomputed, for inner loops.
Ray pixel_ray(const Intrinsics& intrinsics, const Eigen::Vector3d& origin,
              const Eigen::Matrix3d& rotation, double u, double v);

struct FieldOfView {
    double horizontal_deg;
    double vertical_deg;
};

FieldOfView fov_from_intrinsics(const Intrinsics& intrinsics);

/// Footprint of one pixel at `slant_range` meters. Throws DomainError for
/// non-positive range.
double ground_sample_distance(const Intrinsics& intrinsics, double slant_range);

}  // namespace lsr
