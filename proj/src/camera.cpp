// Copyright 2026 The LSR Authors
// SPDX-License-Identifier: Apache-2.0

#include "lsr/camera.hpp"

#include <cmath>
#include <string>

#include <Eigen/Geometry>

#include "lsr/error.hpp"

namespace lsr {

double normalize_angle_deg(double deg) {
    double a = std::fmod(deg, 360.0);
    if (a <= -180.0) {
        a += 360.0;
    } else if (a > 180.0) {
        a -= 360.0;
    }
    return a;
}

void Intrinsics::validate() const {
    auto positive = [](double v) { return v > 0.0 && std::isfinite(v); };
    if (!positive(focal_length)) {
        throw DomainError("focal_length must be positive");
    }
    if (!positive(pixel_pitch)) {
        throw DomainError("pixel_pitch must be positive");
    }
    if (width_px <= 0 || height_px <= 0) {
        throw DomainError("sensor dimensions must be positive");
    }
    if (!positive(exposure_scale)) {
        throw DomainError("exposure_scale must be positive");
    }
}

Pose make_pose(const Eigen::Vector3d& position, double roll_deg, double pitch_deg, double yaw_deg) {
    if (!position.allFinite() || !std::isfinite(roll_deg) || !std::isfinite(pitch_deg) ||
        !std::isfinite(yaw_deg)) {
        throw DomainError("pose position and angles must be finite");
    }
    return Pose{position, normalize_angle_deg(roll_deg), normalize_angle_deg(pitch_deg),
                normalize_angle_deg(yaw_deg)};
}

Eigen::Matrix3d rotation_from_rpy(double roll_deg, double pitch_deg, double yaw_deg) {
    using Eigen::AngleAxisd;
    using Eigen::Vector3d;
    return (AngleAxisd(deg_to_rad(yaw_deg), Vector3d::UnitZ()) *
            AngleAxisd(deg_to_rad(pitch_deg), Vector3d::UnitY()) *
            AngleAxisd(deg_to_rad(roll_deg), Vector3d::UnitX()))
        .toRotationMatrix();
}

namespace {

Ray plane_ray(const Intrinsics& in, const Eigen::Vector3d& origin, const Eigen::Matrix3d& rotation,
              double x, double y) {
    const double cx = 0.5 * in.width_px;
    const double cy = 0.5 * in.height_px;
    // Image rows grow downward while camera +y points up.
    const Eigen::Vector3d camera_dir((x - cx) * in.pixel_pitch, (cy - y) * in.pixel_pitch,
                                     -in.focal_length);
    return Ray{origin, rotation * camera_dir.normalized()};
}

}  // namespace

Ray image_plane_ray(const Intrinsics& intrinsics, const Pose& pose, double x, double y) {
    if (!(x >= 0.0 && x <= intrinsics.width_px && y >= 0.0 && y <= intrinsics.height_px)) {
        throw RangeError("image plane point outside the sensor");
    }
    return plane_ray(intrinsics, pose.position, rotation_of(pose), x, y);
}

Ray pixel_ray(const Intrinsics& intrinsics, const Eigen::Vector3d& origin,
              const Eigen::Matrix3d& rotation, double u, double v) {
    if (!(u >= 0.0 && u < intrinsics.width_px && v >= 0.0 && v < intrinsics.height_px)) {
        throw RangeError("pixel (" + std::to_string(u) + ", " + std::to_string(v) +
                         ") outside a " + std::to_string(intrinsics.width_px) + "x" +
                         std::to_string(intrinsics.height_px) + " sensor");
    }
    return plane_ray(intrinsics, origin, rotation, u + 0.5, v + 0.5);
}

Ray pixel_ray(const Intrinsics& intrinsics, const Pose& pose, double u, double v) {
    return pixel_ray(intrinsics, pose.position, rotation_of(pose), u, v);
}

FieldOfView fov_from_intrinsics(const Intrinsics& in) {
    const double w = in.width_px * in.pixel_pitch;
    const double h = in.height_px * in.pixel_pitch;
    return {rad_to_deg(2.0 * std::atan(w / (2.0 * in.focal_length))),
            rad_to_deg(2.0 * std::atan(h / (2.0 * in.focal_length)))};
}

double ground_sample_distance(const Intrinsics& intrinsics, double slant_range) {
    if (!(slant_range > 0.0)) {
        throw DomainError("slant range must be positive");
    }
    return slant_range * intrinsics.pixel_pitch / intrinsics.focal_length;
}

}  // namespace lsr
