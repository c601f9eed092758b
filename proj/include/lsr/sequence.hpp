// Copyright 2026 The LSR Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "lsr/render.hpp"

namespace lsr {

struct Waypoint {
    Eigen::Vector3d position = Eigen::Vector3d::Zero();
    double roll = 0.0;
    double pitch = 0.0;
    double yaw = 0.0;
    std::optional<SunState> sun;

    Pose pose() const { return make_pose(position, roll, pitch, yaw); }
};

/// Waypoint above the centre of `grid` at `datum + altitude`.
Waypoint waypoint_at_altitude(const GridGeometry& grid, double datum, double altitude, double roll_deg,
                              double pitch_deg, double yaw_deg, std::optional<SunState> sun = std::nullopt);

struct Trajectory {
    std::vector<Waypoint> waypoints;
    std::size_t frames_between = 0;
};

struct Frame {
    Pose pose;
    std::optional<SunState> sun;  // overrides the scene sun when set
};

/// Expands a trajectory into waypoints.size() + frames_between * segments
/// frames. Positions interpolate linearly; each angle moves along its shortest
/// arc. A sun override interpolates only when both segment ends carry one;
/// otherwise interior frames inherit the segment start's override.
/// Throws ConfigError for an empty trajectory.
std::vector<Frame> interpolate_trajectory(const Trajectory& trajectory);

struct ManifestEntry {
    std::size_t index = 0;
    std::string image;
    std::string metadata;
    Pose pose;
    SunState sun;
};

struct Manifest {
    std::vector<ManifestEntry> frames;
};

std::string frame_stem(std::size_t index);  // "frame_000042"
std::string manifest_json(const Manifest& manifest);

/// Renders every interpolated frame into `out_dir` as frame_%06d.pgm plus a
/// frame_%06d.json sidecar, then writes manifest.json. Errors carry the
/// failing frame index.
Manifest generate_sequence(const Scene& scene, const Trajectory& trajectory,
                           const std::filesystem::path& out_dir, int workers = 0);

/// Scene for one frame: the base scene with the frame's pose and sun applied.
Scene scene_for_frame(const Scene& base, const Frame& frame);

}  // namespace lsr
