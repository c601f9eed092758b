// Copyright 2026 The LSR Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "lsr/render.hpp"
#include "lsr/sequence.hpp"

namespace lsr {

inline constexpr int kScenarioSchemaVersion = 1;

/// Camera placement as written in a scenario: either an explicit position or
/// an altitude above the DEM centre (resolved against the DEM at load time).
struct PoseSpec {
    std::optional<Eigen::Vector3d> position;
    std::optional<double> altitude;
    double roll = 0.0;
    double pitch = 0.0;
    double yaw = 0.0;
    std::optional<SunState> sun;  // waypoints only
};

struct TrajectorySpec {
    std::vector<PoseSpec> waypoints;
    std::size_t frames_between = 0;
};

/// Parsed scenario file. All angles are degrees, as in the file.
struct Scenario {
    std::filesystem::path dem_path;
    std::optional<std::filesystem::path> albedo_path;
    double uniform_albedo = 0.12;
    double reference_elevation = 0.0;
    SunState sun;
    Intrinsics intrinsics;
    std::optional<PoseSpec> pose;
    std::optional<TrajectorySpec> trajectory;
    ReflectanceModel model;
    RenderOptions options;
    std::size_t horizon_azimuths = 64;
};

/// Parses scenario JSON text. Relative paths resolve against `base_dir`.
/// Every failure is a ConfigError naming the offending field path.
Scenario parse_scenario(const std::string& text, const std::filesystem::path& base_dir);

/// Reads and parses a scenario file. Throws IoError if unreadable.
Scenario load_scenario(const std::filesystem::path& path);

/// Overrides one scalar parameter, as used by sweeps. Known names:
/// sun_elevation, sun_azimuth, sun_intensity, phase_angle, altitude, roll,
/// pitch, yaw, b0, exposure. Throws ConfigError for anything else.
void apply_override(Scenario& scenario, const std::string& name, double value);

struct SweepSpec {
    std::string parameter;
    std::vector<double> values;
};

/// "name=lo:hi:n" -> n evenly spaced values from lo to hi inclusive.
SweepSpec parse_sweep(const std::string& text);

struct LoadedScenario {
    Scene scene;
    std::optional<Trajectory> trajectory;
};

/// Loads the DEM and albedo, derives terrain products and resolves poses.
LoadedScenario build_scene(const Scenario& scenario);

/// Camera pose for a spec; altitude specs sit above the grid centre at datum + altitude.
Pose resolve_pose(const PoseSpec& spec, const GridGeometry& grid, double datum);

}  // namespace lsr
