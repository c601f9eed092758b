// Copyright 2026 The LSR Authors
// SPDX-License-Identifier: Apache-2.0

// Scenes shared by the unit tests and the acceptance binary.

#pragma once

#include <array>
#include <string>
#include <vector>

#include <json.hpp>

#include "lsr/sequence.hpp"
#include "oracles.hpp"

namespace lsr::test {

struct LadderPose {
    double altitude, pitch, yaw, roll;
};

/// Altitude / orientation ladder of the descent sequence.
inline constexpr std::array<LadderPose, 4> kLadder{{
    {514285.0, 4.91, 4.91, 19.64},
    {228571.0, 8.91, 8.91, 35.20},
    {157142.0, 9.82, 9.82, 44.61},
    {100000.0, 11.46, 11.46, 54.43},
}};

/// 512 km cratered patch centred on the origin; wide enough that every
/// ladder pose's off-nadir boresight still lands on terrain.
inline Scene ladder_scene(int size_px = 32) {
    Scene s;
    s.terrain = make_terrain(crater_dem(256, 2000.0, 77, 40), std::nullopt, 0.12);
    s.sun = {30.0, 135.0, 1.0};
    s.intrinsics = {0.05, 2e-4, size_px, size_px, 4.0};
    s.model = {ReflectanceKind::Hapke, 0.3};
    return s;
}

inline Trajectory ladder_trajectory(const Scene& scene) {
    Trajectory t;
    for (const LadderPose& p : kLadder) {
        t.waypoints.push_back(
            waypoint_at_altitude(scene.terrain->dem.geometry(), 0.0, p.altitude, p.roll, p.pitch, p.yaw));
    }
    return t;
}

/// Minimal valid pose-mode scenario; `dem_path` is relative to the file.
inline nlohmann::ordered_json base_scenario(const std::string& dem_path = "dem.asc") {
    return {
        {"schema_version", 1},
        {"dem_path", dem_path},
        {"albedo", 0.5},
        {"sun", {{"elevation_deg", 90.0}, {"azimuth_deg", 0.0}, {"intensity", 1.0}}},
        {"camera",
         {{"focal_length_m", 0.05},
          {"pixel_pitch_m", 2e-4},
          {"width_px", 16},
          {"height_px", 16},
          {"exposure_scale", 1.0},
          {"pose", {{"altitude_m", 50.0}}}}},
        {"model", {{"kind", "lambert"}}},
    };
}

struct BadScenario {
    std::string name;
    std::string text;
    std::string field;  // must appear in the diagnostic
};

/// Scenario files that must each be rejected with a configuration error.
inline std::vector<BadScenario> malformed_scenarios() {
    using nlohmann::ordered_json;
    std::vector<BadScenario> out;
    auto add = [&](std::string name, const std::function<void(ordered_json&)>& edit, std::string field) {
        ordered_json j = base_scenario();
        edit(j);
        out.push_back({std::move(name), j.dump(2), std::move(field)});
    };
    out.push_back({"not_json", "{ \"schema_version\": 1, ", "(root)"});
    out.push_back({"not_object", "[1, 2, 3]", "(root)"});
    add("missing_dem_path", [](ordered_json& j) { j.erase("dem_path"); }, "dem_path");
    add("dem_not_found", [](ordered_json& j) { j["dem_path"] = "no_such_dem.asc"; }, "dem_path");
    add("bad_schema", [](ordered_json& j) { j["schema_version"] = 7; }, "schema_version");
    add("unknown_top_level", [](ordered_json& j) { j["colour"] = "grey"; }, "colour");
    add("sun_missing_elevation", [](ordered_json& j) { j["sun"].erase("elevation_deg"); }, "sun.elevation_deg");
    add("sun_elevation_range", [](ordered_json& j) { j["sun"]["elevation_deg"] = 120; }, "sun.elevation_deg");
    add("sun_elevation_string", [](ordered_json& j) { j["sun"]["elevation_deg"] = "high"; }, "sun.elevation_deg");
    add("negative_intensity", [](ordered_json& j) { j["sun"]["intensity"] = -1; }, "sun.intensity");
    add("zero_focal", [](ordered_json& j) { j["camera"]["focal_length_m"] = 0; }, "camera.focal_length_m");
    add("fractional_width", [](ordered_json& j) { j["camera"]["width_px"] = 12.5; }, "camera.width_px");
    add("missing_camera", [](ordered_json& j) { j.erase("camera"); }, "camera");
    add("pose_and_altitude",
        [](ordered_json& j) { j["camera"]["pose"]["position_m"] = {0, 0, 10}; }, "camera.pose.position_m");
    add("short_position",
        [](ordered_json& j) { j["camera"]["pose"] = {{"position_m", {1, 2}}}; }, "camera.pose.position_m");
    add("typo_in_pose", [](ordered_json& j) { j["camera"]["pose"]["rol_deg"] = 3; }, "camera.pose.rol_deg");
    add("unknown_model", [](ordered_json& j) { j["model"]["kind"] = "oren_nayar"; }, "model.kind");
    add("b0_range", [](ordered_json& j) { j["model"] = {{"kind", "hapke_paper"}, {"B0", 1.5}}; }, "model.B0");
    add("unknown_shadow",
        [](ordered_json& j) { j["render"] = {{"shadow_method", "soft"}}; }, "render.shadow_method");
    add("negative_step",
        [](ordered_json& j) { j["render"] = {{"shadow_step_m", -1}}; }, "render.shadow_step_m");
    add("few_azimuths",
        [](ordered_json& j) { j["render"] = {{"horizon_azimuths", 2}}; }, "render.horizon_azimuths");
    add("albedo_range", [](ordered_json& j) { j["albedo"] = 1.5; }, "albedo");
    add("empty_trajectory", [](ordered_json& j) {
        j["camera"].erase("pose");
        j["trajectory"] = {{"frames_between", 0}, {"waypoints", ordered_json::array()}};
    }, "trajectory.waypoints");
    add("pose_and_trajectory", [](ordered_json& j) {
        j["trajectory"] = {{"waypoints", {{{"altitude_m", 10}}}}};
    }, "camera.pose");
    add("waypoint_bad_sun", [](ordered_json& j) {
        j["camera"].erase("pose");
        j["trajectory"] = {{"waypoints", {{{"altitude_m", 10}, {"sun", {{"elevation_deg", 95}}}}}}};
    }, "trajectory.waypoints[0].sun.elevation_deg");
    add("negative_frames_between", [](ordered_json& j) {
        j["camera"].erase("pose");
        j["trajectory"] = {{"frames_between", -1}, {"waypoints", {{{"altitude_m", 10}}}}};
    }, "trajectory.frames_between");
    return out;
}

}  // namespace lsr::test
