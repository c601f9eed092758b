// Copyright 2026 The LSR Authors
// SPDX-License-Identifier: Apache-2.0

#include "lsr/sequence.hpp"

#include <cstdio>
#include <fstream>

#include <json.hpp>
#include <spdlog/spdlog.h>

#include "lsr/image_io.hpp"

namespace lsr {

namespace fs = std::filesystem;

Waypoint waypoint_at_altitude(const GridGeometry& grid, double datum, double altitude, double roll_deg,
                              double pitch_deg, double yaw_deg, std::optional<SunState> sun) {
    return Waypoint{Eigen::Vector3d(grid.center_x(), grid.center_y(), datum + altitude), roll_deg,
                    pitch_deg, yaw_deg, sun};
}

namespace {

double lerp(double a, double b, double f) { return a + f * (b - a); }

double lerp_angle(double a, double b, double f) {
    return normalize_angle_deg(a + f * normalize_angle_deg(b - a));
}

Frame endpoint(const Waypoint& w) { return Frame{w.pose(), w.sun}; }

Frame between(const Waypoint& a, const Waypoint& b, double f) {
    Frame frame;
    const Eigen::Vector3d position = a.position + f * (b.position - a.position);
    frame.pose = make_pose(position, lerp_angle(a.roll, b.roll, f), lerp_angle(a.pitch, b.pitch, f),
                           lerp_angle(a.yaw, b.yaw, f));
    if (a.sun && b.sun) {
        frame.sun = SunState{lerp(a.sun->elevation_deg, b.sun->elevation_deg, f),
                             lerp_angle(a.sun->azimuth_deg, b.sun->azimuth_deg, f),
                             lerp(a.sun->intensity, b.sun->intensity, f)};
    } else {
        frame.sun = a.sun;
    }
    return frame;
}

}  // namespace

std::vector<Frame> interpolate_trajectory(const Trajectory& trajectory) {
    const auto& wps = trajectory.waypoints;
    if (wps.empty()) {
        throw ConfigError("trajectory.waypoints", "trajectory has no waypoints");
    }
    std::vector<Frame> frames;
    frames.reserve(wps.size() + trajectory.frames_between * (wps.size() - 1));
    frames.push_back(endpoint(wps.front()));
    const double steps = static_cast<double>(trajectory.frames_between + 1);
    for (std::size_t s = 0; s + 1 < wps.size(); ++s) {
        for (std::size_t m = 1; m <= trajectory.frames_between; ++m) {
            frames.push_back(between(wps[s], wps[s + 1], static_cast<double>(m) / steps));
        }
        frames.push_back(endpoint(wps[s + 1]));
    }
    return frames;
}

std::string frame_stem(std::size_t index) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "frame_%06zu", index);
    return buf;
}

std::string manifest_json(const Manifest& manifest) {
    nlohmann::ordered_json frames = nlohmann::ordered_json::array();
    for (const ManifestEntry& e : manifest.frames) {
        frames.push_back({{"index", e.index},
                          {"image", e.image},
                          {"metadata", e.metadata},
                          {"pose",
                           {{"position_m", {e.pose.position.x(), e.pose.position.y(), e.pose.position.z()}},
                            {"roll_deg", e.pose.roll},
                            {"pitch_deg", e.pose.pitch},
                            {"yaw_deg", e.pose.yaw}}},
                          {"sun",
                           {{"elevation_deg", e.sun.elevation_deg},
                            {"azimuth_deg", e.sun.azimuth_deg},
                            {"intensity", e.sun.intensity}}}});
    }
    nlohmann::ordered_json j;
    j["frame_count"] = manifest.frames.size();
    j["frames"] = std::move(frames);
    return j.dump(2) + "\n";
}

Scene scene_for_frame(const Scene& base, const Frame& frame) {
    Scene scene = base;
    scene.pose = frame.pose;
    if (frame.sun) {
        scene.sun = *frame.sun;
    }
    return scene;
}

Manifest generate_sequence(const Scene& scene, const Trajectory& trajectory, const fs::path& out_dir,
                           int workers) {
    const std::vector<Frame> frames = interpolate_trajectory(trajectory);
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) {
        throw IoError("cannot create " + out_dir.string() + ": " + ec.message());
    }

    Manifest manifest;
    for (std::size_t k = 0; k < frames.size(); ++k) {
        const Scene frame_scene = scene_for_frame(scene, frames[k]);
        const std::string stem = frame_stem(k);
        try {
            const ImageBuffer image = render(frame_scene, workers);
            write_frame(image, frame_scene.intrinsics.exposure_scale, out_dir / (stem + ".pgm"));
        } catch (const IoError& e) {
            throw IoError("frame " + std::to_string(k) + ": " + e.what());
        } catch (const ConfigError& e) {
            throw ConfigError(e.field(), "frame " + std::to_string(k) + ": " + e.message());
        } catch (const Error& e) {
            throw RenderError("frame " + std::to_string(k) + ": " + e.what());
        }
        spdlog::info("frame {} of {} written", k + 1, frames.size());
        manifest.frames.push_back(
            ManifestEntry{k, stem + ".pgm", stem + ".json", frame_scene.pose, frame_scene.sun});
    }

    std::ofstream out(out_dir / "manifest.json", std::ios::trunc);
    if (!out) {
        throw IoError("cannot write " + (out_dir / "manifest.json").string());
    }
    out << manifest_json(manifest);
    if (!out) {
        throw IoError("failed writing manifest.json");
    }
    return manifest;
}

}  // namespace lsr
