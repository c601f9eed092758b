// Copyright 2026 The LSR Authors
// SPDX-License-Identifier: Apache-2.0

#include "lsr/scenario.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>
#include <spdlog/spdlog.h>

#include "lsr/raster_io.hpp"

namespace lsr {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string join(const std::string& path, const std::string& key) {
    return path.empty() ? key : path + "." + key;
}

// Typed, path-aware access to one JSON object. Rejects unknown keys so typos
// surface as diagnostics instead of silently falling back to defaults.
class ObjectReader {
public:
    ObjectReader(const json& value, std::string path, std::set<std::string> allowed)
        : value_(value), path_(std::move(path)) {
        if (!value_.is_object()) {
            throw ConfigError(path_.empty() ? "(root)" : path_, "expected an object");
        }
        for (const auto& [key, _] : value_.items()) {
            if (!allowed.count(key)) {
                throw ConfigError(join(path_, key), "unknown field");
            }
        }
    }

    bool has(const std::string& key) const {
        return value_.contains(key) && !value_.at(key).is_null();
    }

    std::string field(const std::string& key) const { return join(path_, key); }

    const json& raw(const std::string& key) const {
        if (!has(key)) {
            throw ConfigError(field(key), "required field is missing");
        }
        return value_.at(key);
    }

    double number(const std::string& key) const {
        const json& v = raw(key);
        if (!v.is_number()) {
            throw ConfigError(field(key), "expected a number");
        }
        const double d = v.get<double>();
        if (!std::isfinite(d)) {
            throw ConfigError(field(key), "must be finite");
        }
        return d;
    }

    double number_or(const std::string& key, double fallback) const {
        return has(key) ? number(key) : fallback;
    }

    std::optional<double> optional_number(const std::string& key) const {
        return has(key) ? std::optional<double>(number(key)) : std::nullopt;
    }

    double positive(const std::string& key) const {
        const double d = number(key);
        if (!(d > 0.0)) {
            throw ConfigError(field(key), "must be > 0");
        }
        return d;
    }

    long long integer(const std::string& key, long long lo, long long hi) const {
        const json& v = raw(key);
        if (!v.is_number_integer()) {
            throw ConfigError(field(key), "expected an integer");
        }
        const long long n = v.get<long long>();
        if (n < lo || n > hi) {
            throw ConfigError(field(key), "must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
        }
        return n;
    }

    std::string string(const std::string& key) const {
        const json& v = raw(key);
        if (!v.is_string() || v.get<std::string>().empty()) {
            throw ConfigError(field(key), "expected a non-empty string");
        }
        return v.get<std::string>();
    }

    ObjectReader object(const std::string& key, std::set<std::string> allowed) const {
        return ObjectReader(raw(key), field(key), std::move(allowed));
    }

private:
    const json& value_;
    std::string path_;
};

SunState parse_sun(const ObjectReader& r) {
    SunState sun;
    const double azimuth = r.number_or("azimuth_deg", 0.0);
    const double intensity = r.number_or("intensity", 1.0);
    if (intensity < 0.0) {
        throw ConfigError(r.field("intensity"), "must be >= 0");
    }
    if (r.has("phase_angle_deg")) {
        if (r.has("elevation_deg")) {
            throw ConfigError(r.field("phase_angle_deg"), "give either elevation_deg or phase_angle_deg, not both");
        }
        const double phase = r.number("phase_angle_deg");
        if (phase < 0.0 || phase > 180.0) {
            throw ConfigError(r.field("phase_angle_deg"), "must lie in [0, 180]");
        }
        return sun_for_nadir_phase(phase, azimuth, intensity);
    }
    sun.elevation_deg = r.number("elevation_deg");
    if (sun.elevation_deg < -90.0 || sun.elevation_deg > 90.0) {
        throw ConfigError(r.field("elevation_deg"), "must lie in [-90, 90]");
    }
    sun.azimuth_deg = azimuth;
    sun.intensity = intensity;
    return sun;
}

const std::set<std::string> kSunKeys = {"elevation_deg", "phase_angle_deg", "azimuth_deg", "intensity"};

PoseSpec parse_pose(const ObjectReader& r, bool allow_sun) {
    PoseSpec spec;
    if (r.has("position_m") == r.has("altitude_m")) {
        throw ConfigError(r.field("position_m"), "give exactly one of position_m or altitude_m");
    }
    if (r.has("position_m")) {
        const json& p = r.raw("position_m");
        if (!p.is_array() || p.size() != 3) {
            throw ConfigError(r.field("position_m"), "expected [x, y, z]");
        }
        Eigen::Vector3d position;
        for (int k = 0; k < 3; ++k) {
            if (!p[static_cast<std::size_t>(k)].is_number()) {
                throw ConfigError(r.field("position_m") + "[" + std::to_string(k) + "]", "expected a number");
            }
            position[k] = p[static_cast<std::size_t>(k)].get<double>();
        }
        if (!position.allFinite()) {
            throw ConfigError(r.field("position_m"), "must be finite");
        }
        spec.position = position;
    } else {
        spec.altitude = r.number("altitude_m");
    }
    spec.roll = r.number_or("roll_deg", 0.0);
    spec.pitch = r.number_or("pitch_deg", 0.0);
    spec.yaw = r.number_or("yaw_deg", 0.0);
    if (allow_sun && r.has("sun")) {
        spec.sun = parse_sun(r.object("sun", kSunKeys));
    }
    return spec;
}

const std::set<std::string> kPoseKeys = {"position_m", "altitude_m", "roll_deg", "pitch_deg", "yaw_deg"};

fs::path resolve(const fs::path& base, const std::string& p) {
    const fs::path path(p);
    return path.is_absolute() ? path : base / path;
}

}  // namespace

Scenario parse_scenario(const std::string& text, const fs::path& base_dir) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError("(root)", std::string("invalid JSON: ") + e.what());
    }
    const ObjectReader r(root, "",
                         {"schema_version", "dem_path", "albedo_path", "albedo", "reference_elevation_m",
                          "sun", "camera", "model", "render", "trajectory", "description"});

    if (r.integer("schema_version", 0, 1000) != kScenarioSchemaVersion) {
        throw ConfigError("schema_version", "unsupported version, expected " + std::to_string(kScenarioSchemaVersion));
    }

    Scenario s;
    s.dem_path = resolve(base_dir, r.string("dem_path"));
    if (r.has("albedo_path")) {
        s.albedo_path = resolve(base_dir, r.string("albedo_path"));
    }
    s.uniform_albedo = r.number_or("albedo", s.uniform_albedo);
    if (s.uniform_albedo < 0.0 || s.uniform_albedo > 1.0) {
        throw ConfigError("albedo", "must lie in [0, 1]");
    }
    s.reference_elevation = r.number_or("reference_elevation_m", 0.0);
    s.sun = parse_sun(r.object("sun", kSunKeys));

    const ObjectReader cam = r.object("camera", {"focal_length_m", "pixel_pitch_m", "width_px", "height_px",
                                                 "exposure_scale", "pose"});
    s.intrinsics.focal_length = cam.positive("focal_length_m");
    s.intrinsics.pixel_pitch = cam.positive("pixel_pitch_m");
    s.intrinsics.width_px = static_cast<int>(cam.integer("width_px", 1, 100000));
    s.intrinsics.height_px = static_cast<int>(cam.integer("height_px", 1, 100000));
    s.intrinsics.exposure_scale = cam.has("exposure_scale") ? cam.positive("exposure_scale") : 1.0;
    if (cam.has("pose")) {
        s.pose = parse_pose(cam.object("pose", kPoseKeys), false);
    }

    if (r.has("trajectory")) {
        const ObjectReader traj = r.object("trajectory", {"frames_between", "waypoints"});
        TrajectorySpec t;
        t.frames_between =
            traj.has("frames_between") ? static_cast<std::size_t>(traj.integer("frames_between", 0, 100000)) : 0;
        const json& wps = traj.raw("waypoints");
        if (!wps.is_array()) {
            throw ConfigError(traj.field("waypoints"), "expected an array");
        }
        if (wps.empty()) {
            throw ConfigError(traj.field("waypoints"), "trajectory has no waypoints");
        }
        for (std::size_t k = 0; k < wps.size(); ++k) {
            std::set<std::string> keys = kPoseKeys;
            keys.insert("sun");
            t.waypoints.push_back(
                parse_pose(ObjectReader(wps[k], traj.field("waypoints") + "[" + std::to_string(k) + "]", keys), true));
        }
        s.trajectory = std::move(t);
    }
    if (s.pose.has_value() == s.trajectory.has_value()) {
        throw ConfigError("camera.pose", "give exactly one of camera.pose or trajectory");
    }

    if (r.has("model")) {
        const ObjectReader m = r.object("model", {"kind", "B0"});
        const std::string key = m.string("kind");
        auto kind = parse_reflectance_key(key);
        if (!kind) {
            throw ConfigError(m.field("kind"), "unknown reflectance model '" + key +
                                                   "' (expected lambert, ls_paper or hapke_paper)");
        }
        s.model.kind = *kind;
        s.model.b0 = m.number_or("B0", 0.0);
        if (s.model.kind == ReflectanceKind::Hapke && (s.model.b0 < 0.0 || s.model.b0 > 1.0)) {
            throw ConfigError(m.field("B0"), "must lie in [0, 1]");
        }
    }

    if (r.has("render")) {
        const ObjectReader o = r.object("render", {"shadow_method", "shadow_step_m", "max_range_m", "background",
                                                   "horizon_azimuths", "light_distance_m"});
        if (o.has("shadow_method")) {
            const std::string key = o.string("shadow_method");
            auto method = parse_shadow_method(key);
            if (!method) {
                throw ConfigError(o.field("shadow_method"),
                                  "unknown shadow method '" + key + "' (expected raymarch, horizon or none)");
            }
            s.options.shadow_method = *method;
        }
        if (o.has("shadow_step_m")) {
            s.options.shadow_step = o.positive("shadow_step_m");
        }
        if (o.has("max_range_m")) {
            s.options.max_range = o.positive("max_range_m");
        }
        s.options.background = o.number_or("background", 0.0);
        if (s.options.background < 0.0) {
            throw ConfigError(o.field("background"), "must be >= 0");
        }
        if (o.has("horizon_azimuths")) {
            s.horizon_azimuths = static_cast<std::size_t>(o.integer("horizon_azimuths", 4, 4096));
        }
        if (o.has("light_distance_m")) {
            s.options.light_distance = o.positive("light_distance_m");
        }
    }
    return s;
}

Scenario load_scenario(const fs::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open scenario " + path.string());
    }
    std::ostringstream text;
    text << in.rdbuf();
    return parse_scenario(text.str(), path.parent_path());
}

void apply_override(Scenario& s, const std::string& name, double value) {
    auto pose_target = [&]() -> PoseSpec& {
        if (!s.pose) {
            throw ConfigError(name, "camera overrides need a scenario with camera.pose");
        }
        return *s.pose;
    };
    if (name == "sun_elevation") {
        if (value < -90.0 || value > 90.0) {
            throw ConfigError(name, "must lie in [-90, 90]");
        }
        s.sun.elevation_deg = value;
    } else if (name == "sun_azimuth") {
        s.sun.azimuth_deg = value;
    } else if (name == "sun_intensity") {
        if (value < 0.0) {
            throw ConfigError(name, "must be >= 0");
        }
        s.sun.intensity = value;
    } else if (name == "phase_angle") {
        if (value < 0.0 || value > 180.0) {
            throw ConfigError(name, "must lie in [0, 180]");
        }
        s.sun = sun_for_nadir_phase(value, s.sun.azimuth_deg, s.sun.intensity);
    } else if (name == "altitude") {
        PoseSpec& p = pose_target();
        if (p.altitude) {
            p.altitude = value;
        } else {
            p.position->z() = value;
        }
    } else if (name == "roll") {
        pose_target().roll = value;
    } else if (name == "pitch") {
        pose_target().pitch = value;
    } else if (name == "yaw") {
        pose_target().yaw = value;
    } else if (name == "b0") {
        if (value < 0.0 || value > 1.0) {
            throw ConfigError(name, "must lie in [0, 1]");
        }
        s.model.b0 = value;
    } else if (name == "exposure") {
        if (!(value > 0.0)) {
            throw ConfigError(name, "must be > 0");
        }
        s.intrinsics.exposure_scale = value;
    } else {
        throw ConfigError(name, "unknown sweep parameter");
    }
}

SweepSpec parse_sweep(const std::string& text) {
    const auto eq = text.find('=');
    if (eq == std::string::npos || eq == 0) {
        throw ConfigError("--sweep", "expected <param>=<lo>:<hi>:<n>");
    }
    SweepSpec sweep;
    sweep.parameter = text.substr(0, eq);
    std::vector<std::string> parts;
    std::stringstream rest(text.substr(eq + 1));
    for (std::string part; std::getline(rest, part, ':');) {
        parts.push_back(part);
    }
    if (parts.size() != 3) {
        throw ConfigError("--sweep", "expected <param>=<lo>:<hi>:<n>");
    }
    auto number = [](const std::string& token, double& out) {
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
        return ec == std::errc() && ptr == token.data() + token.size() && std::isfinite(out);
    };
    double lo = 0.0, hi = 0.0, n = 0.0;
    if (!number(parts[0], lo) || !number(parts[1], hi) || !number(parts[2], n) || n < 1 || n != std::floor(n) ||
        n > 10000) {
        throw ConfigError("--sweep", "bounds must be numbers and n a positive integer");
    }
    const auto count = static_cast<std::size_t>(n);
    for (std::size_t k = 0; k < count; ++k) {
        sweep.values.push_back(count == 1 ? lo : lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(count - 1));
    }
    return sweep;
}

Pose resolve_pose(const PoseSpec& spec, const GridGeometry& grid, double datum) {
    if (spec.position) {
        return make_pose(*spec.position, spec.roll, spec.pitch, spec.yaw);
    }
    return waypoint_at_altitude(grid, datum, *spec.altitude, spec.roll, spec.pitch, spec.yaw).pose();
}

LoadedScenario build_scene(const Scenario& s) {
    if (!fs::exists(s.dem_path)) {
        throw ConfigError("dem_path", "file not found: " + s.dem_path.string());
    }
    if (s.albedo_path && !fs::exists(*s.albedo_path)) {
        throw ConfigError("albedo_path", "file not found: " + s.albedo_path->string());
    }
    DemGrid dem = load_dem(s.dem_path);
    const GridGeometry grid = dem.geometry();
    std::optional<Raster> albedo;
    if (s.albedo_path) {
        try {
            albedo = register_to(load_raster(*s.albedo_path), grid);
        } catch (const ConfigError& e) {
            throw ConfigError("albedo_path", e.message());
        }
        for (double a : albedo->values()) {
            if (!std::isnan(a) && (a < 0.0 || a > 1.0)) {
                throw ConfigError("albedo_path", "albedo values must lie in [0, 1]");
            }
        }
    }
    const std::size_t azimuths =
        s.options.shadow_method == ShadowMethod::HorizonMap ? s.horizon_azimuths : 0;
    spdlog::info("loaded {}x{} DEM, cell {} m", grid.rows, grid.cols, grid.cell_size);

    LoadedScenario out;
    out.scene.terrain = make_terrain(std::move(dem), std::move(albedo), s.uniform_albedo, azimuths);
    out.scene.sun = s.sun;
    out.scene.intrinsics = s.intrinsics;
    out.scene.model = s.model;
    out.scene.options = s.options;
    if (s.trajectory) {
        Trajectory t;
        t.frames_between = s.trajectory->frames_between;
        for (const PoseSpec& spec : s.trajectory->waypoints) {
            const Pose pose = resolve_pose(spec, grid, s.reference_elevation);
            t.waypoints.push_back(Waypoint{pose.position, spec.roll, spec.pitch, spec.yaw, spec.sun});
        }
        out.scene.pose = t.waypoints.front().pose();
        out.trajectory = std::move(t);
    } else {
        out.scene.pose = resolve_pose(*s.pose, grid, s.reference_elevation);
    }
    return out;
}

}  // namespace lsr
