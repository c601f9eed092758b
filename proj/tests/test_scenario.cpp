// Copyright 2026 The LSR Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "fixtures.hpp"
#include "lsr/error.hpp"
#include "lsr/raster_io.hpp"
#include "lsr/scenario.hpp"
#include "test_util.hpp"

using namespace lsr;

TEST_SUITE("scenario") {

TEST_CASE("valid scenario parses with defaults filled in") {
    test::TempDir dir;
    save_dem(test::flat_dem(17, 1.0, 3.0), dir / "dem.asc");
    const Scenario s = parse_scenario(test::base_scenario().dump(), dir.path);
    CHECK(s.dem_path == dir / "dem.asc");
    CHECK(s.uniform_albedo == 0.5);
    CHECK(s.intrinsics.width_px == 16);
    CHECK(s.pose->altitude == 50.0);
    CHECK(s.options.shadow_method == ShadowMethod::Raymarch);
    CHECK(s.horizon_azimuths == 64u);

    const LoadedScenario loaded = build_scene(s);
    // Altitude shorthand: grid centre, measured from the reference elevation.
    CHECK(loaded.scene.pose.position == Eigen::Vector3d(8.0, 8.0, 50.0));
    CHECK(!loaded.trajectory);
    CHECK(!loaded.scene.terrain->horizon);
}

TEST_CASE("uniform albedo defaults when absent") {
    auto j = test::base_scenario();
    j.erase("albedo");
    CHECK(parse_scenario(j.dump(), ".").uniform_albedo == 0.12);
}

TEST_CASE("phase angle form of the sun") {
    auto j = test::base_scenario();
    j["sun"] = {{"phase_angle_deg", 30.0}, {"azimuth_deg", 45.0}};
    const Scenario s = parse_scenario(j.dump(), ".");
    CHECK(s.sun.elevation_deg == doctest::Approx(60.0));
    CHECK(s.sun.azimuth_deg == 45.0);
}

TEST_CASE("trajectory mode") {
    test::TempDir dir;
    save_dem(test::flat_dem(17, 1.0), dir / "dem.asc");
    auto j = test::base_scenario();
    j["camera"].erase("pose");
    j["trajectory"] = {{"frames_between", 2},
                       {"waypoints",
                        {{{"altitude_m", 40}, {"sun", {{"elevation_deg", 10}}}},
                         {{"position_m", {1, 2, 30}}, {"yaw_deg", 90}, {"sun", {{"elevation_deg", 40}}}}}}};
    const LoadedScenario loaded = build_scene(parse_scenario(j.dump(), dir.path));
    REQUIRE(loaded.trajectory);
    CHECK(loaded.trajectory->frames_between == 2u);
    REQUIRE(loaded.trajectory->waypoints.size() == 2);
    CHECK(loaded.trajectory->waypoints[0].position == Eigen::Vector3d(8, 8, 40));
    CHECK(loaded.trajectory->waypoints[1].yaw == 90.0);
    CHECK(loaded.trajectory->waypoints[1].sun->elevation_deg == 40.0);
}

TEST_CASE("horizon shadows precompute the horizon map") {
    test::TempDir dir;
    save_dem(test::flat_dem(17, 1.0), dir / "dem.asc");
    auto j = test::base_scenario();
    j["render"] = {{"shadow_method", "horizon"}, {"horizon_azimuths", 8}};
    const LoadedScenario loaded = build_scene(parse_scenario(j.dump(), dir.path));
    REQUIRE(loaded.scene.terrain->horizon);
    CHECK(loaded.scene.terrain->horizon->n_azimuths() == 8u);
}

TEST_CASE("malformed scenarios name the offending field") {
    test::TempDir dir;
    save_dem(test::flat_dem(17, 1.0), dir / "dem.asc");
    for (const auto& bad : test::malformed_scenarios()) {
        CAPTURE(bad.name);
        try {
            build_scene(parse_scenario(bad.text, dir.path));
            FAIL("accepted a malformed scenario");
        } catch (const ConfigError& e) {
            CHECK(e.field() == bad.field);
        }
    }
}

TEST_CASE("albedo raster of the wrong size") {
    test::TempDir dir;
    save_dem(test::flat_dem(17, 1.0), dir / "dem.asc");
    save_raster(Raster(GridGeometry{4, 4, 1.0, 0, 0}, 0.3), dir / "albedo.ldem");
    auto j = test::base_scenario();
    j["albedo_path"] = "albedo.ldem";
    CHECK_THROWS_AS(build_scene(parse_scenario(j.dump(), dir.path)), ConfigError);
}

TEST_CASE("sweep specs") {
    const SweepSpec s = parse_sweep("sun_elevation=10:80:8");
    CHECK(s.parameter == "sun_elevation");
    REQUIRE(s.values.size() == 8);
    CHECK(s.values.front() == 10.0);
    CHECK(s.values.back() == 80.0);
    CHECK(s.values[1] == doctest::Approx(20.0));
    CHECK(parse_sweep("yaw=5:9:1").values == std::vector<double>{5.0});
    for (const char* bad : {"", "=1:2:3", "yaw", "yaw=1:2", "yaw=1:2:0", "yaw=a:2:3", "yaw=1:2:2.5"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(parse_sweep(bad), ConfigError);
    }
}

TEST_CASE("overrides") {
    Scenario s = parse_scenario(test::base_scenario().dump(), ".");
    apply_override(s, "sun_elevation", 25.0);
    CHECK(s.sun.elevation_deg == 25.0);
    apply_override(s, "altitude", 80.0);
    CHECK(s.pose->altitude == 80.0);
    apply_override(s, "yaw", 15.0);
    CHECK(s.pose->yaw == 15.0);
    apply_override(s, "phase_angle", 20.0);
    CHECK(s.sun.elevation_deg == doctest::Approx(70.0));
    apply_override(s, "exposure", 2.0);
    CHECK(s.intrinsics.exposure_scale == 2.0);
    CHECK_THROWS_AS(apply_override(s, "b0", 2.0), ConfigError);
    CHECK_THROWS_AS(apply_override(s, "zoom", 2.0), ConfigError);
    CHECK_THROWS_AS(apply_override(s, "sun_elevation", 100.0), ConfigError);
}

}  // TEST_SUITE
