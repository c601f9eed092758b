// Copyright 2026 The LSR Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <numeric>

#include "lsr/error.hpp"
#include "lsr/render.hpp"
#include "oracles.hpp"

using namespace lsr;

namespace {

// Nadir camera 100 m above the centre of a 64 m flat grid, footprint ~20 m.
Scene flat_scene(double sun_el, double albedo = 0.5) {
    Scene s;
    s.terrain = make_terrain(test::flat_dem(65, 1.0), std::nullopt, albedo);
    s.sun = {sun_el, 0.0, 1.0};
    s.intrinsics = {0.05, 1e-4, 32, 32, 1.0};
    s.pose = make_pose({32.0, 32.0, 100.0}, 0, 0, 0);
    s.model = {ReflectanceKind::Lambert, 0.0};
    return s;
}

double mean(const std::vector<float>& v) {
    return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

}  // namespace

TEST_SUITE("render") {

TEST_CASE("flat plane under an overhead sun is uniformly a * I0") {
    const ImageBuffer img = render(flat_scene(90.0));
    CHECK(img.metadata.hit_pixels == 32u * 32u);
    for (float r : img.radiance) {
        CHECK(r == doctest::Approx(0.5).epsilon(1e-6));
    }
    REQUIRE(img.metadata.mean_phase_deg);
    // Off-axis pixels see the overhead sun at up to the half field of view.
    CHECK(*img.metadata.mean_phase_deg < rad_to_deg(std::atan(16 * 1e-4 / 0.05)));
    REQUIRE(img.metadata.center_slant_range);
    CHECK(*img.metadata.center_slant_range == doctest::Approx(100.0));
    CHECK(*img.metadata.center_gsd == doctest::Approx(100.0 * 1e-4 / 0.05));
}

TEST_CASE("flat plane at 30 degrees elevation is a * sin 30") {
    const ImageBuffer img = render(flat_scene(30.0));
    for (float r : img.radiance) {
        CHECK(std::abs(r - 0.25) <= 1e-6);
    }
    CHECK(*img.metadata.mean_phase_deg == doctest::Approx(60.0).epsilon(1e-2));
}

TEST_CASE("misses take the background value") {
    Scene s = flat_scene(90.0);
    s.pose = make_pose({32.0, 32.0, 100.0}, 0, 180, 0);  // looking up
    s.options.background = 0.125;
    const ImageBuffer img = render(s);
    CHECK(img.metadata.hit_pixels == 0u);
    CHECK(!img.metadata.mean_phase_deg);
    for (float r : img.radiance) {
        CHECK(r == 0.125f);
    }
}

TEST_CASE("step terrain casts a band on the far side from the sun") {
    Scene s = flat_scene(20.0);
    s.terrain = make_terrain(test::step_dem(65, 1.0, 40.0, 10.0), std::nullopt, 0.5);
    s.intrinsics = {0.05, 5e-4, 64, 8, 1.0};  // 64 m wide footprint
    s.sun.azimuth_deg = 90.0;                 // sun in the east, wall faces west
    s.pose = make_pose({32.0, 32.0, 100.0}, 0, 0, 0);
    const ImageBuffer east = render(s);
    s.sun.azimuth_deg = 270.0;
    const ImageBuffer west = render(s);
    // Pixel column u views x ~ u + 0.5; the band lies west of the wall.
    CHECK(east.at(30, 4) == 0.0f);
    CHECK(east.at(4, 4) > 0.0f);
    CHECK(west.at(30, 4) > 0.0f);
}

TEST_CASE("parallel render equals the serial reference bit for bit") {
    Scene s = flat_scene(25.0);
    s.terrain = make_terrain(test::crater_dem(64, 1.0, 3), std::nullopt, 0.3);
    s.sun.azimuth_deg = 140.0;
    s.intrinsics = {0.05, 4e-4, 48, 40, 1.0};
    s.pose = make_pose({32.0, 30.0, 90.0}, 3, -4, 20);
    const ImageBuffer ref = render_serial(s);
    for (int workers : {1, 2, 3, 8}) {
        const ImageBuffer img = render(s, workers);
        CHECK(test::hash_values(img.radiance) == test::hash_values(ref.radiance));
        CHECK(img.metadata.hit_pixels == ref.metadata.hit_pixels);
        CHECK(*img.metadata.mean_phase_deg == *ref.metadata.mean_phase_deg);
    }
}

TEST_CASE("switching shadows off never darkens a pixel") {
    Scene s = flat_scene(15.0);
    s.terrain = make_terrain(test::crater_dem(64, 1.0, 8), std::nullopt, 0.4, 32);
    s.sun.azimuth_deg = 200.0;
    s.intrinsics = {0.05, 5e-4, 40, 40, 1.0};
    const ImageBuffer shadowed = render(s);
    s.options.shadow_method = ShadowMethod::None;
    const ImageBuffer lit = render(s);
    for (std::size_t k = 0; k < lit.radiance.size(); ++k) {
        CHECK(lit.radiance[k] >= shadowed.radiance[k]);
    }
}

TEST_CASE("mean radiance grows with sun elevation and with I0") {
    double prev = -1.0;
    for (double el = 10.0; el <= 90.0; el += 10.0) {
        const double m = mean(render(flat_scene(el)).radiance);
        CHECK(m > prev);
        prev = m;
    }
    Scene s = flat_scene(40.0);
    s.model = {ReflectanceKind::Hapke, 0.4};
    const double one = mean(render(s).radiance);
    s.sun.intensity = 3.0;
    CHECK(mean(render(s).radiance) == doctest::Approx(3.0 * one).epsilon(1e-6));
}

TEST_CASE("albedo that does not match the DEM is a configuration error") {
    Scene s = flat_scene(90.0);
    s.terrain = make_terrain(test::flat_dem(65, 1.0), Raster(GridGeometry{10, 10, 1.0, 0, 0}, 0.5));
    try {
        render(s);
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(e.field() == "albedo");
    }
}

TEST_CASE("horizon shadows without a horizon map are rejected") {
    Scene s = flat_scene(90.0);
    s.options.shadow_method = ShadowMethod::HorizonMap;
    CHECK_THROWS_AS(render(s), ConfigError);
}

TEST_CASE("quantize") {
    ImageBuffer img;
    img.width = 4;
    img.height = 1;
    img.radiance = {1.0f, 0.0f, 2.0f, 0.5f};
    CHECK(quantize(img, 1.0) == std::vector<std::uint8_t>{255, 0, 255, 128});
    CHECK(quantize(img, 0.5) == std::vector<std::uint8_t>{128, 0, 255, 64});
}

}  // TEST_SUITE
