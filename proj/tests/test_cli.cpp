// Copyright 2026 The LSR Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cstring>
#include <sstream>

#include "cli.hpp"
#include "fixtures.hpp"
#include "lsr/image_io.hpp"
#include "lsr/raster_io.hpp"
#include "test_util.hpp"

using namespace lsr;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

void write_scenario(const fs::path& path, const nlohmann::ordered_json& j) { test::write_text(path, j.dump(2)); }

// Radiance dump: 24-byte header then row-major float32, top row first.
std::vector<float> read_dump(const fs::path& path, std::uint32_t& rows, std::uint32_t& cols) {
    const std::string bytes = test::read_bytes(path);
    REQUIRE(bytes.size() >= 24);
    std::memcpy(&rows, bytes.data() + 8, 4);
    std::memcpy(&cols, bytes.data() + 12, 4);
    std::vector<float> v(std::size_t(rows) * cols);
    REQUIRE(bytes.size() == 24 + v.size() * 4);
    std::memcpy(v.data(), bytes.data() + 24, v.size() * 4);
    return v;
}

std::vector<fs::path> files_under(const fs::path& dir) {
    std::vector<fs::path> out;
    for (const auto& e : fs::recursive_directory_iterator(dir)) {
        if (e.is_regular_file()) {
            out.push_back(fs::relative(e.path(), dir));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("prep of a flat DEM") {
    test::TempDir dir;
    save_dem(test::flat_dem(16, 1.0, 7.0), dir / "flat.asc");
    const Result r = run_cli({"prep", (dir / "flat.asc").string(), (dir / "a").string(), "--azimuths", "8"});
    REQUIRE(r.code == 0);
    for (const char* name : {"normal_x.ldem", "normal_y.ldem", "normal_z.ldem"}) {
        const Raster n = load_raster(dir / "a" / name);
        const double expected = std::string(name) == "normal_z.ldem" ? 1.0 : 0.0;
        for (double v : n.values()) {
            CHECK(v == expected);
        }
    }
    for (std::size_t k = 0; k < 8; ++k) {
        char name[32];
        std::snprintf(name, sizeof(name), "sector_%03zu.ldem", k);
        const Raster sector = load_raster(dir / "a" / "horizon" / name);
        for (double v : sector.values()) {
            CHECK(v == 0.0);
        }
    }
    const auto report = nlohmann::json::parse(test::read_bytes(dir / "a" / "prep_report.json"));
    CHECK(report["min_elevation_m"] == 7.0);
    CHECK(report["max_elevation_m"] == 7.0);
    CHECK(report["cell_size_m"] == 1.0);

    SUBCASE("rerunning is byte-identical") {
        REQUIRE(run_cli({"prep", (dir / "flat.asc").string(), (dir / "b").string(), "--azimuths", "8"}).code == 0);
        const auto a = files_under(dir / "a");
        REQUIRE(a == files_under(dir / "b"));
        for (const fs::path& rel : a) {
            CHECK(test::read_bytes(dir / "a" / rel) == test::read_bytes(dir / "b" / rel));
        }
    }
}

TEST_CASE("prep of a central peak yields horizons around it") {
    test::TempDir dir;
    const DemGrid dem = test::make_dem(33, 33, 1.0, [](double x, double y) {
        return 20.0 * std::exp(-((x - 16) * (x - 16) + (y - 16) * (y - 16)) / 18.0);
    });
    save_dem(dem, dir / "peak.ldem");
    REQUIRE(run_cli({"prep", (dir / "peak.ldem").string(), (dir / "out").string(), "--azimuths", "16"}).code == 0);
    // Sector 4 looks east (90 degrees); a cell west of the peak sees it.
    const Raster east = load_raster(dir / "out" / "horizon" / "sector_004.ldem");
    CHECK(east(16, 10) > 5.0);
    CHECK(std::abs(east(16, 10) - test::brute_force_horizon(dem, 16, 10, 90.0, 0.05)) <= 1.0);
    CHECK(east(16, 22) == 0.0);
}

TEST_CASE("prep errors") {
    test::TempDir dir;
    CHECK(run_cli({"prep", (dir / "missing.asc").string(), (dir / "o").string()}).code == 3);
    test::write_text(dir / "bad.asc", "ncols 2\nnrows 2\nxllcorner 0\nyllcorner 0\ncellsize one\n1 2\n3 4\n");
    const Result r = run_cli({"prep", (dir / "bad.asc").string(), (dir / "o").string()});
    CHECK(r.code == 3);
    CHECK(r.err.find(":5:") != std::string::npos);
}

TEST_CASE("flat Lambert render is a uniform 128") {
    test::TempDir dir;
    save_dem(test::flat_dem(65, 1.0), dir / "dem.asc");
    write_scenario(dir / "s.json", test::base_scenario());
    const Result r = run_cli({"render", (dir / "s.json").string(), (dir / "img.pgm").string()});
    REQUIRE(r.code == 0);
    const Gray8Image img = read_pgm8(dir / "img.pgm");
    CHECK(img.width == 16);
    CHECK(img.height == 16);
    for (auto p : img.pixels) {
        CHECK(p == 128);
    }
    const auto meta = nlohmann::json::parse(test::read_bytes(dir / "img.json"));
    CHECK(meta["hit_pixels"] == 256);
    CHECK(meta["model"]["kind"] == "lambert");
}

TEST_CASE("scenario without dem_path exits 2 and names the field") {
    test::TempDir dir;
    auto j = test::base_scenario();
    j.erase("dem_path");
    write_scenario(dir / "s.json", j);
    const Result r = run_cli({"render", (dir / "s.json").string(), (dir / "img.pgm").string()});
    CHECK(r.code == 2);
    CHECK(r.err.find("dem_path") != std::string::npos);
    CHECK(!fs::exists(dir / "img.pgm"));
}

TEST_CASE("every malformed scenario exits 2 with the field in the diagnostic") {
    test::TempDir dir;
    save_dem(test::flat_dem(17, 1.0), dir / "dem.asc");
    for (const auto& bad : test::malformed_scenarios()) {
        CAPTURE(bad.name);
        test::write_text(dir / "bad.json", bad.text);
        const Result r = run_cli({"render", (dir / "bad.json").string(), (dir / "img.pgm").string()});
        CHECK(r.code == 2);
        CHECK(r.err.find(bad.field) != std::string::npos);
    }
}

TEST_CASE("shadow band flips sides with the sun azimuth") {
    test::TempDir dir;
    // 10 m plateau between x = 28 and x = 36.
    save_dem(test::make_dem(65, 65, 1.0, [](double x, double) { return x >= 28 && x <= 36 ? 10.0 : 0.0; }),
             dir / "ridge.asc");
    auto j = test::base_scenario("ridge.asc");
    j["camera"]["pixel_pitch_m"] = 5e-4;
    j["camera"]["width_px"] = 64;
    j["camera"]["height_px"] = 8;
    j["camera"]["pose"]["altitude_m"] = 100.0;
    j["sun"] = {{"elevation_deg", 20.0}, {"azimuth_deg", 90.0}};
    write_scenario(dir / "east.json", j);
    j["sun"]["azimuth_deg"] = 270.0;
    write_scenario(dir / "west.json", j);
    REQUIRE(run_cli({"render", (dir / "east.json").string(), (dir / "e.pgm").string(), "--dump-radiance",
                     (dir / "e.ldem").string()}).code == 0);
    REQUIRE(run_cli({"render", (dir / "west.json").string(), (dir / "w.pgm").string(), "--dump-radiance",
                     (dir / "w.ldem").string()}).code == 0);
    std::uint32_t rows = 0, cols = 0;
    const auto e = read_dump(dir / "e.ldem", rows, cols);
    CHECK(rows == 8);
    CHECK(cols == 64);
    const auto w = read_dump(dir / "w.ldem", rows, cols);
    // Column u looks at x ~ u + 0.5.
    const std::size_t west_col = 4 * 64 + 19, east_col = 4 * 64 + 44;
    CHECK(e[west_col] == 0.0f);
    CHECK(e[east_col] > 0.0f);
    CHECK(w[west_col] > 0.0f);
    CHECK(w[east_col] == 0.0f);
}

TEST_CASE("sweep writes one suffixed image per value") {
    test::TempDir dir;
    save_dem(test::flat_dem(65, 1.0), dir / "dem.asc");
    write_scenario(dir / "s.json", test::base_scenario());
    REQUIRE(run_cli({"render", (dir / "s.json").string(), (dir / "img.pgm").string(), "--sweep",
                     "sun_elevation=30:90:3"}).code == 0);
    const std::uint8_t expected[] = {64, 110, 128};  // 0.5 * sin(e) * 255
    for (int k = 0; k < 3; ++k) {
        const Gray8Image img = read_pgm8(dir / ("img_00" + std::to_string(k) + ".pgm"));
        CHECK(img.pixels[0] == expected[k]);
        CHECK(fs::exists(dir / ("img_00" + std::to_string(k) + ".json")));
    }
    CHECK(run_cli({"render", (dir / "s.json").string(), (dir / "img.pgm").string(), "--sweep", "zoom=1:2:2"}).code ==
          2);
}

TEST_CASE("render output does not depend on the worker count") {
    test::TempDir dir;
    save_dem(test::crater_dem(64, 1.0, 21), dir / "dem.ldem");
    auto j = test::base_scenario("dem.ldem");
    j["sun"] = {{"elevation_deg", 25.0}, {"azimuth_deg", 300.0}};
    j["camera"]["width_px"] = 40;
    j["camera"]["height_px"] = 30;
    j["model"] = {{"kind", "hapke_paper"}, {"B0", 0.4}};
    write_scenario(dir / "s.json", j);
    std::string first;
    for (const char* workers : {"1", "2", "8", "1"}) {
        REQUIRE(run_cli({"render", (dir / "s.json").string(), (dir / "img.pgm").string(), "--workers", workers})
                    .code == 0);
        const std::string bytes = test::read_bytes(dir / "img.pgm") + test::read_bytes(dir / "img.json");
        if (first.empty()) {
            first = bytes;
        }
        CHECK(bytes == first);
    }
}

TEST_CASE("sequence of the descent ladder") {
    test::TempDir dir;
    const Scene scene = test::ladder_scene();
    save_dem(scene.terrain->dem, dir / "moon.ldem");
    auto j = test::base_scenario("moon.ldem");
    j["camera"].erase("pose");
    j["camera"]["pixel_pitch_m"] = 2e-4;
    nlohmann::ordered_json wps = nlohmann::ordered_json::array();
    for (const auto& p : test::kLadder) {
        wps.push_back({{"altitude_m", p.altitude}, {"roll_deg", p.roll}, {"pitch_deg", p.pitch}, {"yaw_deg", p.yaw}});
    }
    j["trajectory"] = {{"frames_between", 0}, {"waypoints", wps}};
    write_scenario(dir / "ladder.json", j);
    REQUIRE(run_cli({"sequence", (dir / "ladder.json").string(), (dir / "out").string()}).code == 0);
    const auto manifest = nlohmann::json::parse(test::read_bytes(dir / "out" / "manifest.json"));
    CHECK(manifest["frame_count"] == 4);
    for (std::size_t k = 0; k < 4; ++k) {
        CHECK(fs::exists(dir / "out" / (frame_stem(k) + ".pgm")));
    }

    SUBCASE("frames_between = 3 on two waypoints gives five frames") {
        j["trajectory"]["frames_between"] = 3;
        j["trajectory"]["waypoints"] = {wps[0], wps[1]};
        write_scenario(dir / "two.json", j);
        REQUIRE(run_cli({"sequence", (dir / "two.json").string(), (dir / "two").string()}).code == 0);
        CHECK(nlohmann::json::parse(test::read_bytes(dir / "two" / "manifest.json"))["frame_count"] == 5);
    }
    SUBCASE("empty trajectory") {
        j["trajectory"]["waypoints"] = nlohmann::ordered_json::array();
        write_scenario(dir / "empty.json", j);
        const Result r = run_cli({"sequence", (dir / "empty.json").string(), (dir / "empty").string()});
        CHECK(r.code == 2);
        CHECK(r.err.find("trajectory.waypoints") != std::string::npos);
    }
}

TEST_CASE("command-line misuse") {
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"render"}).code == 2);
    CHECK(run_cli({"frobnicate"}).code == 2);
    CHECK(run_cli({"render", "a.json", "b.pgm", "--workers", "-3"}).code == 2);
    CHECK(run_cli({"--help"}).code == 0);
}

}  // TEST_SUITE
