// Copyright 2026 The LSR Authors
// SPDX-License-Identifier: Apache-2.0

#include "cli.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lsr/error.hpp"
#include "lsr/horizon.hpp"
#include "lsr/image_io.hpp"
#include "lsr/raster_io.hpp"
#include "lsr/scenario.hpp"
#include "lsr/sequence.hpp"
#include "lsr/terrain.hpp"

namespace lsr::cli {

namespace fs = std::filesystem;

namespace {

struct CommonFlags {
    int workers = 0;
    std::string shadow;
};

void apply_shadow_flag(Scenario& scenario, const std::string& flag) {
    if (flag.empty()) {
        return;
    }
    auto method = parse_shadow_method(flag);
    if (!method) {
        throw ConfigError("--shadow", "expected raymarch, horizon or none, got '" + flag + "'");
    }
    scenario.options.shadow_method = *method;
}

void ensure_parent(const fs::path& path) {
    if (path.has_parent_path()) {
        std::error_code ec;
        fs::create_directories(path.parent_path(), ec);
        if (ec) {
            throw IoError("cannot create " + path.parent_path().string() + ": " + ec.message());
        }
    }
}

void write_text(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::trunc);
    out << text;
    if (!out) {
        throw IoError("failed writing " + path.string());
    }
}

int cmd_prep(const std::string& dem_path, const std::string& out_dir, std::size_t azimuths,
             double reference, int workers, std::ostream& out) {
    if (!fs::exists(dem_path)) {
        throw IoError("DEM not found: " + dem_path);
    }
    const DemGrid dem = load_dem(dem_path);
    const fs::path dir(out_dir);
    std::error_code ec;
    fs::create_directories(dir / "horizon", ec);
    if (ec) {
        throw IoError("cannot create " + dir.string() + ": " + ec.message());
    }

    const NormalMap normals = derive_normal_map(dem);
    save_raster(normals.nx, dir / "normal_x.ldem");
    save_raster(normals.ny, dir / "normal_y.ldem");
    save_raster(normals.nz, dir / "normal_z.ldem");
    save_raster(derive_displacement_map(dem, reference), dir / "displacement.ldem");

    const HorizonMap horizon = compute_horizon_map(dem, azimuths, workers);
    nlohmann::ordered_json sectors = nlohmann::ordered_json::array();
    for (std::size_t k = 0; k < horizon.n_azimuths(); ++k) {
        char name[32];
        std::snprintf(name, sizeof(name), "sector_%03zu.ldem", k);
        save_raster(horizon.sector_raster(k), dir / "horizon" / name);
        sectors.push_back({{"file", std::string("horizon/") + name}, {"azimuth_deg", horizon.sector_center_deg(k)}});
    }

    const ElevationRange range = elevation_range(dem);
    const GridGeometry& g = dem.geometry();
    nlohmann::ordered_json report;
    report["source"] = fs::path(dem_path).filename().string();
    report["rows"] = g.rows;
    report["cols"] = g.cols;
    report["cell_size_m"] = g.cell_size;
    report["origin_m"] = {g.origin_x, g.origin_y};
    report["min_elevation_m"] = range.min;
    report["max_elevation_m"] = range.max;
    report["reference_elevation_m"] = reference;
    report["normal_map"] = {"normal_x.ldem", "normal_y.ldem", "normal_z.ldem"};
    report["displacement_map"] = "displacement.ldem";
    report["horizon_azimuths"] = azimuths;
    report["horizon_sectors"] = std::move(sectors);
    write_text(dir / "prep_report.json", report.dump(2) + "\n");
    out << "prep: " << g.rows << "x" << g.cols << " DEM, elevation " << range.min << " .. " << range.max
        << " m -> " << dir.string() << "\n";
    return kOk;
}

fs::path with_suffix(const fs::path& path, std::size_t index) {
    char suffix[16];
    std::snprintf(suffix, sizeof(suffix), "_%03zu", index);
    fs::path p = path;
    p.replace_filename(path.stem().string() + suffix + path.extension().string());
    return p;
}

int cmd_render(const std::string& scenario_path, const std::string& out_path, const CommonFlags& flags,
               const std::string& dump_path, const std::string& sweep_text, std::ostream& out) {
    Scenario scenario = load_scenario(scenario_path);
    apply_shadow_flag(scenario, flags.shadow);
    if (!scenario.pose) {
        throw ConfigError("camera.pose", "render needs camera.pose; use `sequence` for trajectories");
    }

    std::vector<Scenario> runs;
    if (sweep_text.empty()) {
        runs.push_back(scenario);
    } else {
        const SweepSpec sweep = parse_sweep(sweep_text);
        for (double value : sweep.values) {
            Scenario s = scenario;
            apply_override(s, sweep.parameter, value);
            runs.push_back(std::move(s));
        }
    }

    // Terrain products depend only on the DEM, albedo and shadow method,
    // none of which a sweep touches.
    LoadedScenario loaded = build_scene(runs.front());
    ensure_parent(out_path);
    for (std::size_t k = 0; k < runs.size(); ++k) {
        const Scenario& s = runs[k];
        Scene scene = loaded.scene;
        scene.sun = s.sun;
        scene.intrinsics = s.intrinsics;
        scene.model = s.model;
        scene.pose = resolve_pose(*s.pose, scene.terrain->dem.geometry(), s.reference_elevation);

        const ImageBuffer image = render(scene, flags.workers);
        const fs::path image_path = runs.size() == 1 ? fs::path(out_path) : with_suffix(out_path, k);
        write_frame(image, scene.intrinsics.exposure_scale, image_path);
        if (!dump_path.empty()) {
            const fs::path dump = runs.size() == 1 ? fs::path(dump_path) : with_suffix(dump_path, k);
            ensure_parent(dump);
            save_radiance(image, dump);
        }
        out << "render: " << image_path.string() << " (" << image.metadata.hit_pixels << " hit pixels)\n";
    }
    return kOk;
}

int cmd_sequence(const std::string& scenario_path, const std::string& out_dir, const CommonFlags& flags,
                 std::ostream& out) {
    Scenario scenario = load_scenario(scenario_path);
    apply_shadow_flag(scenario, flags.shadow);
    if (!scenario.trajectory) {
        throw ConfigError("trajectory", "sequence needs a trajectory");
    }
    const LoadedScenario loaded = build_scene(scenario);
    const Manifest manifest = generate_sequence(loaded.scene, *loaded.trajectory, out_dir, flags.workers);
    out << "sequence: " << manifest.frames.size() << " frames -> " << out_dir << "\n";
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Lunar surface image simulator", "lsr"};
    app.require_subcommand(1);

    std::string dem_path, prep_out;
    std::size_t azimuths = 16;
    double reference = 0.0;
    int prep_workers = 0;
    auto* prep = app.add_subcommand("prep", "Derive normal, displacement and horizon maps from a DEM");
    prep->add_option("dem", dem_path, "DEM file (ESRI ASCII or LDEM1 binary)")->required();
    prep->add_option("out_dir", prep_out, "Output directory")->required();
    prep->add_option("--azimuths", azimuths, "Horizon map azimuth sectors")->check(CLI::Range(4, 4096));
    prep->add_option("--reference-elevation", reference, "Datum for the displacement map, meters");
    prep->add_option("--workers", prep_workers, "Worker threads (0 = all)")->check(CLI::NonNegativeNumber);

    std::string render_scenario, render_out, dump_path, sweep;
    CommonFlags render_flags;
    auto* render_cmd = app.add_subcommand("render", "Render one image (or a sweep) from a scenario");
    render_cmd->add_option("scenario", render_scenario, "Scenario JSON")->required();
    render_cmd->add_option("out", render_out, "Output PGM path")->required();
    render_cmd->add_option("--workers", render_flags.workers, "Worker threads (0 = all)")
        ->check(CLI::NonNegativeNumber);
    render_cmd->add_option("--shadow", render_flags.shadow, "raymarch | horizon | none");
    render_cmd->add_option("--dump-radiance", dump_path, "Write float radiance as an LDEM1 raster");
    render_cmd->add_option("--sweep", sweep, "param=lo:hi:n, renders n images");

    std::string seq_scenario, seq_out;
    CommonFlags seq_flags;
    auto* seq_cmd = app.add_subcommand("sequence", "Render every frame of a scenario trajectory");
    seq_cmd->add_option("scenario", seq_scenario, "Scenario JSON")->required();
    seq_cmd->add_option("out_dir", seq_out, "Output directory")->required();
    seq_cmd->add_option("--workers", seq_flags.workers, "Worker threads (0 = all)")->check(CLI::NonNegativeNumber);
    seq_cmd->add_option("--shadow", seq_flags.shadow, "raymarch | horizon | none");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "lsr: " << e.what() << "\n";
        return kConfigError;
    }

    try {
        if (prep->parsed()) {
            return cmd_prep(dem_path, prep_out, azimuths, reference, prep_workers, out);
        }
        if (render_cmd->parsed()) {
            return cmd_render(render_scenario, render_out, render_flags, dump_path, sweep, out);
        }
        return cmd_sequence(seq_scenario, seq_out, seq_flags, out);
    } catch (const ConfigError& e) {
        err << "lsr: configuration error: " << e.what() << "\n";
        return kConfigError;
    } catch (const IoError& e) {
        err << "lsr: I/O error: " << e.what() << "\n";
        return kIoError;
    } catch (const ParseError& e) {
        err << "lsr: parse error: " << e.what() << "\n";
        return kIoError;
    } catch (const StructuralError& e) {
        err << "lsr: malformed file: " << e.what() << "\n";
        return kIoError;
    } catch (const std::exception& e) {
        err << "lsr: render error: " << e.what() << "\n";
        return kRenderError;
    }
}

}  // namespace lsr::cli
