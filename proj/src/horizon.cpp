// Copyright 2026 The LSR Authors
// SPDX-License-Identifier: Apache-2.0

#include "lsr/horizon.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <omp.h>

#include "lsr/terrain.hpp"

namespace lsr {

namespace {

constexpr double kRadToDeg = 180.0 / std::numbers::pi;

struct SectorDirection {
    double dx;
    double dy;
};

std::vector<SectorDirection> sector_directions(std::size_t n) {
    std::vector<SectorDirection> dirs(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double az = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
        // Cardinal sectors must stay exactly on edge rows and columns.
        auto snap = [](double v) { return std::abs(v) < 1e-12 ? 0.0 : v; };
        dirs[k] = {snap(std::sin(az)), snap(std::cos(az))};
    }
    return dirs;
}

// Scans one sector from cell (i, j) in half-cell steps to the lattice edge.
float scan_sector(const DemGrid& dem, std::size_t i, std::size_t j, SectorDirection dir,
                  double z_top) {
    const GridGeometry& g = dem.geometry();
    const double step = 0.5 * g.cell_size;
    const double x0 = g.x_of(j);
    const double y0 = g.y_of(i);
    const double z0 = dem(i, j);
    double best = 0.0;  // tangent of the best angle so far
    for (std::size_t m = 1;; ++m) {
        const double d = static_cast<double>(m) * step;
        // Nothing farther out can beat the current best.
        if ((z_top - z0) / d <= best) {
            break;
        }
        auto z = try_sample_bilinear(dem, x0 + d * dir.dx, y0 + d * dir.dy);
        if (!z) {
            break;
        }
        if (std::isnan(*z)) {
            continue;
        }
        best = std::max(best, (*z - z0) / d);
    }
    return static_cast<float>(std::atan(best) * kRadToDeg);
}

void horizon_row(const DemGrid& dem, std::size_t i, std::span<const SectorDirection> dirs,
                 double z_top, std::span<float> out) {
    const std::size_t n = dirs.size();
    for (std::size_t j = 0; j < dem.cols(); ++j) {
        float* cell = out.data() + j * n;
        if (dem.is_nodata(i, j)) {
            std::fill(cell, cell + n, std::numeric_limits<float>::quiet_NaN());
            continue;
        }
        for (std::size_t k = 0; k < n; ++k) {
            cell[k] = scan_sector(dem, i, j, dirs[k], z_top);
        }
    }
}

void check_sectors(std::size_t n_azimuths) {
    if (n_azimuths < 4) {
        throw DomainError("horizon map needs at least 4 azimuth sectors, got " +
                          std::to_string(n_azimuths));
    }
}

}  // namespace

HorizonMap::HorizonMap(GridGeometry geometry, std::size_t n_azimuths, std::vector<float> angles_deg)
    : geometry_(geometry), n_azimuths_(n_azimuths), angles_(std::move(angles_deg)) {
    check_sectors(n_azimuths_);
    if (angles_.size() != geometry_.size() * n_azimuths_) {
        throw StructuralError("horizon map size does not match grid x sectors");
    }
}

std::size_t HorizonMap::sector_for_azimuth(double azimuth_deg) const {
    const double width = 360.0 / static_cast<double>(n_azimuths_);
    double a = std::fmod(azimuth_deg, 360.0);
    if (a < 0.0) {
        a += 360.0;
    }
    return static_cast<std::size_t>(std::llround(a / width)) % n_azimuths_;
}

Raster HorizonMap::sector_raster(std::size_t sector) const {
    std::vector<double> values(geometry_.size());
    for (std::size_t c = 0; c < values.size(); ++c) {
        values[c] = angles_[c * n_azimuths_ + sector];
    }
    return Raster(geometry_, std::move(values));
}

HorizonMap compute_horizon_map(const DemGrid& dem, std::size_t n_azimuths, int workers) {
    check_sectors(n_azimuths);
    const GridGeometry& g = dem.geometry();
    const auto dirs = sector_directions(n_azimuths);
    const double z_top = elevation_range(dem).max;
    const std::size_t row_stride = g.cols * n_azimuths;
    std::vector<float> angles(g.rows * row_stride);
    const int threads = workers > 0 ? workers : omp_get_max_threads();

#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(g.rows); ++i) {
        horizon_row(dem, static_cast<std::size_t>(i), dirs, z_top,
                    std::span<float>(angles).subspan(static_cast<std::size_t>(i) * row_stride, row_stride));
    }
    return HorizonMap(g, n_azimuths, std::move(angles));
}

HorizonMap compute_horizon_map_serial(const DemGrid& dem, std::size_t n_azimuths) {
    check_sectors(n_azimuths);
    const GridGeometry& g = dem.geometry();
    const auto dirs = sector_directions(n_azimuths);
    const double z_top = elevation_range(dem).max;
    const std::size_t row_stride = g.cols * n_azimuths;
    std::vector<float> angles(g.rows * row_stride);
    for (std::size_t i = 0; i < g.rows; ++i) {
        horizon_row(dem, i, dirs, z_top, std::span<float>(angles).subspan(i * row_stride, row_stride));
    }
    return HorizonMap(g, n_azimuths, std::move(angles));
}

}  // namespace lsr
