// Copyright 2026 The LSR Authors
// SPDX-License-Identifier: Apache-2.0

#include "lsr/terrain.hpp"

#include <limits>

namespace lsr {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Finite-difference derivative along one axis at index k of n samples spaced h apart.
template <typename Fetch>
double axis_derivative(Fetch z, std::size_t k, std::size_t n, double h) {
    if (k == 0) {
        return (z(1) - z(0)) / h;
    }
    if (k == n - 1) {
        return (z(n - 1) - z(n - 2)) / h;
    }
    return (z(k + 1) - z(k - 1)) / (2.0 * h);
}

}  // namespace

std::optional<Eigen::Vector3d> NormalMap::sample(double x, double y) const {
    auto sx = try_sample_bilinear(nx, x, y);
    if (!sx || std::isnan(*sx)) {
        return std::nullopt;
    }
    Eigen::Vector3d n(*sx, sample_bilinear(ny, x, y), sample_bilinear(nz, x, y));
    return n.normalized();
}

NormalMap derive_normal_map(const DemGrid& dem) {
    const GridGeometry& g = dem.geometry();
    std::vector<double> nx(g.size()), ny(g.size()), nz(g.size());
    const double h = g.cell_size;

#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t si = 0; si < static_cast<std::ptrdiff_t>(g.rows); ++si) {
        const auto i = static_cast<std::size_t>(si);
        for (std::size_t j = 0; j < g.cols; ++j) {
            auto along_x = [&](std::size_t c) -> double {
                return dem.is_nodata(i, c) ? kNaN : dem(i, c);
            };
            auto along_y = [&](std::size_t r) -> double {
                return dem.is_nodata(r, j) ? kNaN : dem(r, j);
            };
            const double dzdx = axis_derivative(along_x, j, g.cols, h);
            const double dzdy = axis_derivative(along_y, i, g.rows, h);
            const std::size_t k = i * g.cols + j;
            if (std::isnan(dzdx) || std::isnan(dzdy) || dem.is_nodata(i, j)) {
                nx[k] = ny[k] = nz[k] = kNaN;
                continue;
            }
            const Eigen::Vector3d n = Eigen::Vector3d(-dzdx, -dzdy, 1.0).normalized();
            nx[k] = n.x();
            ny[k] = n.y();
            nz[k] = n.z();
        }
    }
    return NormalMap{Raster(g, std::move(nx)), Raster(g, std::move(ny)), Raster(g, std::move(nz))};
}

Raster derive_displacement_map(const DemGrid& dem, double reference_elevation) {
    std::vector<double> out(dem.values().size());
    for (std::size_t k = 0; k < out.size(); ++k) {
        const float v = dem.values()[k];
        out[k] = dem.is_nodata_value(v) ? kNaN : static_cast<double>(v) - reference_elevation;
    }
    return Raster(dem.geometry(), std::move(out));
}

ElevationRange elevation_range(const DemGrid& dem) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (float v : dem.values()) {
        if (dem.is_nodata_value(v)) {
            continue;
        }
        lo = std::min<double>(lo, v);
        hi = std::max<double>(hi, v);
    }
    if (lo > hi) {
        throw DomainError("DEM holds no valid elevations");
    }
    return {lo, hi};
}

}  // namespace lsr
