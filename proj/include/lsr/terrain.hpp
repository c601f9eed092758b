// Copyright 2026 The LSR Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Core>

#include "lsr/grid.hpp"

namespace lsr {

/// Per-cell unit surface normal, split into three registered rasters.
struct NormalMap {
    Raster nx;
    Raster ny;
    Raster nz;

    const GridGeometry& geometry() const { return nz.geometry(); }

    /// Normal at cell (i, j); NaN components where the stencil touched nodata.
    Eigen::Vector3d at(std::size_t i, std::size_t j) const { return {nx(i, j), ny(i, j), nz(i, j)}; }

    /// Bilinearly interpolated and renormalised normal at world (x, y).
    /// Returns nullopt out of bounds or on nodata.
    std::optional<Eigen::Vector3d> sample(double x, double y) const;
};

/// Normalised (-dz/dx, -dz/dy, 1) with central differences on interior cells
/// and one-sided differences on the border. Cells whose stencil touches nodata
/// get NaN normals.
NormalMap derive_normal_map(const DemGrid& dem);

/// elevation - reference_elevation per cell; nodata stays NaN.
Raster derive_displacement_map(const DemGrid& dem, double reference_elevation);

struct ElevationRange {
    double min = 0.0;
    double max = 0.0;
};

/// Min and max over non-nodata cells. Throws DomainError if every cell is nodata.
ElevationRange elevation_range(const DemGrid& dem);

}  // namespace lsr
