// Copyright 2026 The LSR Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "lsr/grid.hpp"

namespace lsr {

/// Per-cell maximum horizon elevation angle (degrees) in each of n azimuth
/// sectors. Sector k is centred on azimuth k * 360 / n, measured clockwise
/// from north (+y). Angles are floored at 0; nodata cells hold NaN.
class HorizonMap {
public:
    HorizonMap() = default;
    HorizonMap(GridGeometry geometry, std::size_t n_azimuths, std::vector<float> angles_deg);

    const GridGeometry& geometry() const { return geometry_; }
    std::size_t n_azimuths() const { return n_azimuths_; }

    float angle_deg(std::size_t i, std::size_t j, std::size_t sector) const {
        return angles_[(i * geometry_.cols + j) * n_azimuths_ + sector];
    }

    /// Sector whose centre is nearest to `azimuth_deg` (any real value).
    std::size_t sector_for_azimuth(double azimuth_deg) const;
    double sector_center_deg(std::size_t sector) const {
        return 360.0 * static_cast<double>(sector) / static_cast<double>(n_azimuths_);
    }

    /// One raster per sector, for export.
    Raster sector_raster(std::size_t sector) const;

    std::span<const float> values() const { return angles_; }

private:
    GridGeometry geometry_;
    std::size_t n_azimuths_ = 0;
    std::vector<float> angles_;
};

/// OpenMP kernel over rows. Throws DomainError if n_azimuths < 4.
HorizonMap compute_horizon_map(const DemGrid& dem, std::size_t n_azimuths, int workers = 0);

/// Single-threaded reference for the same kernel.
HorizonMap compute_horizon_map_serial(const DemGrid& dem, std::size_t n_azimuths);

}  // namespace lsr
