// Copyright 2026 The LSR Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "lsr/error.hpp"

namespace lsr {

/// Square-celled, axis-aligned georeference shared by a DEM and every raster
/// registered to it. Cell (i, j) is centred at
/// (origin_x + j * cell_size, origin_y + i * cell_size); row index grows north.
struct GridGeometry {
    std::size_t rows = 0;
    std::size_t cols = 0;
    double cell_size = 1.0;
    double origin_x = 0.0;
    double origin_y = 0.0;

    double x_of(std::size_t j) const { return origin_x + static_cast<double>(j) * cell_size; }
    double y_of(std::size_t i) const { return origin_y + static_cast<double>(i) * cell_size; }

    // Extent of the lattice of cell centres, the domain of bilinear sampling.
    double x_max() const { return x_of(cols - 1); }
    double y_max() const { return y_of(rows - 1); }
    double center_x() const { return 0.5 * (origin_x + x_max()); }
    double center_y() const { return 0.5 * (origin_y + y_max()); }

    std::size_t size() const { return rows * cols; }

    bool contains(double x, double y) const {
        return x >= origin_x && x <= x_max() && y >= origin_y && y <= y_max();
    }

    /// Throws DomainError unless rows, cols >= 2 and cell_size > 0.
    void validate() const;

    friend bool operator==(const GridGeometry&, const GridGeometry&) = default;
};

/// Row-major single-channel grid. NaN is always treated as nodata; an optional
/// sentinel marks additional nodata cells (ESRI `NODATA_value`).
template <typename T>
class Grid {
public:
    using value_type = T;

    Grid() = default;
    Grid(GridGeometry geometry, std::vector<T> values, std::optional<T> nodata = std::nullopt);
    Grid(GridGeometry geometry, T fill);

    const GridGeometry& geometry() const { return geometry_; }
    std::size_t rows() const { return geometry_.rows; }
    std::size_t cols() const { return geometry_.cols; }
    double cell_size() const { return geometry_.cell_size; }
    const std::optional<T>& nodata() const { return nodata_; }

    T operator()(std::size_t i, std::size_t j) const { return values_[i * geometry_.cols + j]; }
    T& operator()(std::size_t i, std::size_t j) { return values_[i * geometry_.cols + j]; }

    std::span<const T> values() const { return values_; }
    std::span<T> values() { return values_; }

    bool is_nodata_value(T v) const { return std::isnan(v) || (nodata_ && v == *nodata_); }
    bool is_nodata(std::size_t i, std::size_t j) const { return is_nodata_value((*this)(i, j)); }
    bool has_nodata() const;

private:
    GridGeometry geometry_;
    std::vector<T> values_;
    std::optional<T> nodata_;
};

/// Elevations in meters, stored as float to match the on-disk formats.
using DemGrid = Grid<float>;

/// Derived or registered per-cell quantity (albedo, displacement, normal
/// components, radiance). Nodata is NaN.
using Raster = Grid<double>;

extern template class Grid<float>;
extern template class Grid<double>;

/// Bilinear interpolation of the four cell centres surrounding (x, y).
/// Exact on cell centres. Returns NaN if any support cell is nodata.
/// Throws RangeError outside the lattice of cell centres.
template <typename T>
double sample_bilinear(const Grid<T>& grid, double x, double y);

/// Like sample_bilinear but returns nullopt instead of throwing when out of range.
template <typename T>
std::optional<double> try_sample_bilinear(const Grid<T>& grid, double x, double y);

/// Widen a DEM to a Raster, mapping its sentinel to NaN.
Raster to_raster(const DemGrid& dem);

}  // namespace lsr
