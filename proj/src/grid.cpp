// Copyright 2026 The LSR Authors
// SPDX-License-Identifier: Apache-2.0

#include "lsr/grid.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace lsr {

void GridGeometry::validate() const {
    if (rows < 2 || cols < 2) {
        throw DomainError("grid must be at least 2x2, got " + std::to_string(rows) + "x" +
                          std::to_string(cols));
    }
    if (!(cell_size > 0.0) || !std::isfinite(cell_size)) {
        throw DomainError("cell_size must be positive and finite");
    }
    if (!std::isfinite(origin_x) || !std::isfinite(origin_y)) {
        throw DomainError("grid origin must be finite");
    }
}

template <typename T>
Grid<T>::Grid(GridGeometry geometry, std::vector<T> values, std::optional<T> nodata)
    : geometry_(geometry), values_(std::move(values)), nodata_(nodata) {
    geometry_.validate();
    if (values_.size() != geometry_.size()) {
        throw StructuralError("grid holds " + std::to_string(values_.size()) + " values, expected " +
                              std::to_string(geometry_.size()));
    }
    for (T v : values_) {
        if (!is_nodata_value(v) && !std::isfinite(v)) {
            throw DomainError("grid value is not finite");
        }
    }
}

template <typename T>
Grid<T>::Grid(GridGeometry geometry, T fill)
    : Grid(geometry, std::vector<T>(geometry.rows * geometry.cols, fill)) {}

template <typename T>
bool Grid<T>::has_nodata() const {
    return std::any_of(values_.begin(), values_.end(), [this](T v) { return is_nodata_value(v); });
}

template class Grid<float>;
template class Grid<double>;

namespace {

struct Support {
    std::size_t i, j;
    double u, v;
};

std::optional<Support> locate(const GridGeometry& g, double x, double y) {
    if (!(g.contains(x, y))) {
        return std::nullopt;
    }
    const double fx = (x - g.origin_x) / g.cell_size;
    const double fy = (y - g.origin_y) / g.cell_size;
    auto j = static_cast<std::size_t>(std::floor(fx));
    auto i = static_cast<std::size_t>(std::floor(fy));
    j = std::min(j, g.cols - 2);
    i = std::min(i, g.rows - 2);
    return Support{i, j, fx - static_cast<double>(j), fy - static_cast<double>(i)};
}

template <typename T>
double interpolate(const Grid<T>& grid, const Support& s) {
    const T z00 = grid(s.i, s.j);
    const T z01 = grid(s.i, s.j + 1);
    const T z10 = grid(s.i + 1, s.j);
    const T z11 = grid(s.i + 1, s.j + 1);
    if (grid.is_nodata_value(z00) || grid.is_nodata_value(z01) || grid.is_nodata_value(z10) ||
        grid.is_nodata_value(z11)) {
        return std::numeric_limits<double>::quiet_NaN();
    }
    const double u = s.u;
    const double v = s.v;
    return (1.0 - u) * (1.0 - v) * z00 + u * (1.0 - v) * z01 + (1.0 - u) * v * z10 + u * v * z11;
}

}  // namespace

template <typename T>
double sample_bilinear(const Grid<T>& grid, double x, double y) {
    auto support = locate(grid.geometry(), x, y);
    if (!support) {
        throw RangeError("sample point (" + std::to_string(x) + ", " + std::to_string(y) +
                         ") outside raster bounds");
    }
    return interpolate(grid, *support);
}

template <typename T>
std::optional<double> try_sample_bilinear(const Grid<T>& grid, double x, double y) {
    auto support = locate(grid.geometry(), x, y);
    if (!support) {
        return std::nullopt;
    }
    return interpolate(grid, *support);
}

template double sample_bilinear(const Grid<float>&, double, double);
template double sample_bilinear(const Grid<double>&, double, double);
template std::optional<double> try_sample_bilinear(const Grid<float>&, double, double);
template std::optional<double> try_sample_bilinear(const Grid<double>&, double, double);

Raster to_raster(const DemGrid& dem) {
    std::vector<double> values(dem.values().size());
    for (std::size_t k = 0; k < values.size(); ++k) {
        const float v = dem.values()[k];
        values[k] = dem.is_nodata_value(v) ? std::numeric_limits<double>::quiet_NaN() : v;
    }
    return Raster(dem.geometry(), std::move(values));
}

}  // namespace lsr
