// Copyright 2026 The LSR Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>

#include <Eigen/Core>

#include "lsr/camera.hpp"
#include "lsr/grid.hpp"
#include "lsr/terrain.hpp"

namespace lsr {

struct Hit {
    Eigen::Vector3d point;
    double t = 0.0;
    std::size_t i = 0;  // patch row (lower-left cell)
    std::size_t j = 0;  // patch column
    bool nodata = false;  // ray entered a patch with a nodata corner
};

/// First-hit tracer for the bilinear surface spanned by a DEM's cell centres.
/// Walks the patches under the ray's horizontal projection with a 2-D DDA and
/// solves the ray/bilinear-patch quadratic in each one. Holds a reference to
/// the DEM, which must outlive it.
class HeightfieldTracer {
public:
    explicit HeightfieldTracer(const DemGrid& dem);

    std::optional<Hit> intersect(const Ray& ray, double max_range) const;

    const DemGrid& dem() const { return dem_; }
    const ElevationRange& elevation() const { return range_; }

private:
    bool solve_patch(const Ray& ray, std::size_t i, std::size_t j, double t0, double t1,
                     double& t_hit) const;

    const DemGrid& dem_;
    ElevationRange range_;
};

/// Convenience wrapper building a tracer for a single query.
std::optional<Hit> intersect_heightfield(const DemGrid& dem, const Ray& ray, double max_range);

}  // namespace lsr
