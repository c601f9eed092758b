// Copyright 2026 The LSR Authors
// SPDX-License-Identifier: Apache-2.0

#include "lsr/intersect.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace lsr {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Parameter interval where `o + t d` lies within [lo, hi] along one axis.
bool slab(double o, double d, double lo, double hi, double& t_min, double& t_max) {
    if (d == 0.0) {
        return o >= lo && o <= hi;
    }
    double a = (lo - o) / d;
    double b = (hi - o) / d;
    if (a > b) {
        std::swap(a, b);
    }
    t_min = std::max(t_min, a);
    t_max = std::min(t_max, b);
    return t_min <= t_max;
}

// Smallest root of c + b s + a s^2 in [0, len], with a little slack at both ends.
bool first_root(double a, double b, double c, double len, double slack, double& s_out) {
    double roots[2];
    int n = 0;
    if (a == 0.0) {
        if (b == 0.0) {
            if (c != 0.0) {
                return false;
            }
            roots[n++] = 0.0;
        } else {
            roots[n++] = -c / b;
        }
    } else {
        const double disc = b * b - 4.0 * a * c;
        if (disc < 0.0) {
            return false;
        }
        const double q = -0.5 * (b + std::copysign(std::sqrt(disc), b));
        if (q == 0.0) {
            roots[n++] = 0.0;
        } else {
            roots[n++] = q / a;
            roots[n++] = c / q;
        }
    }
    double best = kInf;
    for (int k = 0; k < n; ++k) {
        if (roots[k] >= -slack && roots[k] <= len + slack) {
            best = std::min(best, roots[k]);
        }
    }
    if (best == kInf) {
        return false;
    }
    s_out = std::clamp(best, 0.0, len);
    return true;
}

}  // namespace

HeightfieldTracer::HeightfieldTracer(const DemGrid& dem) : dem_(dem), range_(elevation_range(dem)) {}

bool HeightfieldTracer::solve_patch(const Ray& ray, std::size_t i, std::size_t j, double t0, double t1,
                                    double& t_hit) const {
    const GridGeometry& g = dem_.geometry();
    const double z00 = dem_(i, j);
    const double z01 = dem_(i, j + 1);
    const double z10 = dem_(i + 1, j);
    const double z11 = dem_(i + 1, j + 1);

    // Surface h(u, v) = z00 + a u + b v + e u v on the unit patch.
    const double a = z01 - z00;
    const double b = z10 - z00;
    const double e = z00 - z01 - z10 + z11;

    const Eigen::Vector3d p0 = ray.at(t0);
    const double inv_cs = 1.0 / g.cell_size;
    const double u0 = (p0.x() - g.x_of(j)) * inv_cs;
    const double v0 = (p0.y() - g.y_of(i)) * inv_cs;
    const double du = ray.direction.x() * inv_cs;
    const double dv = ray.direction.y() * inv_cs;
    const double dz = ray.direction.z();

    // f(s) = ray_z(t0 + s) - h(u(s), v(s))
    const double c0 = p0.z() - (z00 + a * u0 + b * v0 + e * u0 * v0);
    const double c1 = dz - a * du - b * dv - e * (u0 * dv + v0 * du);
    const double c2 = -e * du * dv;

    const double len = t1 - t0;
    const double slack = 1e-9 * (1.0 + std::abs(t0));
    double s = 0.0;
    if (!first_root(c2, c1, c0, len, slack, s)) {
        return false;
    }
    t_hit = t0 + s;
    return true;
}

std::optional<Hit> HeightfieldTracer::intersect(const Ray& ray, double max_range) const {
    const GridGeometry& g = dem_.geometry();
    const Eigen::Vector3d& o = ray.origin;
    const Eigen::Vector3d& d = ray.direction;

    double t_in = 0.0;
    double t_out = max_range;
    if (!slab(o.x(), d.x(), g.origin_x, g.x_max(), t_in, t_out) ||
        !slab(o.y(), d.y(), g.origin_y, g.y_max(), t_in, t_out)) {
        return std::nullopt;
    }
    // Restrict to the slab of heights the surface can occupy.
    const double pad = 1e-9 * (1.0 + std::abs(range_.min) + std::abs(range_.max));
    if (!slab(o.z(), d.z(), range_.min - pad, range_.max + pad, t_in, t_out)) {
        return std::nullopt;
    }

    const Eigen::Vector3d entry = ray.at(t_in);
    const double inv_cs = 1.0 / g.cell_size;
    auto clamp_index = [](double f, std::size_t n) {
        const double c = std::clamp(std::floor(f), 0.0, static_cast<double>(n - 2));
        return static_cast<std::ptrdiff_t>(c);
    };
    std::ptrdiff_t jx = clamp_index((entry.x() - g.origin_x) * inv_cs, g.cols);
    std::ptrdiff_t iy = clamp_index((entry.y() - g.origin_y) * inv_cs, g.rows);

    const int step_x = d.x() > 0.0 ? 1 : -1;
    const int step_y = d.y() > 0.0 ? 1 : -1;
    auto next_boundary = [&](double origin, double dir, std::ptrdiff_t index, int step, double grid_origin) {
        if (dir == 0.0) {
            return kInf;
        }
        const double edge = grid_origin + static_cast<double>(index + (step > 0 ? 1 : 0)) * g.cell_size;
        return (edge - origin) / dir;
    };
    double t_max_x = next_boundary(o.x(), d.x(), jx, step_x, g.origin_x);
    double t_max_y = next_boundary(o.y(), d.y(), iy, step_y, g.origin_y);
    const double t_delta_x = d.x() == 0.0 ? kInf : g.cell_size / std::abs(d.x());
    const double t_delta_y = d.y() == 0.0 ? kInf : g.cell_size / std::abs(d.y());

    double t_cur = t_in;
    for (;;) {
        const double t_next = std::min({t_max_x, t_max_y, t_out});
        const auto i = static_cast<std::size_t>(iy);
        const auto j = static_cast<std::size_t>(jx);
        const bool hole = dem_.is_nodata(i, j) || dem_.is_nodata(i, j + 1) ||
                          dem_.is_nodata(i + 1, j) || dem_.is_nodata(i + 1, j + 1);
        if (hole) {
            return Hit{ray.at(t_cur), t_cur, i, j, true};
        }
        double t_hit = 0.0;
        if (solve_patch(ray, i, j, t_cur, std::max(t_next, t_cur), t_hit)) {
            return Hit{ray.at(t_hit), t_hit, i, j, false};
        }
        if (t_next >= t_out) {
            return std::nullopt;
        }
        if (t_max_x < t_max_y) {
            jx += step_x;
            t_cur = t_max_x;
            t_max_x += t_delta_x;
            if (jx < 0 || jx > static_cast<std::ptrdiff_t>(g.cols) - 2) {
                return std::nullopt;
            }
        } else {
            iy += step_y;
            t_cur = t_max_y;
            t_max_y += t_delta_y;
            if (iy < 0 || iy > static_cast<std::ptrdiff_t>(g.rows) - 2) {
                return std::nullopt;
            }
        }
    }
}

std::optional<Hit> intersect_heightfield(const DemGrid& dem, const Ray& ray, double max_range) {
    return HeightfieldTracer(dem).intersect(ray, max_range);
}

}  // namespace lsr
