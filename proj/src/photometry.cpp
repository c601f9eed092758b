// Copyright 2026 The LSR Authors
// SPDX-License-Identifier: Apache-2.0

#include "lsr/photometry.hpp"

#include <algorithm>
#include <numbers>

#include "lsr/error.hpp"

namespace lsr {

namespace {

void check_b0(double b0) {
    if (!(b0 >= 0.0 && b0 <= 1.0)) {
        throw DomainError("backscatter parameter B0 must lie in [0, 1]");
    }
}

}  // namespace

void ReflectanceModel::validate() const {
    if (kind == ReflectanceKind::Hapke) {
        check_b0(b0);
    }
}

std::string_view reflectance_key(ReflectanceKind kind) {
    switch (kind) {
        case ReflectanceKind::Lambert:
            return "lambert";
        case ReflectanceKind::LommelSeeliger:
            return "ls_paper";
        case ReflectanceKind::Hapke:
            return "hapke_paper";
    }
    return "lambert";
}

std::optional<ReflectanceKind> parse_reflectance_key(std::string_view key) {
    for (auto kind : {ReflectanceKind::Lambert, ReflectanceKind::LommelSeeliger, ReflectanceKind::Hapke}) {
        if (reflectance_key(kind) == key) {
            return kind;
        }
    }
    return std::nullopt;
}

double lambert(double i0, double cos_incidence) { return i0 * std::max(cos_incidence, 0.0); }

double lommel_seeliger(double i0, double range) {
    if (!(range > 0.0)) {
        throw DomainError("Lommel-Seeliger range must be positive");
    }
    return (i0 / std::numbers::pi) * (1.0 / (range * range));
}

double hapke_backscatter_term(double b0) { return (1.0 - b0) / (1.0 + b0) + b0; }

double hapke(double i0, double cos_t1, double cos_t2, double b0) {
    check_b0(b0);
    const double angular = std::max(cos_t1, 0.0) * std::max(cos_t2, 0.0) / std::numbers::pi;
    return i0 * angular * hapke_backscatter_term(b0);
}

double shade(const ReflectanceModel& model, double albedo, double i0, const ShadingGeometry& geom) {
    if (!(albedo >= 0.0 && albedo <= 1.0)) {
        throw DomainError("albedo must lie in [0, 1]");
    }
    if (geom.in_shadow) {
        return 0.0;
    }
    switch (model.kind) {
        case ReflectanceKind::Lambert:
            return albedo * lambert(i0, geom.cos_incidence);
        case ReflectanceKind::LommelSeeliger:
            return albedo * lommel_seeliger(i0, geom.range_to_light);
        case ReflectanceKind::Hapke:
            return albedo * hapke(i0, geom.cos_incidence, geom.cos_emission, model.b0);
    }
    return 0.0;
}

}  // namespace lsr
