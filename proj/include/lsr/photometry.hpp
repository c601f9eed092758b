// Copyright 2026 The LSR Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace lsr {

// Reflectance laws in the exact forms this simulator models:
//
//   lambert          I = I0 * cos(theta)
//   lommel_seeliger  I = (I0 / pi) * (1 / r^2)
//   hapke            I = I0 * (cos(t1) * cos(t2) / pi) * ((1 - B0) / (1 + B0) + B0)
//
// Negative cosines (back-facing geometry) are clamped to zero. The
// Lommel-Seeliger and Hapke variants are the simplified forms above, not the
// literature-standard laws; their keys ("ls_paper", "hapke_paper") say so.

enum class ReflectanceKind { Lambert, LommelSeeliger, Hapke };

struct ReflectanceModel {
    ReflectanceKind kind = ReflectanceKind::Lambert;
    double b0 = 0.0;  // backscatter parameter, Hapke only

    /// Throws DomainError when kind is Hapke and B0 is outside [0, 1].
    void validate() const;
};

/// "lambert", "ls_paper", "hapke_paper".
std::string_view reflectance_key(ReflectanceKind kind);
std::optional<ReflectanceKind> parse_reflectance_key(std::string_view key);

struct ShadingGeometry {
    double cos_incidence = 1.0;
    double cos_emission = 1.0;
    double range_to_light = 1.0;  // meters
    bool in_shadow = false;
};

double lambert(double i0, double cos_incidence);

/// Throws DomainError when range <= 0.
double lommel_seeliger(double i0, double range);

/// Throws DomainError when b0 is outside [0, 1].
double hapke(double i0, double cos_t1, double cos_t2, double b0);

/// The bracket (1 - B0) / (1 + B0) + B0.
double hapke_backscatter_term(double b0);

/// albedo * law(geometry), or 0 when in shadow. Throws DomainError for albedo
/// outside [0, 1] or errors from the selected law.
double shade(const ReflectanceModel& model, double albedo, double i0, const ShadingGeometry& geom);

}  // namespace lsr
