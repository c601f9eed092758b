// Copyright 2026 The LSR Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>

#include "lsr/grid.hpp"

namespace lsr {

// On-disk grid formats.
//
// ESRI ASCII grid: `ncols`, `nrows`, `xllcorner|xllcenter`, `yllcorner|yllcenter`,
// `cellsize`, optional `NODATA_value`, then whitespace separated rows, north row
// first.
//
// LDEM1 binary: 24 byte little-endian header
//   [0, 6)   magic "LDEM1\0"
//   [6, 8)   zero padding
//   [8, 12)  u32 rows
//   [12, 16) u32 cols
//   [16, 24) f64 cell_size
// followed by rows * cols f32 values, row-major with row 0 the southern row.
// The binary form carries no origin; nodata is stored as NaN.
enum class GridFormat { EsriAscii, Binary };

inline constexpr char kBinaryMagic[6] = {'L', 'D', 'E', 'M', '1', '\0'};
inline constexpr std::size_t kBinaryHeaderSize = 24;

/// Format implied by a path's extension: `.asc`/`.txt` are ASCII, anything else binary.
GridFormat format_for_path(const std::filesystem::path& path);

/// Loads an ESRI ASCII or LDEM1 binary grid, sniffing the format from the
/// file's first bytes.
DemGrid load_dem(const std::filesystem::path& path);

void save_dem(const DemGrid& dem, const std::filesystem::path& path);
void save_dem(const DemGrid& dem, const std::filesystem::path& path, GridFormat format);

/// Loads any accepted raster: ESRI ASCII, LDEM1 binary, or 8/16-bit PGM
/// (P5 or P2, normalised to [0, 1] by maxval). PGM rasters get unit cells at
/// origin zero; use register_to to attach them to a DEM.
Raster load_raster(const std::filesystem::path& path);

/// Writes a raster in the LDEM1 binary format (values narrowed to f32).
void save_raster(const Raster& raster, const std::filesystem::path& path);

/// Adopts `geometry` for a raster whose dimensions match it.
/// Throws ConfigError when rows or cols differ.
Raster register_to(const Raster& raster, const GridGeometry& geometry);

}  // namespace lsr
