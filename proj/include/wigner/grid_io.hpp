#pragma once

// Grid files: <stem>.json metadata sidecar ("wigner-grid/1") plus <stem>.f64,
// a raw little-endian float64 raster, row-major with x fastest. Complex
// fields store interleaved (re, im) pairs; real fields store real parts.

#include <filesystem>
#include <string>

#include "wigner/grid.hpp"

namespace wigner {

enum class RasterKind { real, complex };

// Writes <stem>.json and <stem>.f64. kind == real drops imaginary parts.
void write_grid(const std::filesystem::path& stem, const WignerField& w, RasterKind kind = RasterKind::real);

WignerField read_grid(const std::filesystem::path& stem);

// "x,p,value" header then one line per point, 17 significant digits.
void write_csv(const std::filesystem::path& file, const WignerField& w);

}  // namespace wigner
