#ifndef LDC_OUTPUT_HPP
#define LDC_OUTPUT_HPP

#include <cstdint>
#include <filesystem>
#include <string>

#include "ldc/fields.hpp"

namespace ldc {

struct FieldStats {
  double min = 0.0, max = 0.0;
  double p01 = 0.0, p50 = 0.0, p99 = 0.0;
  std::size_t masked_cells = 0;
  std::size_t cells = 0;

  bool degenerate() const { return masked_cells == cells; }
};

FieldStats field_stats(const ScalarField& field);

// Header line with axis names, ranges, resolution and mesh spacing, then one
// line per axis2 row of axis1-ordered values; 17 significant digits, masked
// cells as `nan`.
void write_csv(const ScalarField& field, const std::filesystem::path& path);
ScalarField read_csv(const std::filesystem::path& path);

// Landscape rows are (position, LD, |second difference|).
void write_landscape_csv(const Landscape& landscape, const std::string& axis_name,
                         const std::filesystem::path& path);

// 16-bit grayscale, values mapped linearly from [lo, hi] (clamped); masked
// cells are full white. A degenerate range maps everything to mid-gray.
void write_pgm(const ScalarField& field, const std::filesystem::path& path, double lo, double hi);

// FNV-1a 64-bit digest of a file's bytes, as fixed-width hex.
std::string file_digest(const std::filesystem::path& path);

}  // namespace ldc

#endif
