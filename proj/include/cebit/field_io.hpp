#pragma once

// Text grid format for fields and 16-bit portable graymap export.
//
//   scalar-field 1            vector-beam 1
//   n <int>                   n <int>
//   pitch <m>                 pitch <m>
//   w0 <m>                    w0 <m>
//   <re> <im>   (n*n rows)    component 00
//                             <re> <im>   (n*n rows), repeated for 01, 10, 11
//
// Samples are row-major (y outer, x inner) and written with 17 significant
// digits so that a write/read round trip is exact.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <vector>

#include "cebit/field.hpp"

namespace cebit::optics {

void write_field(std::ostream& os, const ScalarField& f);
ScalarField read_field(std::istream& is);

void write_beam(std::ostream& os, const VectorBeam& b);
VectorBeam read_beam(std::istream& is);

struct GraymapInfo {
  double scale = 0;  // intensity units per gray level (0 for an all-zero image)
  double max_value = 0;
};

/// Writes an n x n intensity image as binary P5 with maxval 65535, mapping the
/// image maximum to 65535. A sidecar `<path>.txt` records the scale factor.
GraymapInfo write_pgm16(const std::filesystem::path& path, int n, std::span<const double> pixels);

struct Graymap {
  int width = 0;
  int height = 0;
  std::vector<std::uint16_t> levels;
};

Graymap read_pgm16(const std::filesystem::path& path);

}  // namespace cebit::optics
