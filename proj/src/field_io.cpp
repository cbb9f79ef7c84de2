#include "cebit/field_io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "cebit/errors.hpp"

namespace cebit::optics {

namespace {

void write_header(std::ostream& os, const char* kind, const GridSpec& g) {
  fmt::print(os, "{} 1\nn {}\npitch {:.17g}\nw0 {:.17g}\n", kind, g.n(), g.pitch(), g.waist());
}

template <class T>
T read_keyed(std::istream& is, const char* key) {
  std::string name;
  T value{};
  if (!(is >> name >> value) || name != key)
    throw InvalidArgument(fmt::format("field file: expected '{}' entry", key));
  return value;
}

GridSpec read_header(std::istream& is, const char* kind) {
  std::string tag;
  int version = 0;
  if (!(is >> tag >> version) || tag != kind || version != 1)
    throw InvalidArgument(fmt::format("field file: expected '{} 1' header", kind));
  const int n = read_keyed<int>(is, "n");
  const double pitch = read_keyed<double>(is, "pitch");
  const double w0 = read_keyed<double>(is, "w0");
  return GridSpec(n, pitch, w0);
}

void write_samples(std::ostream& os, std::span<const complex> s) {
  for (const auto& z : s) fmt::print(os, "{:.17g} {:.17g}\n", z.real(), z.imag());
}

void read_samples(std::istream& is, std::span<complex> s) {
  for (auto& z : s) {
    double re = 0, im = 0;
    if (!(is >> re >> im)) throw InvalidArgument("field file: truncated sample block");
    z = {re, im};
  }
}

}  // namespace

void write_field(std::ostream& os, const ScalarField& f) {
  write_header(os, "scalar-field", f.grid());
  write_samples(os, f.samples());
}

ScalarField read_field(std::istream& is) {
  ScalarField f(read_header(is, "scalar-field"));
  read_samples(is, f.samples());
  return f;
}

void write_beam(std::ostream& os, const VectorBeam& b) {
  write_header(os, "vector-beam", b.grid());
  for (int c = 0; c < 2; ++c)
    for (int a = 0; a < 2; ++a) {
      fmt::print(os, "component {}{}\n", c, a);
      write_samples(os, b.component(c, a).samples());
    }
}

VectorBeam read_beam(std::istream& is) {
  VectorBeam b(read_header(is, "vector-beam"));
  for (int c = 0; c < 2; ++c)
    for (int a = 0; a < 2; ++a) {
      std::string tag, label;
      if (!(is >> tag >> label) || tag != "component" || label != fmt::format("{}{}", c, a))
        throw InvalidArgument(fmt::format("field file: expected 'component {}{}'", c, a));
      read_samples(is, b.component(c, a).samples());
    }
  return b;
}

GraymapInfo write_pgm16(const std::filesystem::path& path, int n, std::span<const double> pixels) {
  if (n <= 0 || pixels.size() != std::size_t(n) * std::size_t(n))
    throw InvalidArgument("graymap: pixel count does not match n*n");
  GraymapInfo info;
  for (double v : pixels) info.max_value = std::max(info.max_value, v);
  info.scale = info.max_value > 0 ? info.max_value / 65535.0 : 0.0;

  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  out << "P5\n" << n << ' ' << n << "\n65535\n";
  for (double v : pixels) {
    const double level = info.scale > 0 ? std::round(std::max(v, 0.0) / info.scale) : 0.0;
    const auto word = std::uint16_t(std::min(level, 65535.0));
    const char bytes[2] = {char(word >> 8), char(word & 0xff)};
    out.write(bytes, 2);
  }
  if (!out) throw Error("failed writing " + path.string());

  std::ofstream side(path.string() + ".txt");
  fmt::print(side, "width {}\nheight {}\nmaxval 65535\nscale {:.17g}\nmax_intensity {:.17g}\n", n, n,
             info.scale, info.max_value);
  return info;
}

Graymap read_pgm16(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::string magic;
  Graymap g;
  int maxval = 0;
  if (!(in >> magic >> g.width >> g.height >> maxval) || magic != "P5" || maxval != 65535)
    throw InvalidArgument("not a 16-bit P5 graymap: " + path.string());
  in.get();
  g.levels.resize(std::size_t(g.width) * std::size_t(g.height));
  for (auto& level : g.levels) {
    unsigned char bytes[2];
    if (!in.read(reinterpret_cast<char*>(bytes), 2)) throw InvalidArgument("truncated graymap");
    level = std::uint16_t((bytes[0] << 8) | bytes[1]);
  }
  return g;
}

}  // namespace cebit::optics
