#include <algorithm>
#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "cebit/errors.hpp"
#include "cebit/fft.hpp"
#include "cebit/measurement.hpp"

namespace cebit::measure {

namespace {

struct FilterSpec {
  const char* id;
  int dir_x;  // carrier direction in units of the carrier magnitude
  int dir_y;
};

constexpr std::array<FilterSpec, 4> kLayout{{
    {"psi10", 1, 0},
    {"psi01", 0, 1},
    {"cos", -1, 0},
    {"sin", 0, -1},
}};

}  // namespace

double mode_bandwidth(const GridSpec& grid) { return 6.0 / grid.waist(); }

Hologram design_cgh(const GridSpec& grid, bool with_phase_filters, const CghOptions& opts) {
  const int n = grid.n();
  const double pitch = grid.pitch();
  const double nyquist = std::numbers::pi / pitch;
  const double bandwidth = mode_bandwidth(grid);

  const int m = int(std::lround(opts.carrier_fraction * n / 2.0));
  const double k = 2.0 * std::numbers::pi * m / (n * pitch);
  if (m < 1 || k + 2.0 * bandwidth >= nyquist)
    throw AliasingError(fmt::format("carrier {:.4g} rad/m plus twice the mode bandwidth exceeds the Nyquist "
                                    "frequency {:.4g} rad/m",
                                    k, nyquist));
  // Nearest neighbours: the zero order at distance k and adjacent carriers at sqrt(2) k.
  if (k <= 2.0 * bandwidth)
    throw AliasingError(fmt::format("carrier {:.4g} rad/m is within twice the mode bandwidth ({:.4g} rad/m) "
                                    "of the zero order",
                                    k, 2.0 * bandwidth));

  const ScalarField psi10 = optics::hg_mode(1, 0, grid, opts.center);
  const ScalarField psi01 = optics::hg_mode(0, 1, grid, opts.center);
  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  const complex i{0, 1};

  Hologram h{grid, std::vector<complex>(grid.size()), {}, 1.0};
  const std::size_t count = with_phase_filters ? 4 : 2;
  for (std::size_t f = 0; f < count; ++f) {
    const FilterSpec& spec = kLayout[f];
    HologramEntry e{spec.id, spec.dir_x * k, spec.dir_y * k, n / 2 + spec.dir_x * m, n / 2 + spec.dir_y * m};

    std::vector<complex> cx(static_cast<std::size_t>(n)), cy(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
      cx[std::size_t(j)] = std::polar(1.0, e.kx * grid.coord(j));
      cy[std::size_t(j)] = std::polar(1.0, e.ky * grid.coord(j));
    }
    const auto a = psi10.samples();
    const auto b = psi01.samples();
    for (int iy = 0; iy < n; ++iy)
      for (int ix = 0; ix < n; ++ix) {
        const std::size_t p = grid.index(ix, iy);
        complex filter;
        if (f == 0) filter = a[p];
        else if (f == 1) filter = b[p];
        else if (f == 2) filter = (a[p] + b[p]) * inv_sqrt2;
        else filter = (a[p] - i * b[p]) * inv_sqrt2;
        h.transmission[p] += std::conj(filter) * cx[std::size_t(ix)] * cy[std::size_t(iy)];
      }
    h.entries.push_back(std::move(e));
  }

  double peak = 0;
  for (const auto& t : h.transmission) peak = std::max(peak, std::abs(t));
  h.scale = 1.0 / peak;
  for (auto& t : h.transmission) t *= h.scale;
  return h;
}

complex Correlation::read_at(const Hologram& h, std::size_t k, int dx, int dy) const {
  if (k >= h.entries.size()) throw OutOfBounds("hologram entry index out of range");
  const int n = h.grid.n();
  const int x = h.entries[k].read_x + dx;
  const int y = h.entries[k].read_y + dy;
  if (x < 0 || y < 0 || x >= n || y >= n)
    throw OutOfBounds(fmt::format("read point ({}, {}) lies outside the {}x{} focal plane", x, y, n, n));
  return focal_field[h.grid.index(x, y)];
}

Correlation correlate_2f(const ScalarField& M, const Hologram& h) {
  if (!(M.grid() == h.grid)) throw InvalidArgument("field and hologram live on different grids");
  const auto m = M.samples();
  std::vector<complex> product(m.size());
  for (std::size_t p = 0; p < m.size(); ++p) product[p] = m[p] * h.transmission[p];

  Correlation c{CcdImage(h.grid), fft::centered_dft2(product, h.grid.n()), {}, 0.0};
  for (std::size_t p = 0; p < c.focal_field.size(); ++p) c.focal_image.pixels[p] = std::norm(c.focal_field[p]);
  for (std::size_t k = 0; k < h.entries.size(); ++k) c.read_values.push_back(c.read_at(h, k, 0, 0));
  c.overlap_scale = h.grid.pitch() * h.grid.pitch() / h.scale;
  return c;
}

double phase_from_interference(double i_a, double i_b, double i_cos, double i_sin, double tolerance) {
  if (i_a < 0 || i_b < 0 || i_cos < 0 || i_sin < 0)
    throw InvalidArgument("interference intensities must be non-negative");
  const double total = i_a + i_b;
  if (!(i_a > 1e-12 * total) || !(i_b > 1e-12 * total))
    throw PhaseUndefined("relative phase needs both modes present");

  const double denom = 2.0 * std::sqrt(i_a * i_b);
  double c = (2.0 * i_cos - total) / denom;
  double s = (total - 2.0 * i_sin) / denom;
  if (std::abs(std::hypot(c, s) - 1.0) > tolerance || std::abs(c) > 1.0 + tolerance ||
      std::abs(s) > 1.0 + tolerance)
    throw MeasurementInconsistency(
        fmt::format("interference pair (cos {:.6g}, sin {:.6g}) is off the unit circle", c, s));
  c = std::clamp(c, -1.0, 1.0);
  s = std::clamp(s, -1.0, 1.0);
  const double phi = std::atan2(s, c);
  return phi <= -std::numbers::pi ? std::numbers::pi : phi;
}

}  // namespace cebit::measure
