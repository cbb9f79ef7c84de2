#include "cebit/field.hpp"

#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "cebit/errors.hpp"

namespace cebit::optics {

namespace {

double hermite(int order, double u) {
  double prev = 1.0;
  if (order == 0) return prev;
  double cur = 2.0 * u;
  for (int k = 1; k < order; ++k) {
    const double next = 2.0 * u * cur - 2.0 * k * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double factorial(int k) {
  double f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

void require_same_grid(const GridSpec& a, const GridSpec& b, const char* what) {
  if (!(a == b)) throw InvalidArgument(fmt::format("{}: fields live on different grids", what));
}

}  // namespace

GridSpec::GridSpec(int n, double pitch, double waist_w0) : n_(n), pitch_(pitch), waist_(waist_w0) {
  if (n < 64 || (n & (n - 1)) != 0)
    throw InvalidArgument(fmt::format("grid size {} must be a power of two >= 64", n));
  if (!(pitch > 0) || !std::isfinite(pitch)) throw InvalidArgument("grid pitch must be positive");
  if (!(waist_w0 > 0) || !std::isfinite(waist_w0)) throw InvalidArgument("beam waist must be positive");
  // Small relative slack so that with_window(n, 6, w0) is accepted.
  if (n * pitch < 6.0 * waist_w0 * (1.0 - 1e-12))
    throw InvalidArgument(fmt::format("window {:.4g} m is smaller than 6 waists ({:.4g} m)", n * pitch,
                                      6.0 * waist_w0));
}

GridSpec GridSpec::with_window(int n, double window_w0, double waist_w0) {
  if (!(window_w0 > 0)) throw InvalidArgument("window width must be positive");
  return GridSpec(n, window_w0 * waist_w0 / n, waist_w0);
}

ScalarField::ScalarField(const GridSpec& grid) : grid_(grid), samples_(grid.size()) {}

ScalarField::ScalarField(const GridSpec& grid, std::vector<complex> samples)
    : grid_(grid), samples_(std::move(samples)) {
  if (samples_.size() != grid_.size())
    throw InvalidArgument(fmt::format("expected {} samples, got {}", grid_.size(), samples_.size()));
}

double ScalarField::power() const {
  double sum = 0;
  for (const auto& z : samples_) sum += std::norm(z);
  return sum * grid_.pitch() * grid_.pitch();
}

ScalarField& ScalarField::operator+=(const ScalarField& other) {
  require_same_grid(grid_, other.grid_, "field addition");
  for (std::size_t i = 0; i < samples_.size(); ++i) samples_[i] += other.samples_[i];
  return *this;
}

ScalarField& ScalarField::operator-=(const ScalarField& other) {
  require_same_grid(grid_, other.grid_, "field subtraction");
  for (std::size_t i = 0; i < samples_.size(); ++i) samples_[i] -= other.samples_[i];
  return *this;
}

ScalarField& ScalarField::operator*=(complex k) {
  for (auto& z : samples_) z *= k;
  return *this;
}

VectorBeam::VectorBeam(const GridSpec& grid)
    : grid_(grid), components_{ScalarField(grid), ScalarField(grid), ScalarField(grid), ScalarField(grid)} {}

double VectorBeam::power() const {
  double sum = 0;
  for (const auto& f : components_) sum += f.power();
  return sum;
}

double VectorBeam::path_power(Path p) const {
  return component(p, Polarization::x).power() + component(p, Polarization::y).power();
}

VectorBeam& VectorBeam::operator+=(const VectorBeam& other) {
  require_same_grid(grid_, other.grid_, "beam addition");
  for (std::size_t i = 0; i < 4; ++i) components_[i] += other.components_[i];
  return *this;
}

VectorBeam& VectorBeam::operator*=(complex k) {
  for (auto& f : components_) f *= k;
  return *this;
}

double hg_value(int l, int m, double x, double y, double waist) {
  const double norm = std::sqrt(2.0 / std::numbers::pi) / waist /
                      std::sqrt(std::ldexp(1.0, l + m) * factorial(l) * factorial(m));
  const double u = std::numbers::sqrt2 * x / waist;
  const double v = std::numbers::sqrt2 * y / waist;
  return norm * hermite(l, u) * hermite(m, v) * std::exp(-(x * x + y * y) / (waist * waist));
}

ScalarField hg_mode(int l, int m, const GridSpec& grid, Offset offset) {
  if (l < 0 || m < 0) throw InvalidArgument("mode indices must be non-negative");
  const int n = grid.n();
  const double w = grid.waist();
  ScalarField field(grid);

  // Separable evaluation; hg_value is the reference for the same product.
  std::vector<double> fx(static_cast<std::size_t>(n)), fy(static_cast<std::size_t>(n));
  const double norm = std::sqrt(2.0 / std::numbers::pi) / w /
                      std::sqrt(std::ldexp(1.0, l + m) * factorial(l) * factorial(m));
  for (int i = 0; i < n; ++i) {
    const double x = grid.coord(i) - offset.x;
    const double y = grid.coord(i) - offset.y;
    fx[std::size_t(i)] = hermite(l, std::numbers::sqrt2 * x / w) * std::exp(-x * x / (w * w));
    fy[std::size_t(i)] = hermite(m, std::numbers::sqrt2 * y / w) * std::exp(-y * y / (w * w));
  }
  for (int iy = 0; iy < n; ++iy)
    for (int ix = 0; ix < n; ++ix) field.at(ix, iy) = norm * fx[std::size_t(ix)] * fy[std::size_t(iy)];

  const double power = field.power();
  const double leakage = std::abs(1.0 - power);
  if (leakage > kLeakageLimit)
    throw GridTooSmall(fmt::format("mode psi{}{} loses {:.3g} of its power on a {}-sample grid spanning "
                                   "{:.3g} waists",
                                   l, m, leakage, n, grid.window() / w),
                       leakage);
  field *= 1.0 / std::sqrt(power);
  return field;
}

ScalarField hg_mode(int l, int m, const GridSpec& grid, double y_offset) {
  return hg_mode(l, m, grid, Offset{0.0, y_offset});
}

VectorBeam radial_beam(const GridSpec& grid, double y_offset) {
  VectorBeam beam(grid);
  const double k = 1.0 / std::numbers::sqrt2;
  beam.component(Path::upper, Polarization::x) = k * hg_mode(1, 0, grid, y_offset);
  beam.component(Path::upper, Polarization::y) = k * hg_mode(0, 1, grid, y_offset);
  return beam;
}

complex overlap(const ScalarField& f, const ScalarField& g) {
  require_same_grid(f.grid(), g.grid(), "overlap");
  const auto a = f.samples();
  const auto b = g.samples();
  complex sum{0, 0};
  for (std::size_t i = 0; i < a.size(); ++i) sum += std::conj(a[i]) * b[i];
  const double p = f.grid().pitch();
  return sum * (p * p);
}

VectorBeam encode_cebit_state(const CebitState& s, const GridSpec& grid) {
  const std::array<ScalarField, 2> modes{hg_mode(1, 0, grid), hg_mode(0, 1, grid)};
  VectorBeam beam(grid);
  for (int c = 0; c < 2; ++c)
    for (int a = 0; a < 2; ++a) {
      auto out = beam.component(c, a).samples();
      for (int b = 0; b < 2; ++b) {
        const complex amp = s(c, a, b);
        if (amp == complex{}) continue;
        const auto mode = modes[std::size_t(b)].samples();
        for (std::size_t i = 0; i < out.size(); ++i) out[i] += amp * mode[i];
      }
    }
  return beam;
}

DecodedState decode_overlaps(const VectorBeam& beam) {
  const GridSpec& grid = beam.grid();
  DecodedState out;
  const double total = beam.power();
  if (!(total > 0)) return out;

  const std::array<ScalarField, 2> modes{hg_mode(1, 0, grid), hg_mode(0, 1, grid)};
  CebitState raw;
  for (int c = 0; c < 2; ++c)
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) raw(c, a, b) = overlap(modes[std::size_t(b)], beam.component(c, a));

  out.residual = std::max(0.0, (total - raw.norm_squared()) / total);
  if (out.residual > kLeakageLimit)
    throw BasisLeakage(fmt::format("{:.3g} of the beam power lies outside the first-order mode pair",
                                   out.residual),
                       out.residual);
  out.state = raw.normalized();
  out.valid = true;
  return out;
}

}  // namespace cebit::optics
