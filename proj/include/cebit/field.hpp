#pragma once

// Sampled transverse fields at the beam waist plane.

#include <array>
#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "cebit/algebra.hpp"

namespace cebit::optics {

/// Square sampling grid centered on pixel n/2. Coordinates are in meters.
class GridSpec {
 public:
  /// Throws InvalidArgument unless n is a power of two >= 64, pitch > 0 and
  /// the window n*pitch spans at least 6 waists.
  GridSpec(int n, double pitch, double waist_w0);

  /// Grid whose window is `window_w0` waists wide.
  static GridSpec with_window(int n, double window_w0, double waist_w0 = 1e-3);

  int n() const { return n_; }
  double pitch() const { return pitch_; }
  double waist() const { return waist_; }
  double window() const { return n_ * pitch_; }
  std::size_t size() const { return std::size_t(n_) * std::size_t(n_); }

  /// Coordinate of pixel index i along either axis.
  double coord(int i) const { return (i - n_ / 2) * pitch_; }
  /// Row-major index; row = y pixel, column = x pixel.
  std::size_t index(int ix, int iy) const { return std::size_t(iy) * std::size_t(n_) + std::size_t(ix); }

  friend bool operator==(const GridSpec&, const GridSpec&) = default;

 private:
  int n_;
  double pitch_;
  double waist_;
};

/// One polarization component of one path, sampled on a grid. Amplitudes are
/// in 1/m so that sum |f|^2 * pitch^2 is the power.
class ScalarField {
 public:
  explicit ScalarField(const GridSpec& grid);
  ScalarField(const GridSpec& grid, std::vector<complex> samples);

  const GridSpec& grid() const { return grid_; }
  std::span<complex> samples() { return samples_; }
  std::span<const complex> samples() const { return samples_; }

  complex& at(int ix, int iy) { return samples_[grid_.index(ix, iy)]; }
  const complex& at(int ix, int iy) const { return samples_[grid_.index(ix, iy)]; }

  double power() const;

  ScalarField& operator+=(const ScalarField& other);
  ScalarField& operator-=(const ScalarField& other);
  ScalarField& operator*=(complex k);
  friend ScalarField operator+(ScalarField lhs, const ScalarField& rhs) { return lhs += rhs; }
  friend ScalarField operator-(ScalarField lhs, const ScalarField& rhs) { return lhs -= rhs; }
  friend ScalarField operator*(complex k, ScalarField f) { return f *= k; }

 private:
  GridSpec grid_;
  std::vector<complex> samples_;
};

enum class Path { upper = 0, lower = 1 };
enum class Polarization { x = 0, y = 1 };

/// Two paths times two polarization components on one shared grid.
class VectorBeam {
 public:
  explicit VectorBeam(const GridSpec& grid);

  const GridSpec& grid() const { return grid_; }

  ScalarField& component(Path p, Polarization pol) { return components_[slot(p, pol)]; }
  const ScalarField& component(Path p, Polarization pol) const { return components_[slot(p, pol)]; }
  ScalarField& component(int c, int a) { return components_[std::size_t(2 * c + a)]; }
  const ScalarField& component(int c, int a) const { return components_[std::size_t(2 * c + a)]; }

  double power() const;
  double path_power(Path p) const;

  VectorBeam& operator+=(const VectorBeam& other);
  VectorBeam& operator*=(complex k);
  friend VectorBeam operator+(VectorBeam lhs, const VectorBeam& rhs) { return lhs += rhs; }
  friend VectorBeam operator*(complex k, VectorBeam b) { return b *= k; }

 private:
  static std::size_t slot(Path p, Polarization pol) { return std::size_t(2 * int(p) + int(pol)); }

  GridSpec grid_;
  std::array<ScalarField, 4> components_;
};

struct Offset {
  double x = 0;
  double y = 0;
};

/// Power leakage above which a mode is considered not contained in the window.
inline constexpr double kLeakageLimit = 1e-6;

/// Waist-plane Hermite-Gaussian mode psi_lm with unit discrete power, its
/// center displaced by `offset`. Throws GridTooSmall when the closed form
/// loses more than kLeakageLimit of its power to the window edge or sampling.
ScalarField hg_mode(int l, int m, const GridSpec& grid, Offset offset);
ScalarField hg_mode(int l, int m, const GridSpec& grid, double y_offset = 0.0);

/// Closed-form psi_lm(x, y) with the continuum normalization.
double hg_value(int l, int m, double x, double y, double waist);

/// Radially polarized beam (x psi10 + y psi01)/sqrt(2) in the upper path.
VectorBeam radial_beam(const GridSpec& grid, double y_offset = 0.0);

/// Discrete inner product sum conj(f) g pitch^2. Throws InvalidArgument on grid mismatch.
complex overlap(const ScalarField& f, const ScalarField& g);

/// |c,a,b> -> path c, polarization a, mode psi10 (b = 0) or psi01 (b = 1).
VectorBeam encode_cebit_state(const CebitState& s, const GridSpec& grid);

struct DecodedState {
  CebitState state;       // normalized; zero when !valid
  double residual = 0;    // fraction of power outside the mode span
  bool valid = false;     // false for a dark beam
};

/// Projects every component onto {psi10, psi01}. Throws BasisLeakage when the
/// out-of-span fraction exceeds kLeakageLimit.
DecodedState decode_overlaps(const VectorBeam& b);

}  // namespace cebit::optics
