#pragma once

// Readout pipelines for the projected beam M(x, y):
//   * virtual CCD imaging and lobe-axis angle estimation (cot theta = |beta/alpha|)
//   * correlation-filter modal decomposition through an angularly multiplexed
//     hologram and a 2f Fourier transform, with interference phase retrieval.

#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cebit/field.hpp"

namespace cebit::measure {

using optics::GridSpec;
using optics::Offset;
using optics::ScalarField;
using optics::VectorBeam;

struct CcdImage {
  GridSpec grid;
  std::vector<double> pixels;  // row-major, y outer
  std::optional<double> saturation_level;

  explicit CcdImage(const GridSpec& g) : grid(g), pixels(g.size(), 0.0) {}

  double& at(int ix, int iy) { return pixels[grid.index(ix, iy)]; }
  double at(int ix, int iy) const { return pixels[grid.index(ix, iy)]; }
  double peak() const;
};

struct NoiseModel {
  double gaussian_sigma = 0.0;  // standard deviation as a fraction of the reference intensity
  bool shot_noise = false;
  double photons = 1e4;         // photon count at the reference intensity
  double full_scale = 0.0;      // reference intensity; 0 means the image's own peak
  std::uint64_t seed = 0;

  bool is_noiseless() const { return gaussian_sigma == 0.0 && !shot_noise; }
  /// Same model with a seed derived from (seed, frame), independent of evaluation order.
  NoiseModel for_frame(std::uint64_t frame) const;
};

/// Adds shot and Gaussian noise in place, then clamps to [0, saturation].
void apply_noise(CcdImage& img, const NoiseModel& noise);

CcdImage render_ccd(const ScalarField& f, const NoiseModel& noise);
/// Sums |E|^2 over both polarization components of one path.
CcdImage render_ccd(const VectorBeam& b, optics::Path path, const NoiseModel& noise);

// ---------------------------------------------------------------------------
// Angle pipeline

struct AngleOptions {
  double threshold = 0.1;               // fraction of the smoothed peak
  int smoothing = 3;                    // box size of the mean filter, odd
  double min_component_fraction = 0.05; // components smaller than this fraction of the largest are speckle
};

struct LobeAxis {
  double theta_deg = 0;                   // angle between the lobe line and the vertical axis, [0, 90]
  std::array<std::array<double, 2>, 2> centroids{};  // (x, y) in meters
};

/// Segments the two lobes and returns the line through their intensity
/// centroids. Throws SegmentationFailure unless exactly two components remain.
LobeAxis find_lobe_axis(const CcdImage& img, const AngleOptions& opts = {});
double estimate_angle(const CcdImage& img, const AngleOptions& opts = {});

/// cot(theta). Throws InfiniteRatio at 0 degrees, InvalidArgument outside [0, 90].
double ratio_from_angle(double theta_deg);

// ---------------------------------------------------------------------------
// Correlation-filter modal decomposition

struct HologramEntry {
  std::string filter_id;  // psi10, psi01, cos, sin
  double kx = 0;          // carrier spatial frequency, rad/m
  double ky = 0;
  int read_x = 0;         // focal-plane pixel of the correlation signal
  int read_y = 0;
};

struct Hologram {
  GridSpec grid;
  std::vector<complex> transmission;  // |t| <= 1
  std::vector<HologramEntry> entries;
  double scale = 1.0;                 // global rescale applied to reach |t| <= 1
};

struct CghOptions {
  double carrier_fraction = 0.125;  // carrier frequency as a fraction of Nyquist
  Offset center{};                  // position of the match filters
};

/// Radius in rad/m beyond which a first-order mode spectrum is negligible.
double mode_bandwidth(const GridSpec& grid);

/// Transmission sum_k conj(filter_k) exp(i K_k . r). Filters psi10 and psi01 on
/// carriers +x and +y; with phase filters also (psi10 + psi01)/sqrt2 on -x and
/// (psi10 - i psi01)/sqrt2 on -y, whose correlation signals are (a + b)/sqrt2
/// and (a + i b)/sqrt2. Throws AliasingError when the layout does not fit.
Hologram design_cgh(const GridSpec& grid, bool with_phase_filters, const CghOptions& opts = {});

struct Correlation {
  CcdImage focal_image;              // |focal field|^2
  std::vector<complex> focal_field;
  std::vector<complex> read_values;  // focal field at each entry's read point
  double overlap_scale = 1.0;        // read_values[k] * overlap_scale == <filter_k | M>

  /// Focal field displaced (dx, dy) pixels from entry k's read point.
  complex read_at(const Hologram& h, std::size_t k, int dx, int dy) const;
};

/// Focal field of a 2f system behind the hologram: centered DFT of M * t.
Correlation correlate_2f(const ScalarField& M, const Hologram& h);

inline constexpr double kUnitCircleTolerance = 1e-6;

/// Relative phase arg(beta) - arg(alpha) from I_a = |a|^2, I_b = |b|^2,
/// I_cos = |a + b|^2 / 2 and I_sin = |a + i b|^2 / 2. cos/sin values that
/// exceed 1 in magnitude by at most `tolerance` are clamped.
double phase_from_interference(double i_a, double i_b, double i_cos, double i_sin,
                               double tolerance = kUnitCircleTolerance);

// ---------------------------------------------------------------------------

struct MeasurementResult {
  double abs_alpha = 0;
  double abs_beta = 0;
  double delta_phi = 0;  // (-pi, pi]
  bool phase_defined = false;
  std::optional<double> theta_deg;

  double abs_alpha_std = 0;
  double abs_beta_std = 0;
  double delta_phi_std = 0;
  double theta_std = 0;

  int frames = 0;
  std::uint64_t seed = 0;
  std::vector<double> frame_ratios;  // |beta/alpha| for every frame

  double ratio() const;

  static std::string_view csv_header();
  std::string csv_row() const;
};

inline constexpr int kDefaultFrames = 15;

/// Intensity-weighted centroid of |M|^2.
Offset intensity_centroid(const ScalarField& M);

MeasurementResult modal_decomposition(const ScalarField& M, const NoiseModel& noise,
                                      int frames = kDefaultFrames);

/// Renders `frames` noisy images and averages the lobe-axis angle.
MeasurementResult measure_angle(const ScalarField& M, const NoiseModel& noise, int frames = kDefaultFrames,
                                const AngleOptions& opts = {});

/// Mean and sample standard deviation.
struct Moments {
  double mean = 0;
  double std = 0;
};
Moments moments(const std::vector<double>& values);

}  // namespace cebit::measure
