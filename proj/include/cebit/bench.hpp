#pragma once

// Ideal-element models of the teleportation bench: BS1 split, payload
// filters, Sagnac C-NOT, BS2 path Hadamard and PBS3 projection.

#include <variant>

#include "cebit/algebra.hpp"
#include "cebit/field.hpp"

namespace cebit::bench {

using optics::GridSpec;
using optics::ScalarField;
using optics::VectorBeam;

inline constexpr double kDefaultWavelength = 594e-9;
inline constexpr double kPowerFloor = 1e-12;

/// Plane-parallel plate used as a tiltable neutral-density filter.
struct PlateSpec {
  double thickness = 2e-3;
  double index = 1.5;
};

/// Reduces an angle to (-pi, pi].
double wrap_phase(double radians);

/// Extra phase picked up when the plate is tilted by `tilt_deg` relative to
/// normal incidence: (2 pi / lambda) t [sqrt(n^2 - sin^2) - cos - (n - 1)].
/// Requires |tilt| < 45 degrees and index > 1.
double tilt_to_phase(double tilt_deg, double thickness, double index, double wavelength);

struct FilterSetting {
  double transmittance = 1.0;  // amplitude transmittance in [0, 1]
  double phase = 0.0;          // radians, reduced to (-pi, pi]

  /// Throws InvalidArgument when the transmittance is outside [0, 1].
  static FilterSetting make(double transmittance, double phase = 0.0);
  static FilterSetting tilted(double transmittance, double tilt_deg, const PlateSpec& plate = {},
                              double wavelength = kDefaultWavelength);

  complex factor() const;
};

struct FilterPair {
  FilterSetting alpha;
  FilterSetting beta;
};

/// Filters realizing a payload, with the larger amplitude at full transmission.
FilterPair filters_for(const PayloadCoeffs& p);

/// Payload encoded by a filter pair: alpha/beta = (t_a e^{i phi_a}) / (t_b e^{i phi_b}).
PayloadCoeffs payload_of(const FilterPair& f);

struct BenchConfig {
  GridSpec grid = GridSpec::with_window(512, 8.0);
  std::variant<PayloadCoeffs, FilterPair> payload = PayloadCoeffs{1.0, 0.0};
  BellOutcome outcome{};
  double y_offset = 0.0;  // displacement of the generated beam along y
};

/// 50/50 split of an upper-path beam into both paths with amplitude 1/sqrt(2).
VectorBeam split_bs1(const VectorBeam& b);

VectorBeam apply_filters(const VectorBeam& b, const FilterSetting& f_alpha, const FilterSetting& f_beta);

/// Lower path polarization swap (half-wave plate at 45 degrees).
VectorBeam apply_sagnac_cnot(const VectorBeam& b);

/// Real Hadamard on the path pair: upper' = (u + l)/sqrt(2), lower' = (u - l)/sqrt(2).
VectorBeam recombine_bs2(const VectorBeam& b);

struct Projected {
  ScalarField field;
  double power = 0;   // branch probability for a unit-power input
  bool dark = false;  // power below kPowerFloor
};

/// Selects the component (path o.c, polarization o.a).
Projected project_pbs3(const VectorBeam& b, BellOutcome o);

struct BenchOutput {
  ScalarField field;               // M(x, y) for the selected outcome
  double probability = 0;          // branch power relative to the prepared beam
  double transmitted_power = 1.0;  // fraction of the laser power passing the filters
  bool dark = false;
};

/// radial_beam -> split_bs1 -> apply_filters -> (normalize) -> apply_sagnac_cnot
/// -> recombine_bs2 -> project_pbs3. The prepared beam is normalized to unit
/// power so that `field` carries the payload exactly as prepare_input does.
BenchOutput run_bench(const BenchConfig& cfg);

}  // namespace cebit::bench
