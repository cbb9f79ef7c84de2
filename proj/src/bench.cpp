#include "cebit/bench.hpp"

#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "cebit/errors.hpp"

namespace cebit::bench {

using optics::Path;
using optics::Polarization;

namespace {

const double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

}  // namespace

double wrap_phase(double radians) {
  const double two_pi = 2.0 * std::numbers::pi;
  double r = std::remainder(radians, two_pi);
  if (r <= -std::numbers::pi) r += two_pi;
  return r;
}

double tilt_to_phase(double tilt_deg, double thickness, double index, double wavelength) {
  if (!(std::abs(tilt_deg) < 45.0)) throw InvalidArgument("filter tilt must be below 45 degrees");
  if (!(index > 1.0)) throw InvalidArgument("plate index must exceed 1");
  if (!(thickness > 0) || !(wavelength > 0)) throw InvalidArgument("plate thickness and wavelength must be positive");
  const double theta = tilt_deg * std::numbers::pi / 180.0;
  const double s = std::sin(theta);
  const double path = std::sqrt(index * index - s * s) - std::cos(theta) - (index - 1.0);
  return 2.0 * std::numbers::pi / wavelength * thickness * path;
}

FilterSetting FilterSetting::make(double transmittance, double phase) {
  if (!(transmittance >= 0.0 && transmittance <= 1.0))
    throw InvalidArgument(fmt::format("filter transmittance {} is outside [0, 1]", transmittance));
  return {transmittance, wrap_phase(phase)};
}

FilterSetting FilterSetting::tilted(double transmittance, double tilt_deg, const PlateSpec& plate,
                                    double wavelength) {
  return make(transmittance, tilt_to_phase(tilt_deg, plate.thickness, plate.index, wavelength));
}

complex FilterSetting::factor() const { return std::polar(transmittance, phase); }

FilterPair filters_for(const PayloadCoeffs& p) {
  const double peak = std::max(std::abs(p.alpha()), std::abs(p.beta()));
  return {FilterSetting::make(std::abs(p.alpha()) / peak, std::arg(p.alpha())),
          FilterSetting::make(std::abs(p.beta()) / peak, std::arg(p.beta()))};
}

PayloadCoeffs payload_of(const FilterPair& f) { return {f.alpha.factor(), f.beta.factor()}; }

VectorBeam split_bs1(const VectorBeam& b) {
  if (b.path_power(Path::lower) > 0) throw InvalidArgument("BS1 expects an empty lower input path");
  VectorBeam out(b.grid());
  for (int a = 0; a < 2; ++a) {
    out.component(0, a) = complex(kInvSqrt2) * b.component(0, a);
    out.component(1, a) = out.component(0, a);
  }
  return out;
}

VectorBeam apply_filters(const VectorBeam& b, const FilterSetting& f_alpha, const FilterSetting& f_beta) {
  if (f_alpha.transmittance == 0.0 && f_beta.transmittance == 0.0)
    throw DarkBeam("both payload filters are opaque");
  VectorBeam out = b;
  for (int a = 0; a < 2; ++a) {
    out.component(0, a) *= f_alpha.factor();
    out.component(1, a) *= f_beta.factor();
  }
  return out;
}

VectorBeam apply_sagnac_cnot(const VectorBeam& b) {
  VectorBeam out = b;
  out.component(Path::lower, Polarization::x) = b.component(Path::lower, Polarization::y);
  out.component(Path::lower, Polarization::y) = b.component(Path::lower, Polarization::x);
  return out;
}

VectorBeam recombine_bs2(const VectorBeam& b) {
  VectorBeam out(b.grid());
  for (int a = 0; a < 2; ++a) {
    const auto up = b.component(0, a).samples();
    const auto low = b.component(1, a).samples();
    auto out_up = out.component(0, a).samples();
    auto out_low = out.component(1, a).samples();
    for (std::size_t i = 0; i < up.size(); ++i) {
      out_up[i] = (up[i] + low[i]) * kInvSqrt2;
      out_low[i] = (up[i] - low[i]) * kInvSqrt2;
    }
  }
  return out;
}

Projected project_pbs3(const VectorBeam& b, BellOutcome o) {
  Projected p{b.component(o.c, o.a), 0.0, false};
  p.power = p.field.power();
  p.dark = p.power < kPowerFloor;
  return p;
}

BenchOutput run_bench(const BenchConfig& cfg) {
  const FilterPair filters = std::visit(
      [](const auto& spec) -> FilterPair {
        if constexpr (std::is_same_v<std::decay_t<decltype(spec)>, PayloadCoeffs>)
          return filters_for(spec);
        else
          return spec;
      },
      cfg.payload);

  const VectorBeam source = optics::radial_beam(cfg.grid, cfg.y_offset);
  const VectorBeam split = split_bs1(source);
  VectorBeam prepared = apply_filters(split, filters.alpha, filters.beta);
  const double transmitted = prepared.power() / source.power();
  prepared *= 1.0 / std::sqrt(prepared.power());

  const VectorBeam out = recombine_bs2(apply_sagnac_cnot(prepared));
  Projected p = project_pbs3(out, cfg.outcome);
  return {std::move(p.field), p.power, transmitted, p.dark};
}

}  // namespace cebit::bench
