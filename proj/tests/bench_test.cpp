#include <gtest/gtest.h>

#include <random>

#include "cebit/bench.hpp"
#include "cebit/errors.hpp"
#include "oracles.hpp"

using namespace cebit;
using namespace cebit::bench;
using namespace cebit::optics;

namespace {

const GridSpec kGrid = GridSpec::with_window(256, 8.0);

CebitState random_state(std::mt19937_64& rng) {
  CebitState s;
  for (auto& x : s.amplitudes) x = oracle::random_cx(rng);
  return s.normalized();
}

double distance(const CebitState& a, const CebitState& b) {
  double d = 0;
  for (int i = 0; i < 8; ++i) d = std::max(d, std::abs(a.amplitudes[i] - b.amplitudes[i]));
  return d;
}

}  // namespace

TEST(Bench, SagnacIsCnotUnderEncoding) {
  std::mt19937_64 rng(31);
  for (int k = 0; k < 10; ++k) {
    const CebitState s = random_state(rng);
    const DecodedState d = decode_overlaps(apply_sagnac_cnot(encode_cebit_state(s, kGrid)));
    EXPECT_LT(distance(d.state, apply_cnot_CA(s)), 1e-9);
  }
}

TEST(Bench, Bs2IsHadamardUnderEncoding) {
  std::mt19937_64 rng(32);
  for (int k = 0; k < 10; ++k) {
    const CebitState s = random_state(rng);
    const DecodedState d = decode_overlaps(recombine_bs2(encode_cebit_state(s, kGrid)));
    EXPECT_LT(distance(d.state, apply_hadamard_C(s)), 1e-9);
  }
}

TEST(Bench, SplitAndFiltersPrepareTheInput) {
  std::mt19937_64 rng(33);
  for (int k = 0; k < 10; ++k) {
    const PayloadCoeffs p{oracle::random_cx(rng), oracle::random_cx(rng)};
    const FilterPair f = filters_for(p);
    const VectorBeam prepared = apply_filters(split_bs1(radial_beam(kGrid)), f.alpha, f.beta);
    EXPECT_LT(distance(decode_overlaps(prepared).state, prepare_input(p)), 1e-9);
  }
}

TEST(Bench, EndToEndFidelityAndProbability) {
  std::mt19937_64 rng(34);
  const ScalarField psi10 = hg_mode(1, 0, kGrid), psi01 = hg_mode(0, 1, kGrid);
  for (int k = 0; k < 10; ++k) {
    const PayloadCoeffs p{oracle::random_cx(rng), oracle::random_cx(rng)};
    for (BellOutcome o : kAllOutcomes) {
      const BenchOutput out = run_bench({kGrid, p, o, 0.0});
      EXPECT_NEAR(out.probability, 0.25, 1e-9);
      const Spinor b{overlap(psi10, out.field), overlap(psi01, out.field)};
      EXPECT_GE(fidelity(correction_for(o).apply(b), p), 0.999999);
    }
  }
}

TEST(Bench, FiltersAndTransmittedPower) {
  const FilterPair f{FilterSetting::make(0.5), FilterSetting::make(1.0)};
  const BenchOutput out = run_bench({kGrid, f, {}, 0.0});
  EXPECT_NEAR(out.transmitted_power, (0.25 + 1.0) / 2, 1e-12);
  const PayloadCoeffs p = payload_of(f);
  EXPECT_NEAR(std::abs(p.beta() / p.alpha()), 2.0, 1e-12);
  EXPECT_THROW(run_bench({kGrid, FilterPair{FilterSetting::make(0), FilterSetting::make(0)}, {}, 0.0}), DarkBeam);
  EXPECT_THROW(FilterSetting::make(1.5), InvalidArgument);
}

TEST(Bench, FiltersForPutsLargerAmplitudeAtUnity) {
  const FilterPair f = filters_for(PayloadCoeffs{complex(0, 0.3), 0.6});
  EXPECT_DOUBLE_EQ(f.beta.transmittance, 1.0);
  EXPECT_NEAR(f.alpha.transmittance, 0.5, 1e-15);
  EXPECT_NEAR(f.alpha.phase, std::numbers::pi / 2, 1e-15);
}

TEST(Bench, SplitRejectsOccupiedLowerPath) {
  VectorBeam b = radial_beam(kGrid);
  b.component(Path::lower, Polarization::x) = hg_mode(1, 0, kGrid);
  EXPECT_THROW(split_bs1(b), InvalidArgument);
}

TEST(Bench, DarkBranchIsFlagged) {
  const VectorBeam b = encode_cebit_state(CebitState::basis(0, 0, 1), kGrid);
  EXPECT_TRUE(project_pbs3(b, BellOutcome{1, 1}).dark);
  const Projected lit = project_pbs3(b, BellOutcome{0, 0});
  EXPECT_FALSE(lit.dark);
  EXPECT_NEAR(lit.power, 1.0, 1e-9);
}

TEST(Plate, TiltPhaseMatchesRayTrace) {
  for (double tilt : {0.5, 2.5, 5.0, 10.0, 20.0, 40.0, -7.0}) {
    const double got = tilt_to_phase(tilt, 2e-3, 1.5, 594e-9);
    EXPECT_NEAR(got, oracle::ray_trace_phase(tilt, 2e-3, 1.5, 594e-9), 1e-9) << tilt;
  }
  EXPECT_EQ(tilt_to_phase(0.0, 2e-3, 1.5, 594e-9), 0.0);
  EXPECT_THROW(tilt_to_phase(45.0, 2e-3, 1.5, 594e-9), InvalidArgument);
  EXPECT_THROW(tilt_to_phase(5.0, 2e-3, 1.0, 594e-9), InvalidArgument);
}

TEST(Plate, TiltPhaseGrowsWithTilt) {
  double prev = 0;
  for (double tilt = 0.5; tilt < 44; tilt += 0.5) {
    const double p = tilt_to_phase(tilt, 2e-3, 1.5, 594e-9);
    EXPECT_GT(p, prev);
    prev = p;
  }
}

TEST(Plate, WrapPhaseRange) {
  std::mt19937_64 rng(35);
  std::uniform_real_distribution<double> u(-50, 50);
  for (int i = 0; i < 1000; ++i) {
    const double x = u(rng), w = wrap_phase(x);
    EXPECT_GT(w, -std::numbers::pi);
    EXPECT_LE(w, std::numbers::pi);
    EXPECT_NEAR(std::remainder(x - w, 2 * std::numbers::pi), 0.0, 1e-12);
  }
  EXPECT_DOUBLE_EQ(wrap_phase(-std::numbers::pi), std::numbers::pi);
}
