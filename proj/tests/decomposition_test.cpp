#include <gtest/gtest.h>

#include <random>

#include "cebit/bench.hpp"
#include "cebit/errors.hpp"
#include "cebit/measurement.hpp"
#include "oracles.hpp"

using namespace cebit;
using namespace cebit::measure;

namespace {

const optics::GridSpec kGrid = optics::GridSpec::with_window(256, 8.0);

ScalarField mode_mix(complex a, complex b, optics::Offset at = {}) {
  return a * optics::hg_mode(1, 0, kGrid, at) + b * optics::hg_mode(0, 1, kGrid, at);
}

}  // namespace

TEST(Decomposition, RandomPayloadsRoundTrip) {
  std::mt19937_64 rng(51);
  for (int k = 0; k < 50; ++k) {
    const complex a = oracle::random_cx(rng), b = oracle::random_cx(rng);
    const double norm = std::sqrt(std::norm(a) + std::norm(b));
    const MeasurementResult r = modal_decomposition(mode_mix(a, b), NoiseModel{}, 1);
    EXPECT_NEAR(r.abs_alpha, std::abs(a) / norm, 1e-6);
    EXPECT_NEAR(r.abs_beta, std::abs(b) / norm, 1e-6);
    ASSERT_TRUE(r.phase_defined);
    EXPECT_NEAR(std::remainder(r.delta_phi - std::arg(b / a), 2 * std::numbers::pi), 0.0, 1e-6);
  }
}

TEST(Decomposition, FollowsADisplacedBeam) {
  const optics::Offset shift{0.0, 0.4e-3};
  const MeasurementResult r = modal_decomposition(mode_mix(0.6, complex(0, 0.8), shift), NoiseModel{}, 1);
  EXPECT_NEAR(r.abs_alpha, 0.6, 1e-6);
  EXPECT_NEAR(r.delta_phi, std::numbers::pi / 2, 1e-6);
  const optics::Offset c = intensity_centroid(mode_mix(0.6, 0.8, shift));
  EXPECT_NEAR(c.y, shift.y, 1e-9);
}

TEST(Decomposition, SingleModeHasNoPhase) {
  const MeasurementResult r = modal_decomposition(mode_mix(1.0, 0.0), NoiseModel{}, 1);
  EXPECT_FALSE(r.phase_defined);
  EXPECT_EQ(r.delta_phi, 0.0);
  EXPECT_NEAR(r.abs_alpha, 1.0, 1e-9);
}

TEST(Decomposition, DarkInputThrows) {
  EXPECT_THROW(modal_decomposition(ScalarField(kGrid), NoiseModel{}, 1), DarkBeam);
  EXPECT_THROW(modal_decomposition(mode_mix(1, 1), NoiseModel{}, 0), InvalidArgument);
}

TEST(Decomposition, NoisyRunIsSeededAndSpread) {
  const NoiseModel noise{.gaussian_sigma = 0.01, .seed = 77};
  const ScalarField M = mode_mix(0.6, std::polar(0.8, 1.0));
  const MeasurementResult a = modal_decomposition(M, noise, 15), b = modal_decomposition(M, noise, 15);
  EXPECT_EQ(a.csv_row(), b.csv_row());
  EXPECT_GT(a.abs_alpha_std, 0.0);
  EXPECT_GT(a.delta_phi_std, 0.0);
  EXPECT_NEAR(a.ratio(), 0.8 / 0.6, 0.05);
  EXPECT_NEAR(a.delta_phi, 1.0, 0.05);
}

TEST(Decomposition, BenchOutputsRecoverThePayload) {
  // Outcome 00 passes the payload through unchanged.
  const bench::BenchOutput out = bench::run_bench({kGrid, PayloadCoeffs{0.6, std::polar(0.8, -2.0)}, {}, 0.0});
  const MeasurementResult r = modal_decomposition(out.field, NoiseModel{}, 1);
  EXPECT_NEAR(r.ratio(), 0.8 / 0.6, 1e-6);
  EXPECT_NEAR(r.delta_phi, -2.0, 1e-6);
}
