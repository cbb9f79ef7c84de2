#include <gtest/gtest.h>

#include <random>

#include "cebit/algebra.hpp"
#include "cebit/errors.hpp"
#include "cebit/field.hpp"
#include "oracles.hpp"

using namespace cebit;
using namespace cebit::optics;

namespace {

const GridSpec kGrid = GridSpec::with_window(256, 8.0);

}  // namespace

TEST(Grid, Validation) {
  EXPECT_THROW(GridSpec(100, 1e-4, 1e-3), InvalidArgument);
  EXPECT_THROW(GridSpec(32, 1e-3, 1e-3), InvalidArgument);
  EXPECT_THROW(GridSpec::with_window(256, 5.0), InvalidArgument);
  EXPECT_NO_THROW(GridSpec::with_window(64, 6.0));
  const GridSpec g = GridSpec::with_window(512, 8.0, 2e-3);
  EXPECT_DOUBLE_EQ(g.window(), 16e-3);
  EXPECT_DOUBLE_EQ(g.coord(256), 0.0);
  EXPECT_DOUBLE_EQ(g.coord(0), -8e-3);
}

TEST(Modes, ClosedFormMatchesOracle) {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(-3e-3, 3e-3);
  for (int l = 0; l <= 3; ++l)
    for (int m = 0; m <= 3 - l; ++m)
      for (int k = 0; k < 50; ++k) {
        const double x = u(rng), y = u(rng);
        const double ref = oracle::hg(l, m, x, y, 1e-3);
        EXPECT_NEAR(hg_value(l, m, x, y, 1e-3), ref, 1e-12 * std::max(1.0, std::abs(ref)));
      }
}

TEST(Modes, SampledModeMatchesClosedForm) {
  const ScalarField f = hg_mode(1, 0, kGrid);
  double peak = 0;
  for (int i = 0; i < kGrid.n(); ++i) peak = std::max(peak, std::abs(oracle::hg(1, 0, kGrid.coord(i), 0, 1e-3)));
  for (int iy = 0; iy < kGrid.n(); iy += 7)
    for (int ix = 0; ix < kGrid.n(); ix += 5)
      EXPECT_NEAR(f.at(ix, iy).real(), oracle::hg(1, 0, kGrid.coord(ix), kGrid.coord(iy), 1e-3), 1e-6 * peak);
}

TEST(Modes, GramMatrixIsIdentity) {
  const GridSpec g = GridSpec::with_window(512, 8.0);
  const std::array<ScalarField, 3> modes{hg_mode(0, 0, g), hg_mode(1, 0, g), hg_mode(0, 1, g)};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      EXPECT_NEAR(std::abs(overlap(modes[i], modes[j]) - complex(i == j ? 1.0 : 0.0)), 0.0, 1e-6);
}

TEST(Modes, SmallWindowIsRejected) {
  // A 6-waist window clips too much of the higher orders.
  const GridSpec tight = GridSpec::with_window(64, 6.0);
  EXPECT_THROW(hg_mode(3, 3, tight), GridTooSmall);
  try {
    hg_mode(3, 3, tight);
  } catch (const GridTooSmall& e) {
    EXPECT_GT(e.leakage(), kLeakageLimit);
  }
}

TEST(Modes, OffsetShiftsTheMode) {
  const double dy = 10 * kGrid.pitch();
  const ScalarField a = hg_mode(0, 1, kGrid, dy);
  const ScalarField b = hg_mode(0, 1, kGrid, Offset{0.0, dy});
  for (std::size_t i = 0; i < kGrid.size(); ++i) EXPECT_EQ(a.samples()[i], b.samples()[i]);
  EXPECT_NEAR(a.at(kGrid.n() / 2, kGrid.n() / 2 + 10).real(), 0.0, 1e-12);
}

TEST(Fields, OverlapRejectsMismatchedGrids) {
  EXPECT_THROW(overlap(hg_mode(0, 0, kGrid), hg_mode(0, 0, GridSpec::with_window(128, 8.0))), InvalidArgument);
}

TEST(Fields, RadialBeamIsBellState) {
  const VectorBeam b = radial_beam(kGrid);
  EXPECT_NEAR(b.power(), 1.0, 1e-9);
  const DecodedState d = decode_overlaps(b);
  ASSERT_TRUE(d.valid);
  EXPECT_NEAR(std::abs(d.state(0, 0, 0)), 1 / std::numbers::sqrt2, 1e-9);
  EXPECT_NEAR(std::abs(d.state(0, 1, 1)), 1 / std::numbers::sqrt2, 1e-9);
  EXPECT_NEAR(b.path_power(Path::lower), 0.0, 1e-15);
  // Local polarization is radial: E_x / E_y = x / y.
  const int n = kGrid.n();
  const complex ex = b.component(Path::upper, Polarization::x).at(n / 2 + 20, n / 2 + 9);
  const complex ey = b.component(Path::upper, Polarization::y).at(n / 2 + 20, n / 2 + 9);
  EXPECT_NEAR((ex / ey).real(), 20.0 / 9.0, 1e-9);
}

TEST(Fields, EncodeDecodeRoundTrip) {
  std::mt19937_64 rng(22);
  for (int k = 0; k < 20; ++k) {
    CebitState s;
    for (auto& x : s.amplitudes) x = oracle::random_cx(rng);
    s = s.normalized();
    const DecodedState d = decode_overlaps(encode_cebit_state(s, kGrid));
    ASSERT_TRUE(d.valid);
    EXPECT_LT(d.residual, 1e-9);
    for (int i = 0; i < 8; ++i) EXPECT_NEAR(std::abs(d.state.amplitudes[i] - s.amplitudes[i]), 0.0, 1e-9);
  }
}

TEST(Fields, DecodeFlagsLeakageAndDarkness) {
  VectorBeam dark(kGrid);
  EXPECT_FALSE(decode_overlaps(dark).valid);

  VectorBeam b = encode_cebit_state(CebitState::basis(0, 0, 0), kGrid);
  b.component(Path::upper, Polarization::x) += hg_mode(2, 0, kGrid);
  EXPECT_THROW(decode_overlaps(b), BasisLeakage);
}
