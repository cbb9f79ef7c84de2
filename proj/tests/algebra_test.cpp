#include <gtest/gtest.h>

#include <random>

#include "cebit/algebra.hpp"
#include "cebit/errors.hpp"
#include "oracles.hpp"

using namespace cebit;

namespace {

PayloadCoeffs random_payload(std::mt19937_64& rng) {
  return {oracle::random_cx(rng), oracle::random_cx(rng)};
}

oracle::Vec8 to_vec(const CebitState& s) { return s.amplitudes; }

CebitState from_vec(const oracle::Vec8& v) {
  CebitState s;
  s.amplitudes = v;
  return s;
}

double max_diff(const oracle::Vec8& a, const oracle::Vec8& b) {
  double d = 0;
  for (int i = 0; i < 8; ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

}  // namespace

TEST(Algebra, BasisOrderingIsCab) {
  const CebitState s = CebitState::basis(1, 0, 1);
  EXPECT_EQ(s.amplitudes[5], complex(1.0));
  EXPECT_DOUBLE_EQ(s.norm_squared(), 1.0);
}

TEST(Algebra, PrepareInputMatchesTensorProduct) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const PayloadCoeffs p = random_payload(rng);
    EXPECT_LT(max_diff(to_vec(prepare_input(p)), oracle::tensor_input(p.alpha(), p.beta())), 1e-15);
  }
}

TEST(Algebra, GatesMatchKroneckerMatrices) {
  std::mt19937_64 rng(12);
  const oracle::Mat8 cnot = oracle::cnot_ca();
  const oracle::Mat8 h = oracle::kron3(oracle::kH, oracle::kI, oracle::kI);
  for (int i = 0; i < 200; ++i) {
    oracle::Vec8 v;
    for (auto& x : v) x = oracle::random_cx(rng);
    EXPECT_LT(max_diff(to_vec(apply_cnot_CA(from_vec(v))), oracle::apply(cnot, v)), 1e-14);
    EXPECT_LT(max_diff(to_vec(apply_hadamard_C(from_vec(v))), oracle::apply(h, v)), 1e-14);
  }
}

TEST(Algebra, TransformMatchesExpandedBranches) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 200; ++i) {
    const PayloadCoeffs p = random_payload(rng);
    const CebitState out = teleport_transform(prepare_input(p));
    EXPECT_LT(max_diff(to_vec(out), oracle::expanded_output(p.alpha(), p.beta())), 1e-14);
  }
}

TEST(Algebra, GatesAreUnitaryInvolutions) {
  std::mt19937_64 rng(14);
  for (int i = 0; i < 1000; ++i) {
    oracle::Vec8 v;
    for (auto& x : v) x = oracle::random_cx(rng);
    const CebitState s = from_vec(v);
    const double n2 = s.norm_squared();
    const CebitState c = apply_cnot_CA(s), h = apply_hadamard_C(s);
    EXPECT_NEAR(c.norm_squared(), n2, 1e-12 * n2);
    EXPECT_NEAR(h.norm_squared(), n2, 1e-12 * n2);
    EXPECT_LT(max_diff(to_vec(apply_cnot_CA(c)), v), 1e-13);
    EXPECT_LT(max_diff(to_vec(apply_hadamard_C(h)), v), 1e-13);
  }
}

TEST(Algebra, EveryOutcomeIsQuarterAndCorrectable) {
  std::mt19937_64 rng(15);
  for (int i = 0; i < 1000; ++i) {
    const PayloadCoeffs p = random_payload(rng);
    const CebitState out = teleport_transform(prepare_input(p));
    double total = 0;
    for (BellOutcome o : kAllOutcomes) {
      const Projection pr = project_CA(out, o);
      ASSERT_TRUE(pr.defined);
      EXPECT_NEAR(pr.probability, 0.25, 1e-12);
      EXPECT_GE(fidelity(correction_for(o).apply(pr.b_state), p), 1.0 - 1e-12);
      total += pr.probability;
    }
    EXPECT_NEAR(total, 1.0, 1e-12);
  }
}

TEST(Algebra, CorrectionsArePauliProducts) {
  auto same = [](const Matrix2& m, const oracle::Mat2& ref) {
    for (int r = 0; r < 2; ++r)
      for (int k = 0; k < 2; ++k)
        if (std::abs(m[r][k] - ref[r][k]) > 1e-15) return false;
    return true;
  };
  EXPECT_TRUE(same(correction_for({0, 0}).matrix, oracle::kI));
  EXPECT_TRUE(same(correction_for({0, 1}).matrix, oracle::kX));
  EXPECT_TRUE(same(correction_for({1, 0}).matrix, oracle::kZ));
  EXPECT_TRUE(same(correction_for({1, 1}).matrix, oracle::Mat2{{{0, -1}, {1, 0}}}));
  EXPECT_EQ(correction_for({1, 1}).name(), "XZ");
}

TEST(Algebra, PayloadNormalizationAndErrors) {
  const PayloadCoeffs p{3.0, complex(0.0, 4.0)};
  EXPECT_NEAR(std::abs(p.alpha()), 0.6, 1e-15);
  EXPECT_NEAR(p.beta().imag(), 0.8, 1e-15);
  EXPECT_THROW(PayloadCoeffs(0.0, 0.0), InvalidPayload);
  EXPECT_THROW(fidelity(Spinor{0.0, 0.0}, p), InvalidArgument);
}

TEST(Algebra, FidelityIgnoresGlobalPhaseAndScale) {
  const PayloadCoeffs p{complex(0.3, 0.1), complex(-0.2, 0.7)};
  const complex k = std::polar(2.5, 1.3);
  EXPECT_NEAR(fidelity(Spinor{k * p.alpha(), k * p.beta()}, p), 1.0, 1e-15);
  EXPECT_LE(fidelity(Spinor{p.beta(), p.alpha()}, p), 1.0);
}

TEST(Algebra, OutcomeLabels) {
  EXPECT_EQ(BellOutcome::parse("10"), (BellOutcome{1, 0}));
  EXPECT_EQ((BellOutcome{0, 1}).label(), "01");
  EXPECT_THROW(BellOutcome::parse("2"), InvalidArgument);
  EXPECT_THROW(BellOutcome::parse("012"), InvalidArgument);
}

TEST(Algebra, StateCsvRoundTripIsExact) {
  std::mt19937_64 rng(16);
  CebitState s;
  for (auto& x : s.amplitudes) x = oracle::random_cx(rng);
  const CebitState back = CebitState::from_csv(s.to_csv());
  EXPECT_EQ(back.amplitudes, s.amplitudes);
  EXPECT_THROW(CebitState::from_csv("1,2,3"), InvalidArgument);
}
