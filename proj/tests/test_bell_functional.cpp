#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "spin1bell/angle_optimizer.hpp"
#include "spin1bell/bell_functional.hpp"
#include "test_support.hpp"

namespace spin1bell {
namespace {

// 30-digit reference values from the Wigner-formula oracle.
constexpr double kHeadlineS = 1.12006787642166399354;
constexpr double kRandomSingletS = 0.664590694819494116337;
constexpr double kRandomProductS = 0.384809088964113115131;

const AngleConfig kHeadlineAngles = AngleConfig::from_degrees(0.0, 295.4, 147.7, 443.1);

template <class Rng>
AngleConfig random_config(Rng& rng) {
  return random_angle_config(rng);
}

TEST(SValue, HeadlineViolation) {
  const auto b = s_value(singlet_state(), kHeadlineAngles);
  EXPECT_NEAR(b.s, 1.120, 5e-3);
  EXPECT_NEAR(b.s, kHeadlineS, 1e-12);
  EXPECT_NEAR(b.s, b.p11_a - b.p11_b + b.p11_c + b.block, 1e-14);
}

TEST(SValue, AllAnglesEqualGivesOneThird) {
  const Angle a(0.9);
  EXPECT_NEAR(s_value(singlet_state(), {a, a, a, a}).s, 1.0 / 3.0, 1e-15);
}

TEST(SValue, FamilyAtQuarterTurn) {
  EXPECT_NEAR(s_value(singlet_state(), family_config(Angle::from_degrees(90))).s, 0.5, 1e-14);
}

TEST(SValue, MatchesKroneckerOracleAtFixedPoint) {
  const AngleConfig c{Angle(0.3), Angle(1.9), Angle(4.4), Angle(2.2)};
  EXPECT_NEAR(s_value(singlet_state(), c).s, kRandomSingletS, 1e-13);
  EXPECT_NEAR(s_value(product_reference_state(), c).s, kRandomProductS, 1e-13);
}

TEST(SValue, MatchesKroneckerOracleForRandomStates) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 200; ++i) {
    const auto amps = testing::random_amplitudes(rng);
    const auto c = random_config(rng);
    ASSERT_NEAR(s_value(SpinState::from_amplitudes(amps), c).s,
                testing::oracle_s(amps, c.beta1.radians(), c.beta1_prime.radians(),
                                  c.beta2.radians(), c.beta2_prime.radians()),
                1e-12);
  }
}

TEST(SValue, BreakdownRangesProperty) {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 1000; ++i) {
    const auto state = SpinState::from_amplitudes(testing::random_amplitudes(rng));
    const auto b = s_value(state, random_config(rng));
    for (double p : {b.p11_a, b.p11_b, b.p11_c, b.block}) {
      ASSERT_GE(p, 0.0);
      ASSERT_LE(p, 1.0 + 1e-12);
    }
    ASSERT_NEAR(b.s, b.p11_a - b.p11_b + b.p11_c + b.block, 1e-14);
  }
}

TEST(SingletClosedForm, Examples) {
  EXPECT_NEAR(s_singlet_closed_form(kHeadlineAngles), 1.120, 5e-3);
  const Angle a(2.0);
  EXPECT_NEAR(s_singlet_closed_form({a, a, a, a}), 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(s_singlet_closed_form(AngleConfig::from_degrees(0, 180, 90, 270)), 0.5, 1e-14);
}

TEST(SingletClosedForm, EquivalenceProperty) {
  std::mt19937_64 rng(23);
  const auto singlet = singlet_state();
  for (int i = 0; i < 10000; ++i) {
    const auto c = random_config(rng);
    ASSERT_NEAR(s_singlet_closed_form(c), s_value(singlet, c).s, 1e-12);
  }
}

TEST(SingletClosedForm, TranslationInvarianceProperty) {
  std::mt19937_64 rng(24);
  const auto singlet = singlet_state();
  std::uniform_real_distribution<double> shift(-50.0, 50.0);
  for (int i = 0; i < 1000; ++i) {
    const auto c = random_config(rng);
    ASSERT_NEAR(s_value(singlet, c.shifted(Angle(shift(rng)))).s, s_value(singlet, c).s, 1e-12);
  }
}

TEST(SingletClosedForm, DegenerateFullTurnDifferences) {
  const auto c = AngleConfig::from_degrees(0, 720, 360, -360);
  EXPECT_NEAR(s_value(singlet_state(), c).s, 1.0 / 3.0, 1e-14);
  EXPECT_NEAR(s_singlet_closed_form(c), 1.0 / 3.0, 1e-14);
}

TEST(ProductClosedForm, Examples) {
  // β1 = β1' = 0 leaves sin⁴(β2/2)
  EXPECT_NEAR(s_product_closed_form(AngleConfig::from_degrees(0, 0, 70, 200)),
              std::pow(std::sin(35.0 * std::numbers::pi / 180), 4), 1e-14);
  EXPECT_NEAR(s_product_closed_form(AngleConfig::from_degrees(90, 90, 90, 90)), 0.625, 1e-14);
  // x' = 0, y = 0 and y' = 0: the boundary value 1
  EXPECT_NEAR(s_product_closed_form(AngleConfig::from_degrees(0, 180, 0, 0)), 1.0, 1e-15);
  // with y' = sin⁴45° the -x y' term remains
  EXPECT_NEAR(s_product_closed_form(AngleConfig::from_degrees(0, 180, 0, 90)), 0.75, 1e-15);
}

TEST(ProductClosedForm, MatchesTablePathForReferenceState) {
  std::mt19937_64 rng(25);
  const auto state = product_reference_state();
  for (int i = 0; i < 10000; ++i) {
    const auto c = random_config(rng);
    ASSERT_NEAR(s_product_closed_form(c), s_value(state, c).s, 1e-12);
  }
}

TEST(ProductClosedForm, SubstitutionIdentityAndBoundProperty) {
  std::mt19937_64 rng(26);
  const auto c4 = [](Angle a) { return std::pow(std::cos(0.5 * a.radians()), 4); };
  const auto s4 = [](Angle a) { return std::pow(std::sin(0.5 * a.radians()), 4); };
  for (int i = 0; i < 10000; ++i) {
    const auto c = random_config(rng);
    const double s = s_product_closed_form(c);
    ASSERT_NEAR(s, ch_form_value(c4(c.beta1), c4(c.beta1_prime), s4(c.beta2), s4(c.beta2_prime)),
                1e-12);
    ASSERT_LE(s, 1.0 + 1e-12);
  }
}

TEST(ProductClosedForm, GeneralProductStatesRespectBound) {
  std::mt19937_64 rng(27);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const auto state = product_state(random_ket(rng), random_ket(rng));
    for (int j = 0; j < 100; ++j) worst = std::max(worst, s_value(state, random_config(rng)).s);
  }
  EXPECT_LE(worst, 1.0 + 1e-10);
}

TEST(ChLemma, Examples) {
  EXPECT_DOUBLE_EQ(ch_lemma_value({1, 1, 1, 1, 1, 1}), 0.0);
  EXPECT_DOUBLE_EQ(ch_lemma_value({1, 0, 1, 1, 0, 1}), 0.0);
  EXPECT_DOUBLE_EQ(ch_lemma_value({0, 1, 1, 0, 0, 1}), -1.0);
}

TEST(ChLemma, RejectsOutOfBox) {
  EXPECT_THROW(ch_lemma_value({1.5, 0, 1, 0, 0, 1}), std::invalid_argument);
  EXPECT_THROW(ch_lemma_value({0, -0.1, 1, 0, 0, 1}), std::invalid_argument);
  EXPECT_THROW(ch_lemma_value({0, 0, 1, 0, 2, 1}), std::invalid_argument);
  EXPECT_THROW(ch_lemma_value({0, 0, 1, std::nan(""), 0, 1}), std::invalid_argument);
}

TEST(ChLemma, BoundsProperty) {
  std::mt19937_64 rng(28);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 100000; ++i) {
    const double X = 2.0 * u(rng);
    const double Y = 2.0 * u(rng);
    const double v = ch_lemma_value({X * u(rng), X * u(rng), X, Y * u(rng), Y * u(rng), Y});
    ASSERT_GE(v, -X * Y - 1e-12);
    ASSERT_LE(v, 1e-12);
  }
}

TEST(ChLemma, ExtremesSitAtVertices) {
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    const double X = 1.0 - u(rng);  // (0, 1]
    const double Y = 1.0 - u(rng);
    double vmin = 1e300, vmax = -1e300;
    for (int mask = 0; mask < 16; ++mask) {
      const double v = ch_lemma_value({(mask & 1) ? X : 0.0, (mask & 2) ? X : 0.0, X,
                                       (mask & 4) ? Y : 0.0, (mask & 8) ? Y : 0.0, Y});
      vmin = std::min(vmin, v);
      vmax = std::max(vmax, v);
    }
    EXPECT_NEAR(vmin, -X * Y, 1e-12);
    EXPECT_NEAR(vmax, 0.0, 1e-12);
    // interior samples stay within the vertex envelope
    for (int i = 0; i < 200; ++i) {
      const double v = ch_lemma_value({X * u(rng), X * u(rng), X, Y * u(rng), Y * u(rng), Y});
      ASSERT_GE(v, vmin - 1e-12);
      ASSERT_LE(v, vmax + 1e-12);
    }
  }
}

TEST(ChForm, Examples) {
  EXPECT_DOUBLE_EQ(ch_form_value(1, 1, 0.3, 0.8), 0.3);
  EXPECT_DOUBLE_EQ(ch_form_value(0, 0, 0, 0), 1.0);
  EXPECT_DOUBLE_EQ(ch_form_value(0.25, 0.25, 0.25, 0.25), 0.625);
}

TEST(ChForm, RejectsOutOfRange) {
  EXPECT_THROW(ch_form_value(1.01, 0, 0, 0), std::invalid_argument);
  EXPECT_THROW(ch_form_value(0, 0, -0.5, 0), std::invalid_argument);
}

}  // namespace
}  // namespace spin1bell
