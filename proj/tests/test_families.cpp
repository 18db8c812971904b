#include <gtest/gtest.h>

#include "cactus/blocks.hpp"
#include "cactus/canonical.hpp"
#include "cactus/errors.hpp"
#include "cactus/families.hpp"
#include "cactus/invariants.hpp"
#include "oracles.hpp"

using namespace cactus;

TEST(Families, ConstructedShapes) {
  for (FamilyId id : {FamilyId::G0, FamilyId::G3, FamilyId::G4, FamilyId::G5, FamilyId::G8, FamilyId::G10}) {
    for (std::size_t n = 3; n <= 14; ++n) {
      for (std::size_t t = 0; 2 * t + 1 <= n; ++t) {
        if (!family_feasible(id, n, t)) {
          EXPECT_THROW(build_family(id, n, t), InfeasibleParameters);
          continue;
        }
        const Graph g = build_family(id, n, t);
        EXPECT_EQ(g.order(), n);
        EXPECT_EQ(g.size(), n - 1 + t);
        EXPECT_EQ(cactus_check(g), t) << family_name(id) << " " << n << " " << t;
      }
    }
  }
}

TEST(Families, G0IsHubWithTrianglesAndPendants) {
  const Graph g = build_g0(9, 3);
  EXPECT_EQ(g.degree(0), 8u);
  const auto cycles = cactus_cycles(g);
  ASSERT_EQ(cycles.size(), 3u);
  for (const auto& c : cycles) EXPECT_EQ(c.size(), 3u);
}

TEST(Families, ValuesAtSevenTwo) {
  // Cross-checked against forest-count resistances.
  EXPECT_EQ(degree_resistance_distance(build_g0(7, 2)), Rational(106));
  EXPECT_EQ(degree_resistance_distance(build_g3(7, 2)), Rational(126));
  EXPECT_EQ(degree_resistance_distance(build_g4(7, 2)), Rational(346, 3));
  EXPECT_EQ(degree_resistance_distance(build_g5(7, 2)), Rational(108));
  EXPECT_EQ(degree_resistance_distance(build_g8(7, 2)), Rational(110));
  EXPECT_EQ(degree_resistance_distance(build_g10(7, 2)), Rational(112));
  EXPECT_EQ(oracle::pair_sum_degree_resistance(build_g4(7, 2)), Rational(346, 3));
}

TEST(Families, Infeasible) {
  EXPECT_FALSE(family_feasible(FamilyId::G5, 7, 3));
  EXPECT_THROW(build_g5(7, 3), InfeasibleParameters);
  EXPECT_THROW(build_g0(4, 2), InfeasibleParameters);
  EXPECT_THROW(build_cycle_pendant(3), InfeasibleParameters);
}

TEST(Families, Names) {
  EXPECT_EQ(parse_family("g10"), FamilyId::G10);
  EXPECT_EQ(parse_family("cycle-pendant"), FamilyId::CyclePendant);
  EXPECT_FALSE(parse_family("g6").has_value());
  EXPECT_TRUE(is_inferred(FamilyId::G8));
  EXPECT_FALSE(is_inferred(FamilyId::G4));
}

TEST(ClosedForms, CycleMatchesDirect) {
  for (std::size_t k = 3; k <= 10; ++k) {
    const Graph c = oracle::cycle(k);
    const CycleForms f = closed_forms_cycle(k);
    EXPECT_EQ(f.kirchhoff, kirchhoff_index(c));
    EXPECT_EQ(f.degree_resistance, degree_resistance_distance(c));
    EXPECT_EQ(f.kf_v, kf_v(c, 0));
    EXPECT_EQ(f.d_v, d_v(c, k - 1));
  }
}

TEST(ClosedForms, CyclePendantFragment) {
  const CyclePendantForms four = closed_forms_cycle_pendant(4);
  EXPECT_EQ(four.degree_resistance, Rational(70, 3));
  EXPECT_EQ(four.kf_u, Rational(7, 3));
  EXPECT_EQ(four.d_u, Rational(11, 3));
  const CyclePendantForms five = closed_forms_cycle_pendant(5);
  EXPECT_EQ(five.degree_resistance, Rational(43));
  EXPECT_EQ(five.kf_u, Rational(7, 2));
  EXPECT_EQ(five.d_u, Rational(6));
  for (std::size_t h = 4; h <= 10; ++h) {
    EXPECT_EQ(closed_forms_cycle_pendant(h).degree_resistance, degree_resistance_distance(build_cycle_pendant(h)));
  }
}

TEST(ClosedForms, G0SpecialCases) {
  EXPECT_EQ(g0_closed_form(5, 1), Rational(134, 3));
  EXPECT_EQ(g0_closed_form(7, 3), Rational(104));   // friendship graph
  EXPECT_EQ(g0_closed_form(5, 0), Rational(44));    // star
  EXPECT_EQ(degree_resistance_distance(build_g0(7, 3)), Rational(104));
}

TEST(ClosedForms, CorollariesMatchDirect) {
  for (std::size_t n = 4; n <= 14; ++n) {
    for (std::size_t t = 1; 2 * t + 2 <= n; ++t) {
      EXPECT_EQ(corollary_closed_forms(FamilyId::G5, n, t), degree_resistance_distance(build_g5(n, t)));
      EXPECT_EQ(corollary_closed_forms(FamilyId::G4, n, t), degree_resistance_distance(build_g4(n, t)));
    }
  }
}

TEST(ClosedForms, DifferencesMatchDirect) {
  for (std::size_t n = 5; n <= 13; ++n) {
    for (std::size_t t = 1; 2 * t + 3 <= n; ++t) {
      const Rational g0 = degree_resistance_distance(build_g0(n, t));
      const Rational g5 = degree_resistance_distance(build_g5(n, t));
      EXPECT_EQ(difference::g3_minus_g0(n, t), degree_resistance_distance(build_g3(n, t)) - g0);
      EXPECT_EQ(difference::g5_minus_g0(n, t), g5 - g0);
      EXPECT_EQ(difference::g10_minus_g5(n, t), degree_resistance_distance(build_g10(n, t)) - g5);
      if (t >= 2) EXPECT_EQ(difference::g8_minus_g0(n, t), degree_resistance_distance(build_g8(n, t)) - g0);
    }
  }
}

TEST(ClosedForms, PublishedExpressionsDisagree) {
  EXPECT_EQ(erroneous::cycle_minus_cycle_pendant(4), Rational(-13, 3));
  EXPECT_EQ(difference::cycle_minus_cycle_pendant(4), Rational(-10, 3));
  EXPECT_EQ(erroneous::g0_form(5, 1), Rational(50));
  EXPECT_EQ(difference::cycle_shortening(5, 1, 4), Rational(-5, 3));
  for (std::size_t h = 4; h <= 10; ++h) {
    EXPECT_EQ(difference::cycle_minus_cycle_pendant(h),
              degree_resistance_distance(oracle::cycle(h)) - degree_resistance_distance(build_cycle_pendant(h)));
  }
}
