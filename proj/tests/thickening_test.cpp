#include <gtest/gtest.h>

#include <random>

#include "cabling/error.hpp"
#include "cabling/invariants.hpp"
#include "cabling/thickening.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace cabling;

namespace {

KnotSpec knot(const char* text) { return parse_knot(text); }

}  // namespace

TEST(CandidateToriTest, TrefoilFirstThree) {
  const std::vector<CandidateTorus> tori = candidate_tori(knot("Cp:(2,3)"), 2);
  ASSERT_EQ(tori.size(), 3u);
  EXPECT_EQ(tori[0].intersection_slope, UnreducedSlope(-1, 5));
  EXPECT_EQ(tori[1].intersection_slope, UnreducedSlope(-2, 11));
  EXPECT_EQ(tori[2].intersection_slope, UnreducedSlope(-3, 17));
  for (const CandidateTorus& t : tori) EXPECT_EQ(t.dividing_curves, 2);
}

TEST(CandidateToriTest, SharedFactorIsNotReduced) {
  const std::vector<CandidateTorus> tori = candidate_tori(knot("Cp:(2,5)"), 2);
  EXPECT_EQ(tori[2].intersection_slope.numerator(), -3);
  EXPECT_EQ(tori[2].intersection_slope.denominator(), 27);
  EXPECT_EQ(tori[2].n_k, 3);
  EXPECT_EQ(tori[2].dividing_curves, 6);
  EXPECT_EQ(tori[2].reduced(), Slope(-1, 9));
}

TEST(CandidateToriTest, TwoLevelExample) {
  const std::vector<CandidateTorus> tori = candidate_tori(knot("Cp:(2,3),(3,2)"), 16);
  EXPECT_EQ(tori[16].intersection_slope, UnreducedSlope(-17, 493));
  EXPECT_EQ(tori[16].n_k, 17);
  EXPECT_EQ(tori[16].dividing_curves, 34);
}

TEST(CandidateToriTest, RejectsNonBreve) {
  EXPECT_THROW(candidate_tori(knot("C:(-2,3)"), 3), DomainError);
  EXPECT_THROW(candidate_tori(knot("C:(2,3),(2,3)"), 3), DomainError);
}

TEST(CandidateToriTest, CountMatchesGcdOfDifference) {
  std::mt19937_64 rng(51);
  for (int i = 0; i < 100; ++i) {
    const KnotSpec k = testkit::random_breve(rng, {4, 30, 6});
    const auto [A, B] = testkit::brute_ab(k.pairs());
    for (const CandidateTorus& t : candidate_tori(k, 30)) {
      const Integer den = A * t.k + B;
      EXPECT_EQ(t.intersection_slope, UnreducedSlope(-(t.k + 1), den));
      Integer g = 1;
      for (Integer d = 1; d <= t.k + 1; ++d) {
        if ((t.k + 1) % d == 0 && den % d == 0) g = d;
      }
      EXPECT_EQ(t.n_k, g);
      EXPECT_EQ(t.dividing_curves, 2 * g);
    }
  }
}

TEST(ChainCheckTest, RandomBreveSpecs) {
  std::mt19937_64 rng(52);
  for (int i = 0; i < 100; ++i) {
    EXPECT_TRUE(chain_check(testkit::random_breve(rng, {5, 40, 7}), 100));
  }
}

TEST(EdgeRoundTest, BaseExamples) {
  EXPECT_EQ(edge_round_base(2, 3, 0), UnreducedSlope(-1, 5));
  EXPECT_EQ(edge_round_base(2, 3, 1), UnreducedSlope(-2, 11));
  EXPECT_EQ(edge_round_base(2, 5, 2), UnreducedSlope(-3, 27));
  EXPECT_THROW(edge_round_base(1, 3, 0), ValidationError);
}

TEST(EdgeRoundTest, BaseAgreesWithRationalSumForManyCompletions) {
  for (int p = 2; p <= 12; ++p) {
    for (int q = 2; q <= 12; ++q) {
      if (gcd(p, q) != 1) continue;
      for (int shift = -5; shift <= 5; ++shift) {
        const BasisCompletion c = complete_basis(p, q, shift);
        ASSERT_EQ(Integer(p) * c.q_prime - c.p_prime * q, 1);
        for (int k = 0; k <= 20; ++k) {
          const UnreducedSlope s = edge_round_base(p, q, k, shift);
          const testkit::Rational expected(-(k + 1), p * q * k + p + q);
          EXPECT_EQ(testkit::Rational(s.numerator(), s.denominator()), expected);
          EXPECT_EQ(testkit::rational_edge_round_base(p, q, k, c.p_prime, c.q_prime), expected);
        }
      }
    }
  }
}

TEST(EdgeRoundTest, StepExamples) {
  const EdgeRoundStep a = edge_round_step(knot("Cp:(2,3)"), 3, 2, 0);
  EXPECT_EQ(a.m, 5);
  EXPECT_EQ(a.slope, UnreducedSlope(-1, 13));
  const EdgeRoundStep b = edge_round_step(knot("Cp:(2,3)"), 3, 2, 1);
  EXPECT_EQ(b.m, 20);
  EXPECT_EQ(b.slope, UnreducedSlope(-2, 43));
}

TEST(EdgeRoundTest, StepMatchesCandidateTori) {
  std::mt19937_64 rng(53);
  for (int i = 0; i < 200; ++i) {
    const KnotSpec full = testkit::random_breve(rng, {4, 30, 6});
    if (full.levels() < 2) continue;
    const KnotSpec prefix = full.prefix(full.levels() - 1);
    const CablingPair last = full.pairs().back();
    const std::vector<CandidateTorus> tori = candidate_tori(full, 10);
    for (const CandidateTorus& t : tori) {
      for (int shift : {-2, 0, 3}) {
        EXPECT_EQ(edge_round_step(prefix, last.meridian, last.longitude, t.k, shift).slope,
                  t.intersection_slope);
      }
    }
  }
}

TEST(EdgeRoundTest, StepRejectsNonBreveExtension) {
  EXPECT_THROW(edge_round_step(knot("Cp:(2,3)"), -11, 2, 0), DomainError);
}

TEST(CableTwistingTest, Examples) {
  const CableTwisting a = cable_tb_above_width(1, 15, 2);
  EXPECT_EQ(a.max_twisting, -13);
  EXPECT_EQ(a.max_tb, 17);
  const CableTwisting b = cable_tb_above_width(17, 103, 6);
  EXPECT_EQ(b.max_twisting, -1);
  EXPECT_EQ(b.max_tb, 617);
  EXPECT_THROW(cable_tb_above_width(1, 2, 3), DomainError);
}

TEST(CableTwistingTest, BridgeToBreveInvariants) {
  std::mt19937_64 rng(54);
  int checked = 0;
  while (checked < 500) {
    const KnotSpec full = testkit::random_breve(rng, {5, 40, 7});
    if (full.levels() < 2) continue;
    const KnotSpec prefix = full.prefix(full.levels() - 1);
    const ABPair inner = ab_recursive(prefix);
    const ABPair outer = ab_recursive(full);
    const KnotSpec c = to_c_framing(full);
    const CableTwisting t = cable_tb_above_width(inner.A - inner.B, c.pairs().back().meridian,
                                                 c.pairs().back().longitude);
    EXPECT_EQ(t.max_tb, outer.A - outer.B) << format_knot(full);
    ++checked;
  }
}
