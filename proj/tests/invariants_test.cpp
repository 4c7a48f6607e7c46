#include <gtest/gtest.h>

#include <random>

#include "cabling/classification.hpp"
#include "cabling/error.hpp"
#include "cabling/invariants.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace cabling;

namespace {

KnotSpec knot(const char* text) { return parse_knot(text); }

}  // namespace

TEST(ABTest, ClosedForm) {
  EXPECT_EQ(ab_closed(knot("Cp:(2,3)")), (ABPair{6, 5}));
  EXPECT_EQ(ab_closed(knot("Cp:(2,3),(3,2)")), (ABPair{30, 13}));
  EXPECT_EQ(ab_closed(knot("Cp:(2,3),(-13,2)")), (ABPair{-2, -3}));
}

TEST(ABTest, Recursion) {
  EXPECT_EQ(ab_recursive(knot("Cp:(2,3)")), (ABPair{6, 5}));
  EXPECT_EQ(ab_recursive(knot("Cp:(2,3),(3,2)")), (ABPair{30, 13}));
  EXPECT_EQ(ab_recursive(knot("Cp:(2,5),(7,3)")), (ABPair{111, 28}));
}

TEST(ABTest, FramingIndependent) {
  EXPECT_EQ(ab_closed(knot("C:(2,3),(15,2)")), (ABPair{30, 13}));
  EXPECT_EQ(ab_recursive(knot("C:(2,3),(15,2)")), (ABPair{30, 13}));
}

TEST(ABTest, ClosedEqualsRecursiveEqualsBruteOnRandomSpecs) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 1000; ++i) {
    const KnotSpec k = testkit::random_spec(rng, {6, 50, 9});
    const ABPair closed = ab_closed(k);
    EXPECT_EQ(closed, ab_recursive(k));
    const auto [A, B] = testkit::brute_ab(k.pairs());
    EXPECT_EQ(closed.A, A);
    EXPECT_EQ(closed.B, B);
  }
}

TEST(ABTest, DeepKnotsExceedSixtyFourBits) {
  RawKnot raw{Framing::Cprime, {}};
  for (int i = 0; i < 14; ++i) raw.pairs.push_back({i == 0 ? 2 : 5, 9});
  const KnotSpec k = validate(raw);
  const ABPair ab = ab_recursive(k);
  EXPECT_GT(ab.A, Integer(std::numeric_limits<std::int64_t>::max()));
  EXPECT_EQ(ab, ab_closed(k));
}

TEST(EulerTest, Examples) {
  EXPECT_EQ(euler_char_bw(knot("C:(2,3)")), -1);
  EXPECT_EQ(euler_char_bw(knot("C:(2,3),(15,2)")), -17);
  EXPECT_EQ(euler_char_bw(knot("C:(3,4)")), -5);
}

TEST(EulerTest, RejectsNonPositiveCabling) {
  EXPECT_THROW(euler_char_bw(knot("C:(-2,3)")), DomainError);
  EXPECT_THROW(euler_char_bw(knot("C:(2,3),(-1,2)")), DomainError);
}

TEST(EulerTest, MatchesBMinusAOnRandomBreve) {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 1000; ++i) {
    const KnotSpec k = testkit::random_breve(rng, {6, 50, 9});
    const ABPair ab = ab_recursive(k);
    EXPECT_EQ(euler_char_bw(k), ab.B - ab.A) << format_knot(k);
  }
}

TEST(BrevePositivityTest, BreveKnotsHaveAGreaterBPositiveAndPPositive) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 1000; ++i) {
    const KnotSpec k = testkit::random_breve(rng, {6, 50, 9});
    const std::vector<ABPair> ab = ab_levels(k);
    const KnotSpec c = to_c_framing(k);
    for (std::size_t j = 0; j < ab.size(); ++j) {
      EXPECT_GT(ab[j].A, ab[j].B);
      EXPECT_GT(ab[j].B, 0);
      EXPECT_GT(c.pairs()[j].meridian, 0);
    }
  }
}

TEST(TbTest, FromTwisting) {
  EXPECT_EQ(tb_from_twisting(15, 2, -13), 17);
  EXPECT_EQ(tb_from_twisting(7, 3, 0), 21);
}

TEST(TbTest, MaxTbIsTwistingBridgeOnBreve) {
  std::mt19937_64 rng(24);
  for (int i = 0; i < 500; ++i) {
    const KnotSpec k = testkit::random_breve(rng, {5, 40, 7});
    const InvariantRecord rec = classical_invariants(k);
    ASSERT_TRUE(rec.max_tb.defined());
    EXPECT_EQ(*rec.max_tb.value, tb_from_twisting(rec.P.back(), k.pairs().back().longitude,
                                                  -rec.B.back()));
  }
}

TEST(ClassicalInvariantsTest, TrefoilAndCable) {
  const InvariantRecord t = classical_invariants(knot("C:(2,3)"));
  EXPECT_EQ(*t.max_tb.value, 1);
  EXPECT_EQ(*t.max_sl.value, 1);
  EXPECT_EQ(*t.width.value, 1);
  EXPECT_EQ(*t.euler_char.value, -1);

  const InvariantRecord c = classical_invariants(knot("Cp:(2,3),(3,2)"));
  EXPECT_EQ(*c.max_tb.value, 17);
  EXPECT_EQ(*c.euler_char.value, -17);
  EXPECT_EQ(*c.width.value, 17);
  EXPECT_EQ(c.A, (std::vector<Integer>{6, 30}));
  EXPECT_EQ(c.B, (std::vector<Integer>{5, 13}));
  EXPECT_EQ(c.P, (std::vector<Integer>{2, 15}));
}

TEST(ClassicalInvariantsTest, UndefinedOutsideBreve) {
  const InvariantRecord r = classical_invariants(knot("C:(2,3),(2,3)"));
  EXPECT_FALSE(r.max_tb.defined());
  EXPECT_FALSE(r.width.defined());
  EXPECT_FALSE(r.euler_char.defined());
  EXPECT_NE(r.max_tb.reason.find("K-breve"), std::string::npos);
  EXPECT_EQ(r.A.back(), 6);  // A, B, P stay defined
  EXPECT_EQ(r.B.back(), -1);
  EXPECT_EQ(r.P.back(), 2);
}

TEST(ClassicalInvariantsTest, TorusKnotsGivePqMinusPMinusQ) {
  for (int p = 2; p <= 20; ++p) {
    for (int q = 2; q <= 20; ++q) {
      if (gcd(p, q) != 1) continue;
      const KnotSpec k = validate({Framing::C, {{p, q}}});
      EXPECT_EQ(*classical_invariants(k).max_tb.value, p * q - p - q);
    }
  }
}
