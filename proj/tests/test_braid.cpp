#include <gtest/gtest.h>

#include <map>

#include "garside/braid.hpp"
#include "support/oracle.hpp"

namespace garside {
namespace {

using oracle::brute_divides;

class SmallBraids : public ::testing::TestWithParam<int> {};

TEST_P(SmallBraids, DivisibilityMatchesCrossingCount) {
  BraidStructure g(GetParam());
  auto all = g.all_simples();
  for (const auto& a : all)
    for (const auto& b : all) EXPECT_EQ(g.left_divides(a, b), brute_divides(g, a, b));
}

TEST_P(SmallBraids, MeetAndJoinSatisfyUniversalProperty) {
  BraidStructure g(GetParam());
  auto all = g.all_simples();
  for (const auto& a : all) {
    for (const auto& b : all) {
      EXPECT_EQ(g.meet(a, b), oracle::brute_meet(g, a, b));
      EXPECT_EQ(g.join(a, b), oracle::brute_join(g, a, b));
    }
  }
}

TEST_P(SmallBraids, LatticeLaws) {
  BraidStructure g(GetParam());
  auto all = g.all_simples();
  for (const auto& a : all) {
    for (const auto& b : all) {
      auto m = g.meet(a, b);
      auto j = g.join(a, b);
      EXPECT_EQ(m, g.meet(b, a));
      EXPECT_EQ(j, g.join(b, a));
      EXPECT_EQ(g.meet(a, g.join(a, b)), a);
      EXPECT_EQ(g.join(a, g.meet(a, b)), a);
      EXPECT_TRUE(g.left_divides(m, a));
      EXPECT_TRUE(g.left_divides(a, j));
      // τ is a lattice automorphism.
      EXPECT_EQ(g.tau(m, 1), g.meet(g.tau(a, 1), g.tau(b, 1)));
      EXPECT_EQ(g.tau(j, 1), g.join(g.tau(a, 1), g.tau(b, 1)));
    }
  }
  if (GetParam() <= 3) {
    for (const auto& a : all)
      for (const auto& b : all)
        for (const auto& c : all) {
          EXPECT_EQ(g.meet(g.meet(a, b), c), g.meet(a, g.meet(b, c)));
          EXPECT_EQ(g.join(g.join(a, b), c), g.join(a, g.join(b, c)));
        }
  }
}

TEST_P(SmallBraids, ComplementsAndTau) {
  BraidStructure g(GetParam());
  const int n = g.strands();
  for (const auto& a : g.all_simples()) {
    EXPECT_EQ(g.product(a, g.right_complement(a)), g.delta());
    EXPECT_EQ(g.product(g.left_complement(a), a), g.delta());
    // τ(a) as Δ^{-1} a Δ equals the table map i ↦ n+1−a(n+1−i).
    auto conj = conjugate(g, from_simple(g, a), Braid{1, {}});
    EXPECT_EQ(conj, from_simple(g, g.tau(a, 1)));
    for (int i = 0; i < n; ++i) EXPECT_EQ(g.tau(a, 1)[i], n - 1 - a[n - 1 - i]);
    EXPECT_EQ(g.tau(g.tau(a, 1), 1), a);
  }
}

INSTANTIATE_TEST_SUITE_P(Exhaustive, SmallBraids, ::testing::Values(2, 3, 4));

TEST(BraidStructure, CountsAndDelta) {
  for (int n = 2; n <= 7; ++n) {
    BraidStructure g(n);
    EXPECT_EQ(g.delta_norm(), n * (n - 1) / 2);
    EXPECT_EQ(g.norm(g.delta()), g.delta_norm());
    EXPECT_EQ(static_cast<int>(g.atoms().size()), n - 1);
  }
  EXPECT_EQ(BraidStructure(4).all_simples().size(), 24U);
  EXPECT_THROW(BraidStructure(1), InputError);
  EXPECT_THROW(BraidStructure(65), InputError);
}

TEST(BraidStructure, MeetJoinExamples) {
  BraidStructure g(3);
  auto s1 = g.atom(1), s2 = g.atom(2);
  auto s12 = g.product(s1, s2), s21 = g.product(s2, s1);
  EXPECT_EQ(g.meet(s1, s2), g.identity());
  EXPECT_EQ(g.meet(s1, s12), s1);
  EXPECT_EQ(g.meet(s12, s21), g.identity());
  EXPECT_EQ(g.join(s1, s1), s1);
  EXPECT_EQ(g.join(s1, s2), g.delta());
  for (const auto& a : g.all_simples()) EXPECT_EQ(g.join(a, g.delta()), g.delta());
}

TEST(BraidStructure, ComplementExamples) {
  BraidStructure g(3);
  EXPECT_EQ(g.right_complement(g.delta()), g.identity());
  EXPECT_EQ(g.left_complement(g.delta()), g.identity());
  EXPECT_EQ(g.right_complement(g.identity()), g.delta());
  EXPECT_EQ(g.left_complement(g.identity()), g.delta());
  EXPECT_EQ(g.right_complement(g.atom(1)), g.product(g.atom(2), g.atom(1)));
}

TEST(BraidStructure, LargeMeetAgreesWithDivisibility) {
  // Beyond exhaustive range: meet divides both, and is maximal among sampled
  // common divisors.
  BraidStructure g(12);
  Rng rng(7);
  for (int t = 0; t < 300; ++t) {
    auto a = random_simple(rng, g), b = random_simple(rng, g);
    auto m = g.meet(a, b);
    auto j = g.join(a, b);
    ASSERT_TRUE(brute_divides(g, m, a));
    ASSERT_TRUE(brute_divides(g, m, b));
    ASSERT_TRUE(brute_divides(g, a, j));
    ASSERT_TRUE(brute_divides(g, b, j));
    // Any atom dividing both quotients would contradict maximality.
    for (const auto& at : g.atoms()) {
      auto c = g.product(m, at);
      ASSERT_FALSE(brute_divides(g, c, a) && brute_divides(g, c, b) && g.norm(c) == g.norm(m) + 1);
    }
  }
}

TEST(ParseWord, Examples) {
  BraidStructure g(3);
  EXPECT_EQ(parse_word(g, "1 2 1"), (Braid{1, {}}));
  EXPECT_EQ(parse_word(g, ""), Braid{});
  EXPECT_EQ(parse_word(g, "   "), Braid{});
  auto s21 = g.product(g.atom(2), g.atom(1));
  EXPECT_EQ(parse_word(g, "2 1 1"), (Braid{0, {s21, g.atom(1)}}));
  EXPECT_EQ(parse_word(g, "D"), (Braid{1, {}}));
  EXPECT_EQ(parse_word(g, "D^-1"), (Braid{-1, {}}));
  EXPECT_EQ(parse_word(g, "D^3 D^-3"), Braid{});
  EXPECT_EQ(parse_word(g, "1 -1"), Braid{});
  EXPECT_EQ(parse_word(g, "-2 2 1 -1"), Braid{});
}

TEST(ParseWord, RejectsBadInput) {
  BraidStructure g(3);
  EXPECT_THROW(parse_word(g, "3"), InputError);
  EXPECT_THROW(parse_word(g, "-3"), InputError);
  EXPECT_THROW(parse_word(g, "0"), InputError);
  EXPECT_THROW(parse_word(g, "x"), InputError);
  EXPECT_THROW(parse_word(g, "1a"), InputError);
  EXPECT_THROW(parse_word(g, "D^"), InputError);
  EXPECT_THROW(parse_word(g, "D^x"), InputError);
}

TEST(ParseWord, FormatRoundTrips) {
  Rng rng(11);
  for (int n : {3, 5, 8}) {
    BraidStructure g(n);
    for (int t = 0; t < 200; ++t) {
      Braid x = oracle::random_word(g, rng, 12);
      EXPECT_EQ(parse_word(g, format_word(g, x)), x);
    }
  }
  BraidStructure g3(3);
  EXPECT_EQ(format_word(g3, Braid{1, {}}), "D");
  EXPECT_EQ(format_word(g3, Braid{}), "");
}

TEST(RandomSimple, UniformOverNonIdentity) {
  BraidStructure g(3);
  Rng rng(2024);
  std::map<PermSimple, int> counts;
  const int draws = 10000;
  for (int i = 0; i < draws; ++i) {
    auto s = random_simple(rng, g);
    ASSERT_FALSE(g.is_identity(s));
    ++counts[s];
  }
  ASSERT_EQ(counts.size(), 5U);
  for (const auto& [s, c] : counts) EXPECT_NEAR(static_cast<double>(c) / draws, 0.2, 0.02);
}

TEST(RandomSimple, SeedDeterminism) {
  BraidStructure g(6);
  Rng a(99), b(99);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(random_simple(a, g), random_simple(b, g));
}

}  // namespace
}  // namespace garside
