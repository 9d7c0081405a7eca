#include <gtest/gtest.h>

#include <set>

#include "garside/braid.hpp"
#include "garside/cycling.hpp"
#include "support/oracle.hpp"

namespace garside {
namespace {

TEST(CycQ, MatchesConjugationByPrefix) {
  Rng rng(41);
  for (int n : {3, 4, 5}) {
    BraidStructure g(n);
    for (int t = 0; t < 150; ++t) {
      Braid x = oracle::random_word(g, rng, 10);
      for (std::int64_t q = x.inf() - 1; q <= x.sup() + 1; ++q) {
        auto step = cyc_q(g, x, q);
        Braid c = oracle::meet(g, x, Braid{q, {}});
        EXPECT_EQ(step.conjugator, c);
        EXPECT_EQ(step.result, conjugate(g, x, c));
      }
    }
  }
}

TEST(CycQ, ClassicalCyclingAndDecycling) {
  Rng rng(42);
  BraidStructure g(4);
  for (int t = 0; t < 200; ++t) {
    Braid x = oracle::random_word(g, rng, 9);
    if (x.len() == 0) {
      EXPECT_EQ(cyc(g, x), x);
      continue;
    }
    // cyc: move the first factor, conjugated by Δ^{inf}, to the end.
    Braid first = from_simple(g, g.tau(x.factors.front(), -x.inf()));
    EXPECT_EQ(cyc(g, x), conjugate(g, x, first));
    // dec: move the last factor to the front.
    Braid last = from_simple(g, x.factors.back());
    EXPECT_EQ(dec(g, x), conjugate(g, x, invert(g, last)));
  }
}

TEST(CycPQ, FirstOrderAgreesWithCycQ) {
  Rng rng(43);
  BraidStructure g(4);
  for (int t = 0; t < 100; ++t) {
    Braid x = oracle::random_word(g, rng, 8);
    for (std::int64_t q = x.inf(); q <= x.sup(); ++q) {
      auto a = cyc_pq(g, x, 1, q);
      auto b = cyc_q(g, x, q);
      EXPECT_EQ(a.result, b.result);
      EXPECT_EQ(a.conjugator, b.conjugator);
    }
  }
}

TEST(Orbit, RecurrentRepresentativeAndWitness) {
  Rng rng(44);
  for (int n : {3, 4, 5}) {
    BraidStructure g(n);
    for (int t = 0; t < 100; ++t) {
      Braid x = oracle::random_word(g, rng, 10);
      for (std::int64_t q = x.inf() + 1; q < x.sup(); ++q) {
        auto rec = recurrent_representative(g, x, q);
        EXPECT_EQ(rec.elements.front(), x);
        EXPECT_TRUE(oracle::recurrent_at(g, rec.recurrent(), q));
        EXPECT_EQ(conjugate(g, x, witness_to_cycle(g, rec)), rec.recurrent());
        EXPECT_EQ(in_G_q(g, x, q), oracle::recurrent_at(g, x, q));
        // Closing conjugator returns to the entry point.
        auto last = cyc_q(g, rec.elements.back(), q);
        EXPECT_EQ(last.result, rec.recurrent());
      }
    }
  }
}

TEST(CStar, RepresentativeLiesInBruteForceSet) {
  Rng rng(45);
  for (int n : {3, 4}) {
    BraidStructure g(n);
    for (int t = 0; t < 40; ++t) {
      Braid x = oracle::random_word(g, rng, n == 3 ? 8 : 6);
      auto rep = cstar_representative(g, x);
      EXPECT_EQ(conjugate(g, x, rep.witness), rep.element);
      EXPECT_TRUE(is_everywhere_recurrent(g, rep.element));
      auto brute = oracle::brute_summits(g, x);
      EXPECT_TRUE(brute.star.contains(rep.element));
    }
  }
}

TEST(CStar, RepresentativeIsEverywhereRecurrentForLargerBraids) {
  Rng rng(46);
  BraidStructure g(7);
  for (int t = 0; t < 30; ++t) {
    Braid x = oracle::random_word(g, rng, 30);
    auto rep = cstar_representative(g, x);
    EXPECT_EQ(conjugate(g, x, rep.witness), rep.element);
    for (std::int64_t q = rep.element.inf() + 1; q < rep.element.sup(); ++q)
      EXPECT_TRUE(oracle::recurrent_at(g, rep.element, q));
  }
}

TEST(Trajectory, ClosedAndWitnessed) {
  Rng rng(47);
  for (int n : {3, 4, 5}) {
    BraidStructure g(n);
    for (int t = 0; t < 40; ++t) {
      Braid x = cstar_representative(g, oracle::random_word(g, rng, 10)).element;
      Braid base_w = from_simple(g, random_simple(rng, g));
      Braid base = conjugate(g, x, invert(g, base_w));
      auto tr = trajectory(g, x, base_w);
      std::set<Braid> members(tr.members.begin(), tr.members.end());
      EXPECT_EQ(members.size(), tr.size());
      EXPECT_TRUE(std::is_sorted(tr.members.begin(), tr.members.end()));
      EXPECT_TRUE(members.contains(x));
      EXPECT_TRUE(members.contains(tau_pow(g, x, 1)));
      for (std::size_t i = 0; i < tr.size(); ++i) {
        EXPECT_EQ(conjugate(g, base, tr.witnesses[i]), tr.members[i]);
        const Braid& y = tr.members[i];
        for (std::int64_t q = y.inf() + 1; q < y.sup(); ++q) EXPECT_TRUE(members.contains(cyc_q(g, y, q).result));
      }
    }
  }
}

TEST(Trajectory, RejectsNonRecurrentInput) {
  Rng rng(48);
  BraidStructure g(4);
  int rejected = 0;
  for (int t = 0; t < 200; ++t) {
    Braid x = oracle::random_word(g, rng, 8);
    if (is_everywhere_recurrent(g, x)) {
      EXPECT_NO_THROW(trajectory(g, x));
    } else {
      EXPECT_THROW(trajectory(g, x), NotRecurrentError);
      ++rejected;
    }
  }
  EXPECT_GT(rejected, 0);
}

TEST(CmnStar, RepresentativeIsRecurrentForEveryOrder) {
  Rng rng(49);
  BraidStructure g(4);
  for (int t = 0; t < 30; ++t) {
    Braid x = oracle::random_word(g, rng, 8);
    auto rep = cmn_star_representative(g, x, 1, 2);
    EXPECT_EQ(conjugate(g, x, rep.witness), rep.element);
    for (std::int64_t p : {1, 2}) {
      Braid xp = power(g, rep.element, p);
      for (std::int64_t q = xp.inf() + 1; q < xp.sup(); ++q) {
        auto rec = iterate_to_recurrence(g, rep.element, [&](const Braid& y) { return cyc_pq(g, y, p, q); });
        EXPECT_TRUE(rec.starts_on_cycle());
      }
    }
  }
  EXPECT_THROW(cmn_star_representative(g, Braid{}, 2, 1), std::invalid_argument);
}

}  // namespace
}  // namespace garside
