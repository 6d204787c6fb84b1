#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "arbor/balance.hpp"
#include "arbor/error.hpp"
#include "arbor/random.hpp"
#include "oracles.hpp"

using namespace arbor;

namespace {

DegreeSequence seq(std::vector<std::int64_t> v) { return DegreeSequence(std::move(v)); }

std::vector<std::int64_t> random_values(std::mt19937_64& eng, std::size_t len, std::int64_t hi) {
  std::vector<std::int64_t> v(len);
  for (auto& x : v) x = 1 + static_cast<std::int64_t>(eng() % static_cast<std::uint64_t>(hi));
  return v;
}

}  // namespace

TEST(DegreeSequence, Tallies) {
  const auto s = seq({1, 3, 12, 2, 1, 1, 4, 3});
  EXPECT_EQ(s.max(), 12);
  EXPECT_EQ(s.total(), 27);
  EXPECT_EQ(s.ones(), 3u);
  EXPECT_EQ(s.twos(), 1u);
  EXPECT_THROW(seq({1, -1}), Error);
}

TEST(BalanceExact, Examples) {
  const auto s = seq({1, 3, 12, 2, 1, 1, 4, 3});
  const auto r = balance_exact(s);
  EXPECT_EQ(r.F, 3);
  EXPECT_TRUE(r.witness.valid_for(s));
  EXPECT_EQ(r.witness.difference(), 3);
  EXPECT_EQ(balance_exact(seq({5, 5})).F, 0);
  EXPECT_EQ(balance_exact(seq({1, 2, 3, 4, 5, 6})).F, 1);
  EXPECT_EQ(balance_exact(seq({7})).F, 7);
  EXPECT_EQ(balance_exact(seq({0, 0, 0})).F, 0);
  EXPECT_THROW(balance_exact(seq({})), Error);
}

TEST(BalanceExact, MatchesSubsetOracle) {
  std::mt19937_64 eng(1);
  for (int iter = 0; iter < 3000; ++iter) {
    const std::size_t len = 1 + eng() % 14;
    const std::int64_t hi = iter % 3 == 0 ? 3 : 40;
    auto values = random_values(eng, len, hi);
    if (iter % 5 == 0) values[0] = 0;
    const auto s = seq(values);
    const auto r = balance_exact(s);
    ASSERT_EQ(r.F, oracle::balance(values)) << "iteration " << iter;
    ASSERT_TRUE(r.witness.valid_for(s));
    ASSERT_EQ(r.witness.difference(), r.F);
    ASSERT_EQ(r.witness.I.size(), (len + 1) / 2);
  }
}

TEST(BalanceExact, ParityMatchesTotal) {
  std::mt19937_64 eng(2);
  for (int iter = 0; iter < 500; ++iter) {
    const auto s = seq(random_values(eng, 1 + eng() % 30, 25));
    EXPECT_EQ(balance_exact(s).F % 2, s.total() % 2);
  }
  for (std::uint64_t i = 0; i < 100; ++i) {
    const Tree t = sample_labeled_tree(60, i);
    EXPECT_EQ(balance_exact(DegreeSequence(t.graph().degree_sequence())).F % 2, 0);
  }
}

TEST(BalanceExact, LargeTreeSequence) {
  const Tree t = sample_labeled_tree(5000, 9);
  const DegreeSequence s(t.graph().degree_sequence());
  const auto r = balance_exact(s);
  EXPECT_TRUE(r.witness.valid_for(s));
  EXPECT_EQ(r.F, 0);
}

TEST(GreedyPair, Examples) {
  const auto a = seq({1, 1, 2, 2});
  const auto p = greedy_pair_partition(a);
  EXPECT_EQ(p.difference(), 0);
  EXPECT_TRUE(p.valid_for(a));

  const auto b = seq({1, 3, 12, 2, 1, 1, 4, 3});
  const auto q = greedy_pair_partition(b);
  EXPECT_EQ(q.sum_I, 17);
  EXPECT_EQ(q.sum_J, 10);
  EXPECT_EQ(q.difference(), 7);
  EXPECT_TRUE(q.valid_for(b));

  const auto c = seq({2, 2, 2});
  const auto r = greedy_pair_partition(c);
  EXPECT_EQ(r.difference(), 2);
  EXPECT_TRUE(r.valid_for(c));
}

TEST(GreedyPair, BoundedByMaxAndAboveExact) {
  std::mt19937_64 eng(3);
  for (int iter = 0; iter < 5000; ++iter) {
    const auto s = seq(random_values(eng, 1 + eng() % 40, 50));
    const auto p = greedy_pair_partition(s);
    ASSERT_TRUE(p.valid_for(s));
    ASSERT_LE(p.difference(), s.max());
    ASSERT_LE(p.cardinality_gap(), 1u);
    ASSERT_LE(balance_exact(s).F, p.difference());
  }
}

TEST(OnesTwos, Examples) {
  const auto a = seq({1, 1, 1, 2, 2, 2, 3, 3});
  const auto p = ones_twos_partition(a);
  EXPECT_LE(p.difference(), 2);
  EXPECT_TRUE(p.valid_for(a));
  EXPECT_LE(balance_exact(a).F, 2);

  const auto b = seq({1, 1, 2, 2});
  EXPECT_EQ(ones_twos_partition(b).difference(), 0);
}

TEST(OnesTwos, HypothesisViolated) {
  try {
    ones_twos_partition(seq({1, 3, 12, 2, 1, 1, 4, 3}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kHypothesisViolated);
  }
}

TEST(OnesTwos, RandomTreesSatisfyingHypothesis) {
  int checked = 0;
  for (std::uint64_t i = 0; checked < 50 && i < 200; ++i) {
    const Tree t = sample_labeled_tree(200, derive_seed(77, i));
    const DegreeSequence s(t.graph().degree_sequence());
    if (static_cast<std::int64_t>(s.ones()) < s.max() ||
        static_cast<std::int64_t>(s.twos()) < s.max()) {
      continue;
    }
    ++checked;
    const auto p = ones_twos_partition(s);
    EXPECT_TRUE(p.valid_for(s));
    EXPECT_LE(p.difference(), 2);
    EXPECT_LE(balance_exact(s).F, p.difference());
  }
  EXPECT_EQ(checked, 50);
}

TEST(Partition, ValidForRejectsBrokenSplits) {
  const auto s = seq({1, 2, 3});
  Partition p{{1, 3}, {2}, 4, 2};
  EXPECT_TRUE(p.valid_for(s));
  p.sum_I = 5;
  EXPECT_FALSE(p.valid_for(s));
  EXPECT_FALSE((Partition{{1}, {2}, 1, 2}).valid_for(s));
  EXPECT_FALSE((Partition{{1, 2, 3}, {}, 6, 0}).valid_for(s));
  EXPECT_FALSE((Partition{{1, 1}, {2, 3}, 2, 5}).valid_for(s));
}
