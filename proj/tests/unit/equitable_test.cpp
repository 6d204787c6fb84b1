#include <gtest/gtest.h>

#include <algorithm>

#include "arbor/canonical.hpp"
#include "arbor/error.hpp"
#include "arbor/equitable.hpp"
#include "arbor/families.hpp"
#include "arbor/prufer.hpp"
#include "arbor/random.hpp"
#include "oracles.hpp"

using namespace arbor;

namespace {

KColoring make(int k, std::vector<int> colors) {
  colors.insert(colors.begin(), 0);
  return KColoring(k, std::move(colors));
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kInvariantViolation;
}

void expect_equitable(const Tree& t, const KColoring& c, int k) {
  ASSERT_TRUE(oracle::strongly_balanced(t, k, c.assignment()));
  const Vertex n = t.order();
  std::vector<Vertex> sizes = c.class_sizes();
  std::sort(sizes.begin(), sizes.end());
  const Vertex q = n / k, r = n % k;
  for (int i = 0; i < k; ++i) EXPECT_EQ(sizes[i], i < k - r ? q : q + 1);
}

}  // namespace

TEST(VerifyStrongK, Examples) {
  auto cert = verify_strong_k(path_tree(9), make(3, {1, 2, 3, 1, 2, 3, 1, 2, 3}));
  EXPECT_TRUE(cert.valid);
  EXPECT_EQ(cert.class_sizes, (std::vector<Vertex>{3, 3, 3}));
  cert = verify_strong_k(path_tree(3), make(3, {1, 1, 2}));
  EXPECT_FALSE(cert.valid);
  EXPECT_EQ(cert.mono_edges[0], 1);
  cert = verify_strong_k(path_tree(3), make(2, {1, 2, 1}));
  EXPECT_TRUE(cert.valid);
  EXPECT_EQ(cert.class_sizes, (std::vector<Vertex>{2, 1}));
}

TEST(Equitable3, PathAndStar) {
  const Construction c = equitable3(path_tree(9));
  EXPECT_EQ(c.coloring.class_sizes(), (std::vector<Vertex>{3, 3, 3}));
  EXPECT_EQ(c.trace, (std::vector<std::string>{"string"}));
  EXPECT_EQ(code_of([] { equitable3(star_tree(7)); }), ErrorCode::kDegreeTooHigh);
}

TEST(Equitable3, ConstraintPreconditions) {
  const Tree t = path_tree(9);
  EXPECT_EQ(code_of([&] { equitable3(t, VertexPair{2, 2}); }), ErrorCode::kPreconditionViolated);
  EXPECT_EQ(code_of([&] { equitable3(t, VertexPair{2, 3}); }), ErrorCode::kPreconditionViolated);
  EXPECT_EQ(code_of([&] { equitable3(t, VertexPair{2, 10}); }), ErrorCode::kPreconditionViolated);
  EXPECT_EQ(code_of([] { equitable3(path_tree(1), VertexPair{1, 2}); }),
            ErrorCode::kNoTwoPreLeaves);
}

TEST(Equitable3, TinyTrees) {
  EXPECT_EQ(equitable3(path_tree(1)).coloring.class_sizes(), (std::vector<Vertex>{1, 0, 0}));
  const Tree p6 = path_tree(6);
  const Construction c = equitable3(p6, VertexPair{2, 5});
  expect_equitable(p6, c.coloring, 3);
  EXPECT_NE(c.coloring[2], c.coloring[5]);
}

TEST(Equitable3, AllUnlabeledTreesUpToTen) {
  for (Vertex n = 1; n <= 10; ++n) {
    for (const Tree& t : enumerate_unlabeled_trees(n)) {
      if (3 * t.max_degree() > n) continue;
      const Construction c = equitable3(t);
      expect_equitable(t, c.coloring, 3);
      const auto pre = pre_leaves(t);
      for (std::size_t i = 0; i < pre.size(); ++i) {
        for (std::size_t j = i + 1; j < pre.size(); ++j) {
          const Construction d = equitable3(t, VertexPair{pre[i], pre[j]});
          expect_equitable(t, d.coloring, 3);
          EXPECT_NE(d.coloring[pre[i]], d.coloring[pre[j]]);
        }
      }
    }
  }
}

TEST(Equitable3, RandomLargeTrees) {
  int done = 0;
  for (std::uint64_t i = 0; done < 200; ++i) {
    const Tree t = sample_labeled_tree(300 + static_cast<Vertex>(i % 3), derive_seed(5, i));
    if (3 * t.max_degree() > t.order()) continue;
    ++done;
    const Construction c = equitable3(t);
    expect_equitable(t, c.coloring, 3);
    EXPECT_LE(c.trace.size(), static_cast<std::size_t>(t.order()));
  }
}

TEST(Equitable3, DeepRecursionOnLongCaterpillar) {
  // Spine of 30000 vertices with one leaf on every other spine vertex.
  std::vector<Edge> edges;
  const Vertex spine = 30000;
  for (Vertex v = 1; v < spine; ++v) edges.emplace_back(v, v + 1);
  Vertex next = spine + 1;
  for (Vertex v = 1; v <= spine; v += 2) edges.emplace_back(v, next++);
  const Tree t = Tree::from_edges(next - 1, edges);
  expect_equitable(t, equitable3(t).coloring, 3);
}

TEST(TwoHub, DoubleStarCenters) {
  for (auto [p, q] : std::vector<std::pair<Vertex, Vertex>>{{2, 2}, {3, 3}, {3, 4}, {4, 4}}) {
    const Tree t = double_star_tree(p, q);
    const Construction c = two_hub_coloring(t, 1, 2, 1, 2);
    expect_equitable(t, c.coloring, 3);
    EXPECT_NE(c.coloring[1], c.coloring[2]);
    EXPECT_TRUE(brute_force_equitable(t, 3).has_value());
  }
}

TEST(TwoHub, HShape) {
  const Tree h = double_star_tree(2, 2);
  const Construction c = two_hub_coloring(h, 1, 2, 1, 2);
  EXPECT_EQ(c.coloring.class_sizes(), (std::vector<Vertex>{2, 2, 2}));
}

TEST(TwoHub, Preconditions) {
  const Tree t = double_star_tree(3, 3);
  EXPECT_EQ(code_of([&] { two_hub_coloring(t, 1, 1, 1, 2); }), ErrorCode::kPreconditionViolated);
  EXPECT_EQ(code_of([&] { two_hub_coloring(t, 1, 3, 1, 2); }), ErrorCode::kPreconditionViolated);
  EXPECT_EQ(code_of([&] { two_hub_coloring(t, 1, 2, 1, 4); }), ErrorCode::kPreconditionViolated);
}

TEST(TwoHub, AllValidInstancesUpToNine) {
  for (Vertex n = 6; n <= 9; ++n) {
    for (const Tree& t : enumerate_unlabeled_trees(n)) {
      if (3 * t.max_degree() > n) continue;
      std::vector<Vertex> hubs;
      for (Vertex v = 1; v <= n; ++v) {
        if (3 * t.degree(v) >= n) hubs.push_back(v);
      }
      const auto pre = pre_leaves(t);
      for (std::size_t a = 0; a < hubs.size(); ++a) {
        for (std::size_t b = a + 1; b < hubs.size(); ++b) {
          for (std::size_t i = 0; i < pre.size(); ++i) {
            for (std::size_t j = i + 1; j < pre.size(); ++j) {
              const Construction c = two_hub_coloring(t, hubs[a], hubs[b], pre[i], pre[j]);
              expect_equitable(t, c.coloring, 3);
              EXPECT_NE(c.coloring[hubs[a]], c.coloring[hubs[b]]);
              EXPECT_NE(c.coloring[pre[i]], c.coloring[pre[j]]);
            }
          }
        }
      }
    }
  }
}

TEST(EquitableK, PathTenFiveColors) {
  const Construction c = equitable_k(path_tree(10), 5);
  EXPECT_EQ(c.coloring.class_sizes(), (std::vector<Vertex>{2, 2, 2, 2, 2}));
  EXPECT_TRUE(verify_strong_k(path_tree(10), c.coloring).valid);
}

TEST(EquitableK, DelegatesForThree) {
  const Tree t = sample_labeled_tree(60, 3);
  if (3 * t.max_degree() <= 60) {
    EXPECT_EQ(equitable_k(t, 3).coloring, equitable3(t).coloring);
  }
  EXPECT_EQ(code_of([] { equitable_k(path_tree(5), 2); }), ErrorCode::kPreconditionViolated);
  EXPECT_EQ(code_of([] { equitable_k(star_tree(12), 4); }), ErrorCode::kDegreeTooHigh);
}

TEST(EquitableK, AllTwelveVertexTreesWithFourColors) {
  for (const Tree& t : enumerate_unlabeled_trees(12)) {
    if (t.max_degree() > 3) continue;
    const Construction c = equitable_k(t, 4);
    expect_equitable(t, c.coloring, 4);
    EXPECT_EQ(c.trace.front().rfind("reduce-4", 0), 0u);
  }
}

TEST(EquitableK, RandomTreesManyK) {
  for (int k = 4; k <= 8; ++k) {
    int done = 0;
    for (std::uint64_t i = 0; done < 40; ++i) {
      const Tree t = sample_labeled_tree(160 + static_cast<Vertex>(i % 7), derive_seed(k, i));
      if (static_cast<std::int64_t>(t.max_degree()) * k > t.order()) continue;
      ++done;
      expect_equitable(t, equitable_k(t, k).coloring, k);
    }
  }
}

TEST(BruteForceEquitable, Examples) {
  EXPECT_TRUE(brute_force_equitable(path_tree(3), 3).has_value());
  EXPECT_FALSE(brute_force_equitable(star_tree(7), 3).has_value());
  for (int k = 1; k <= 4; ++k) EXPECT_TRUE(brute_force_equitable(path_tree(1), k).has_value());
  EXPECT_EQ(code_of([] { brute_force_equitable(path_tree(13), 3); }), ErrorCode::kTooLarge);
}

TEST(BruteForceEquitable, WitnessesVerify) {
  for (Vertex n = 2; n <= 9; ++n) {
    for (const Tree& t : enumerate_unlabeled_trees(n)) {
      for (int k = 2; k <= 4; ++k) {
        if (auto c = brute_force_equitable(t, k)) {
          EXPECT_TRUE(oracle::strongly_balanced(t, k, c->assignment()));
        }
      }
    }
  }
}

TEST(Construction, FallbackCount) {
  Construction c;
  c.trace = {"case-1", "pair-c1:fallback", "case-A:fallback", "string"};
  EXPECT_EQ(c.fallback_count(), 2u);
}
