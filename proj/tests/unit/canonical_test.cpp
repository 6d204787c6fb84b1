#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "arbor/canonical.hpp"
#include "arbor/error.hpp"
#include "arbor/families.hpp"
#include "arbor/prufer.hpp"
#include "arbor/random.hpp"
#include "oracles.hpp"

using namespace arbor;

namespace {

Tree relabel(const Tree& t, std::mt19937_64& eng) {
  std::vector<Vertex> perm(static_cast<std::size_t>(t.order()));
  std::iota(perm.begin(), perm.end(), 1);
  std::shuffle(perm.begin(), perm.end(), eng);
  std::vector<Edge> edges;
  for (auto [u, v] : t.edges()) edges.emplace_back(perm[u - 1], perm[v - 1]);
  return Tree::from_edges(t.order(), edges);
}

}  // namespace

TEST(Centroids, Examples) {
  EXPECT_EQ(centroids(path_tree(5)), (std::vector<Vertex>{3}));
  EXPECT_EQ(centroids(path_tree(4)), (std::vector<Vertex>{2, 3}));
  EXPECT_EQ(centroids(star_tree(6)), (std::vector<Vertex>{1}));
  EXPECT_EQ(centroids(path_tree(1)), (std::vector<Vertex>{1}));
}

TEST(CanonicalForm, InvariantUnderRelabeling) {
  std::mt19937_64 eng(12);
  for (std::uint64_t s = 0; s < 200; ++s) {
    const Tree t = sample_labeled_tree(40, s);
    EXPECT_EQ(canonical_form(t), canonical_form(relabel(t, eng)));
  }
}

TEST(CanonicalForm, SeparatesIsomorphismClasses) {
  for (Vertex n = 2; n <= 7; ++n) {
    std::vector<Tree> trees;
    enumerate_labeled_trees(n, [&](const Tree& t) {
      if (trees.size() < 60) trees.push_back(t);
    });
    for (std::size_t i = 0; i < trees.size(); ++i) {
      for (std::size_t j = i + 1; j < trees.size(); ++j) {
        EXPECT_EQ(canonical_form(trees[i]) == canonical_form(trees[j]),
                  oracle::isomorphic(trees[i], trees[j]));
      }
    }
  }
}

TEST(EnumerateUnlabeled, Counts) {
  for (Vertex n = 1; n <= 12; ++n) {
    EXPECT_EQ(enumerate_unlabeled_trees(n).size(), oracle::unlabeled_tree_count(n)) << "n=" << n;
  }
  EXPECT_THROW(enumerate_unlabeled_trees(17), Error);
  EXPECT_THROW(enumerate_unlabeled_trees(0), Error);
}

TEST(EnumerateUnlabeled, CoversEveryLabeledTree) {
  for (Vertex n = 2; n <= 7; ++n) {
    std::set<std::string> forms;
    for (const Tree& t : enumerate_unlabeled_trees(n)) forms.insert(canonical_form(t));
    enumerate_labeled_trees(n, [&](const Tree& t) { EXPECT_TRUE(forms.count(canonical_form(t))); });
  }
}
