#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "arbor/graph.hpp"

namespace arbor {

/// Map from vertices 1..n to colors 1..k; 0 marks an uncolored vertex.
class KColoring {
 public:
  KColoring() = default;
  KColoring(Vertex n, int k);
  /// assignment[v] for v = 1..n; assignment[0] is ignored.
  KColoring(int k, std::vector<int> assignment);

  int k() const noexcept { return k_; }
  Vertex order() const noexcept { return static_cast<Vertex>(assignment_.size()) - 1; }

  int operator[](Vertex v) const { return assignment_[static_cast<std::size_t>(v)]; }
  void set(Vertex v, int color);

  bool total() const noexcept;
  /// Sizes of classes 1..k (index 0 is class 1). Uncolored vertices are skipped.
  std::vector<Vertex> class_sizes() const;
  const std::vector<int>& assignment() const noexcept { return assignment_; }

  friend bool operator==(const KColoring&, const KColoring&) = default;

 private:
  int k_ = 0;
  std::vector<int> assignment_{0};
};

/// Class sizes and per-color monochromatic edge counts of a total coloring.
struct ColorTally {
  std::vector<Vertex> class_sizes;
  std::vector<std::int64_t> mono_edges;
  std::int64_t cross_edges = 0;

  /// Pairwise class-size and mono-edge differences are all <= 1.
  bool k_balanced() const noexcept;
  /// No mono edges and class sizes within 1.
  bool strongly_balanced() const noexcept;
};

/// Throws kPartialColoring if c is not total on g, kPreconditionViolated if
/// the orders differ or a color lies outside 1..k.
ColorTally tally(const Graph& g, const KColoring& c);

struct BalanceReport {
  Vertex v1 = 0;
  Vertex v2 = 0;
  std::int64_t e1 = 0;
  std::int64_t e2 = 0;
  std::int64_t cross = 0;
  bool balanced = false;
};

/// Two-color tallies. Requires c.k() == 2.
BalanceReport verify_balanced(const Graph& g, const KColoring& c);

/// Balanced 2-coloring from the degree sequence alone: color 1 on the I side
/// and color 2 on the J side of an optimal split, present iff that split has
/// difference <= 2.
std::optional<KColoring> is_balanced_graph(const Graph& g);

/// Exhaustive search over all 2^n bipartitions. Throws kTooLarge if n > max_n.
bool brute_force_balanced(const Graph& g, Vertex max_n = 24);

/// Backtracking search for a k-balanced coloring, pruned by class-size
/// feasibility, monochromatic-edge reachability and color symmetry.
/// Throws kTooLarge if n > max_n.
std::optional<KColoring> k_balanced_brute(const Graph& g, int k, Vertex max_n = 15);

}  // namespace arbor
