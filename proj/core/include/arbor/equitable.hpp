#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "arbor/coloring.hpp"
#include "arbor/graph.hpp"

namespace arbor {

/// Independent re-check of a k-coloring against the strong balance
/// conditions: proper, and class sizes within one of each other.
struct EquitableCertificate {
  KColoring coloring;
  std::vector<Vertex> class_sizes;
  std::vector<std::int64_t> mono_edges;
  std::vector<std::string> trace;
  bool valid = false;
};

/// Throws kPartialColoring when c is not total.
EquitableCertificate verify_strong_k(const Graph& g, const KColoring& c);

/// A constructed coloring together with the recursion steps that built it.
///
/// Trace labels, one per step, outermost first:
///   case-1, case-2            peel one leaf while n is not a multiple of 3
///   case-A .. case-F          the n = 3k step that was taken
///   case-A-cherry             case A when no third leaf exists: drop a
///                             degree-3 pre-leaf together with its two leaves
///   pair-c1, pair-c2          two-hub step removing one leaf; ":swap" marks
///                             the extension that relocated a leaf's color
///   pair-terminal             two-hub shape colored directly
///   string                    path colored directly
///   base-exact                small residual tree solved by exact search
///   reduce-K                  one color-K layer of equitable_k
///                             (":exact-mis" when greedy selection fell short)
/// A ":fallback" suffix marks a step whose extension failed its local check
/// and was replaced by an exact solve of that subtree.
struct Construction {
  KColoring coloring;
  std::vector<std::string> trace;

  std::size_t fallback_count() const;
};

using VertexPair = std::pair<Vertex, Vertex>;

/// Strongly 3-balanced coloring of a tree with max degree <= n/3. With a
/// constraint (p, q) of distinct pre-leaves, additionally c(p) != c(q).
///
/// Throws kDegreeTooHigh when 3 * max_degree > n, kNoTwoPreLeaves when a
/// constraint is given but the tree has fewer than two pre-leaves, and
/// kPreconditionViolated when the given pair is not two distinct pre-leaves.
Construction equitable3(const Tree& t, std::optional<VertexPair> constraint = std::nullopt);

/// Strongly 3-balanced coloring with c(u) != c(v) and c(p) != c(q), for
/// distinct u, v of degree >= n/3 and distinct pre-leaves p, q.
/// Throws kPreconditionViolated otherwise.
Construction two_hub_coloring(const Tree& t, Vertex u, Vertex v, Vertex p, Vertex q);

/// Strongly k-balanced coloring (k >= 3) of a tree with max degree <= n/k,
/// built by peeling one color class of pairwise non-adjacent vertices of
/// degree <= 2 per level down to three colors.
/// Throws kDegreeTooHigh, kIndependentSetNotFound, kPreconditionViolated.
Construction equitable_k(const Tree& t, int k);

/// Backtracking search for a strongly k-balanced coloring with proper-color,
/// class-capacity and color-symmetry pruning. Throws kTooLarge if n > max_n.
std::optional<KColoring> brute_force_equitable(const Graph& g, int k, Vertex max_n = 12);

}  // namespace arbor
