#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace arbor {

/// Vertices are numbered 1..n throughout the library.
using Vertex = std::int32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Immutable finite simple graph on vertices 1..n.
///
/// Adjacency is stored in compressed rows with every neighbor list sorted, so
/// adjacency queries are a binary search and iteration order is deterministic.
class Graph {
 public:
  Graph() = default;

  /// Edgeless graph on n vertices.
  explicit Graph(Vertex n);

  /// Validates that the edge list is simple; throws NotATree-style reasons
  /// (self-loop, duplicate-edge, bad-vertex-id) wrapped in arbor::Error.
  static Graph from_edges(Vertex n, std::span<const Edge> edges);

  Vertex order() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return targets_.size() / 2; }

  bool contains(Vertex v) const noexcept { return v >= 1 && v <= n_; }
  void require_vertex(Vertex v) const;

  std::span<const Vertex> neighbors(Vertex v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  Vertex degree(Vertex v) const noexcept {
    return static_cast<Vertex>(offsets_[v + 1] - offsets_[v]);
  }
  bool adjacent(Vertex u, Vertex v) const;
  Vertex max_degree() const noexcept;

  /// Edges as (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  /// Degrees of vertices 1..n in vertex order.
  std::vector<std::int64_t> degree_sequence() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  Vertex n_ = 0;
  std::vector<std::size_t> offsets_ = {0, 0};
  std::vector<Vertex> targets_;
};

/// A connected acyclic Graph. Construction validates the invariant.
class Tree {
 public:
  /// Throws NotATree with the first detected reason.
  static Tree from_edges(Vertex n, std::span<const Edge> edges);
  static Tree from_graph(Graph g);

  const Graph& graph() const noexcept { return graph_; }
  operator const Graph&() const noexcept { return graph_; }  // NOLINT: trees are graphs

  Vertex order() const noexcept { return graph_.order(); }
  std::span<const Vertex> neighbors(Vertex v) const { return graph_.neighbors(v); }
  Vertex degree(Vertex v) const noexcept { return graph_.degree(v); }
  bool adjacent(Vertex u, Vertex v) const { return graph_.adjacent(u, v); }
  Vertex max_degree() const noexcept { return graph_.max_degree(); }
  std::vector<Edge> edges() const { return graph_.edges(); }

  friend bool operator==(const Tree&, const Tree&) = default;

 private:
  explicit Tree(Graph g) : graph_(std::move(g)) {}
  Graph graph_;
};

/// Same as Tree::from_edges.
Tree build_tree(std::span<const Edge> edges, Vertex n);

enum class VertexClass { kLeaf, kPreLeaf, kSpecialPreLeaf, kInternal };

const char* to_string(VertexClass c) noexcept;

/// Leaf: degree 1. Pre-leaf: non-leaf with at least deg-1 leaf neighbors
/// (so the middle of P3 counts). Special: a pre-leaf of degree 2.
VertexClass classify_vertex(const Tree& t, Vertex v);

inline bool is_pre_leaf(VertexClass c) noexcept {
  return c == VertexClass::kPreLeaf || c == VertexClass::kSpecialPreLeaf;
}

/// Sorted vertex ids of all pre-leaves (special ones included).
std::vector<Vertex> pre_leaves(const Tree& t);

/// Vertices strictly closer to u than to v, i.e. the component of t - v that
/// contains u. Sorted ascending. Throws NotAdjacent.
std::vector<Vertex> branch(const Tree& t, Vertex v, Vertex u);

/// True iff max degree <= 2.
bool is_string(const Tree& t) noexcept;

/// Induced subgraph on the vertices that were not removed, relabeled 1..m in
/// increasing order of original id.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_original;  // index local id, entry 0 unused
  std::vector<Vertex> to_local;     // index original id, 0 when removed
};

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> removed);

/// Adds component-joining edges to a forest until it is a tree.
///
/// Components are attached in ascending order of their minimum vertex. Each
/// join connects the minimum (degree, id) vertex of the tree built so far to
/// the minimum (degree, id) vertex of the next component. Throws
/// CapInfeasible if a join would push a degree above
/// max(degree_cap, max degree of f), and NotATree if f has a cycle.
Tree complete_forest_to_tree(const Graph& f, Vertex degree_cap);

}  // namespace arbor
