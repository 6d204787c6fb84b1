#pragma once

#include <set>
#include <utility>
#include <vector>

#include "arbor/graph.hpp"

namespace arbor::detail {

/// A tree from which leaves are peeled one at a time and later restored in
/// reverse order. Degrees, leaf-neighbor counts and the pre-leaf set are kept
/// current so the recursive colorings can query them in O(log n).
class WorkingTree {
 public:
  explicit WorkingTree(const Tree& t);

  const Tree& tree() const noexcept { return *tree_; }
  Vertex order() const noexcept { return tree_->order(); }
  Vertex alive_count() const noexcept { return alive_count_; }

  bool alive(Vertex v) const { return alive_[v] != 0; }
  Vertex degree(Vertex v) const { return degree_[v]; }
  bool is_leaf(Vertex v) const { return alive_[v] && degree_[v] == 1; }
  bool is_pre_leaf(Vertex v) const { return pre_leaves_.count(v) != 0; }
  bool is_special(Vertex v) const { return is_pre_leaf(v) && degree_[v] == 2; }

  /// The sole alive neighbor of a leaf.
  Vertex leaf_neighbor(Vertex leaf) const { return neighbor_xor_[leaf]; }

  Vertex max_degree() const;
  /// Alive vertices of exactly degree d, ascending. Only cheap for d = max_degree().
  std::vector<Vertex> vertices_of_degree(Vertex d) const;

  const std::set<Vertex>& leaves() const noexcept { return leaves_; }
  const std::set<Vertex>& pre_leaves() const noexcept { return pre_leaves_; }

  /// Alive neighbors, ascending.
  std::vector<Vertex> neighbors(Vertex v) const;
  /// Smallest alive leaf adjacent to v other than `skip`, or 0.
  Vertex leaf_at(Vertex v, Vertex skip = 0) const;
  std::vector<Vertex> alive_vertices() const;

  /// v must be alive with degree <= 1.
  void remove(Vertex v);
  /// Undoes the most recent remove that has not been undone yet.
  void restore(Vertex v);

 private:
  void refresh(Vertex v);
  void set_degree(Vertex v, Vertex d);

  const Tree* tree_;
  Vertex alive_count_;
  std::vector<char> alive_;
  std::vector<Vertex> degree_;
  std::vector<Vertex> leaf_count_;
  std::vector<Vertex> neighbor_xor_;
  std::set<std::pair<Vertex, Vertex>> by_degree_;
  std::set<Vertex> leaves_;
  std::set<Vertex> pre_leaves_;
};

}  // namespace arbor::detail
