#include "arbor/detail/working_tree.hpp"

#include "arbor/error.hpp"

namespace arbor::detail {

WorkingTree::WorkingTree(const Tree& t)
    : tree_(&t),
      alive_count_(t.order()),
      alive_(static_cast<std::size_t>(t.order()) + 1, 1),
      degree_(static_cast<std::size_t>(t.order()) + 1, 0),
      leaf_count_(static_cast<std::size_t>(t.order()) + 1, 0),
      neighbor_xor_(static_cast<std::size_t>(t.order()) + 1, 0) {
  alive_[0] = 0;
  const Vertex n = t.order();
  for (Vertex v = 1; v <= n; ++v) {
    degree_[v] = t.degree(v);
    by_degree_.emplace(degree_[v], v);
    for (Vertex u : t.neighbors(v)) {
      neighbor_xor_[v] ^= u;
      leaf_count_[v] += (t.degree(u) == 1);
    }
    if (degree_[v] == 1) leaves_.insert(v);
  }
  for (Vertex v = 1; v <= n; ++v) refresh(v);
}

Vertex WorkingTree::max_degree() const {
  return by_degree_.empty() ? 0 : by_degree_.rbegin()->first;
}

std::vector<Vertex> WorkingTree::vertices_of_degree(Vertex d) const {
  std::vector<Vertex> out;
  for (auto it = by_degree_.lower_bound({d, 0}); it != by_degree_.end() && it->first == d; ++it) {
    out.push_back(it->second);
  }
  return out;
}

std::vector<Vertex> WorkingTree::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  for (Vertex u : tree_->neighbors(v)) {
    if (alive_[u]) out.push_back(u);
  }
  return out;
}

Vertex WorkingTree::leaf_at(Vertex v, Vertex skip) const {
  for (Vertex u : tree_->neighbors(v)) {
    if (u != skip && is_leaf(u)) return u;
  }
  return 0;
}

std::vector<Vertex> WorkingTree::alive_vertices() const {
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(alive_count_));
  for (Vertex v = 1; v <= order(); ++v) {
    if (alive_[v]) out.push_back(v);
  }
  return out;
}

void WorkingTree::set_degree(Vertex v, Vertex d) {
  by_degree_.erase({degree_[v], v});
  degree_[v] = d;
  if (alive_[v]) by_degree_.emplace(d, v);
}

void WorkingTree::refresh(Vertex v) {
  if (alive_[v] && degree_[v] >= 2 && leaf_count_[v] >= degree_[v] - 1) {
    pre_leaves_.insert(v);
  } else {
    pre_leaves_.erase(v);
  }
}

void WorkingTree::remove(Vertex v) {
  if (!alive_[v] || degree_[v] > 1) {
    throw Error(ErrorCode::kInvariantViolation, "only alive leaves can be removed");
  }
  const bool had_neighbor = degree_[v] == 1;
  const Vertex x = neighbor_xor_[v];
  by_degree_.erase({degree_[v], v});
  alive_[v] = 0;
  --alive_count_;
  leaves_.erase(v);
  pre_leaves_.erase(v);
  if (!had_neighbor) return;

  neighbor_xor_[x] ^= v;
  --leaf_count_[x];
  set_degree(x, degree_[x] - 1);
  if (degree_[x] == 1) {
    leaves_.insert(x);
    const Vertex y = neighbor_xor_[x];
    ++leaf_count_[y];
    refresh(y);
  } else if (degree_[x] == 0) {
    leaves_.erase(x);
    leaf_count_[x] = 0;
  }
  refresh(x);
}

void WorkingTree::restore(Vertex v) {
  if (alive_[v]) throw Error(ErrorCode::kInvariantViolation, "vertex is already alive");
  alive_[v] = 1;
  ++alive_count_;
  if (alive_count_ == 1) {
    by_degree_.emplace(degree_[v], v);
    return;
  }
  const Vertex x = neighbor_xor_[v];
  if (degree_[x] == 1) {
    leaves_.erase(x);
    const Vertex y = neighbor_xor_[x];
    --leaf_count_[y];
    refresh(y);
    leaf_count_[v] = 0;
  } else if (degree_[x] == 0) {
    leaf_count_[v] = 1;
  } else {
    leaf_count_[v] = 0;
  }
  neighbor_xor_[x] ^= v;
  ++leaf_count_[x];
  set_degree(x, degree_[x] + 1);
  if (degree_[x] == 1) leaves_.insert(x);
  by_degree_.emplace(degree_[v], v);
  leaves_.insert(v);
  refresh(x);
  refresh(v);
}

}  // namespace arbor::detail
