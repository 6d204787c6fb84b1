#include "arbor/canonical.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "arbor/error.hpp"

namespace arbor {
namespace {

std::string encode_rooted(const Tree& t, Vertex root) {
  const auto size = static_cast<std::size_t>(t.order()) + 1;
  std::vector<Vertex> parent(size, 0);
  std::vector<Vertex> order{root};
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (Vertex u : t.neighbors(order[head])) {
      if (u != parent[order[head]]) {
        parent[u] = order[head];
        order.push_back(u);
      }
    }
  }
  std::vector<std::string> code(size);
  std::vector<std::vector<std::string>> kids(size);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Vertex v = *it;
    std::sort(kids[v].begin(), kids[v].end());
    std::string s = "(";
    for (auto& k : kids[v]) s += k;
    s += ')';
    kids[v].clear();
    if (v == root) return s;
    kids[parent[v]].push_back(std::move(s));
  }
  return "()";
}

}  // namespace

std::vector<Vertex> centroids(const Tree& t) {
  const Vertex n = t.order();
  if (n == 1) return {1};
  const auto size = static_cast<std::size_t>(n) + 1;
  std::vector<Vertex> parent(size, 0);
  std::vector<Vertex> order{1};
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (Vertex u : t.neighbors(order[head])) {
      if (u != parent[order[head]]) {
        parent[u] = order[head];
        order.push_back(u);
      }
    }
  }
  std::vector<Vertex> sub(size, 1);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (parent[*it] != 0) sub[parent[*it]] += sub[*it];
  }
  std::vector<Vertex> out;
  Vertex best = n;
  for (Vertex v = 1; v <= n; ++v) {
    Vertex largest = n - sub[v];
    for (Vertex u : t.neighbors(v)) {
      if (u != parent[v]) largest = std::max(largest, sub[u]);
    }
    if (largest < best) {
      best = largest;
      out.assign(1, v);
    } else if (largest == best) {
      out.push_back(v);
    }
  }
  return out;
}

std::string canonical_form(const Tree& t) {
  std::string best;
  for (Vertex c : centroids(t)) {
    std::string s = encode_rooted(t, c);
    if (best.empty() || s < best) best = std::move(s);
  }
  return best;
}

std::vector<Tree> enumerate_unlabeled_trees(Vertex n, Vertex max_n) {
  if (n < 1) throw Error(ErrorCode::kPreconditionViolated, "n must be positive");
  if (n > max_n) {
    throw Error(ErrorCode::kTooLarge, "unlabeled enumeration limited to n <= " + std::to_string(max_n));
  }
  std::vector<Tree> level{Tree::from_edges(1, {})};
  for (Vertex m = 2; m <= n; ++m) {
    std::vector<Tree> next;
    std::unordered_set<std::string> seen;
    for (const Tree& t : level) {
      std::vector<Edge> edges = t.edges();
      for (Vertex v = 1; v < m; ++v) {
        edges.emplace_back(v, m);
        Tree grown = Tree::from_edges(m, edges);
        edges.pop_back();
        if (seen.insert(canonical_form(grown)).second) next.push_back(std::move(grown));
      }
    }
    level = std::move(next);
  }
  return level;
}

}  // namespace arbor
