#include "arbor/families.hpp"

#include <vector>

#include "arbor/error.hpp"

namespace arbor {

Tree path_tree(Vertex n) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(v, v + 1);
  return Tree::from_edges(n, edges);
}

Tree star_tree(Vertex n) {
  std::vector<Edge> edges;
  for (Vertex v = 2; v <= n; ++v) edges.emplace_back(1, v);
  return Tree::from_edges(n, edges);
}

Tree double_star_tree(Vertex p, Vertex q) {
  if (p < 0 || q < 0) throw Error(ErrorCode::kPreconditionViolated, "negative leaf count");
  std::vector<Edge> edges{{1, 2}};
  Vertex next = 3;
  for (Vertex i = 0; i < p; ++i) edges.emplace_back(1, next++);
  for (Vertex i = 0; i < q; ++i) edges.emplace_back(2, next++);
  return Tree::from_edges(next - 1, edges);
}

Tree spider_tree(std::span<const Vertex> legs) {
  std::vector<Edge> edges;
  Vertex next = 2;
  for (Vertex len : legs) {
    if (len < 1) throw Error(ErrorCode::kPreconditionViolated, "spider legs need length >= 1");
    Vertex prev = 1;
    for (Vertex i = 0; i < len; ++i) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
  }
  return Tree::from_edges(next - 1, edges);
}

Graph complete_graph(Vertex n) {
  std::vector<Edge> edges;
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = u + 1; v <= n; ++v) edges.emplace_back(u, v);
  }
  return Graph::from_edges(n, edges);
}

}  // namespace arbor
