#include "arbor/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "arbor/error.hpp"

namespace arbor {
namespace {

std::string edge_text(Edge e) {
  return "(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")";
}

// Union-find over 1..n, used for cycle/connectivity detection.
class DisjointSets {
 public:
  explicit DisjointSets(Vertex n) : parent_(static_cast<std::size_t>(n) + 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  Vertex find(Vertex v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }
  bool unite(Vertex a, Vertex b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a < b) std::swap(a, b);
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<Vertex> parent_;
};

}  // namespace

Graph::Graph(Vertex n) : n_(n), offsets_(static_cast<std::size_t>(n) + 2, 0) {
  if (n < 0) throw Error(ErrorCode::kBadVertex, "negative vertex count");
}

Graph Graph::from_edges(Vertex n, std::span<const Edge> edges) {
  Graph g(n);
  for (const Edge& e : edges) {
    if (!g.contains(e.first) || !g.contains(e.second)) {
      throw NotATree(NotATreeReason::kBadVertexId, edge_text(e) + " with n=" + std::to_string(n));
    }
    if (e.first == e.second) throw NotATree(NotATreeReason::kSelfLoop, edge_text(e));
  }
  std::vector<std::size_t> degree(static_cast<std::size_t>(n) + 2, 0);
  for (const Edge& e : edges) {
    ++degree[e.first];
    ++degree[e.second];
  }
  for (Vertex v = 1; v <= n; ++v) g.offsets_[v + 1] = g.offsets_[v] + degree[v];
  g.targets_.resize(2 * edges.size());
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const Edge& e : edges) {
    g.targets_[cursor[e.first]++] = e.second;
    g.targets_[cursor[e.second]++] = e.first;
  }
  for (Vertex v = 1; v <= n; ++v) {
    auto first = g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]);
    auto last = g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]);
    std::sort(first, last);
    if (auto dup = std::adjacent_find(first, last); dup != last) {
      throw NotATree(NotATreeReason::kDuplicateEdge, edge_text({v, *dup}));
    }
  }
  return g;
}

void Graph::require_vertex(Vertex v) const {
  if (!contains(v)) {
    throw Error(ErrorCode::kBadVertex,
                "vertex " + std::to_string(v) + " outside 1.." + std::to_string(n_));
  }
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  if (!contains(u) || !contains(v)) return false;
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

Vertex Graph::max_degree() const noexcept {
  Vertex best = 0;
  for (Vertex v = 1; v <= n_; ++v) best = std::max(best, degree(v));
  return best;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (Vertex u = 1; u <= n_; ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<std::int64_t> Graph::degree_sequence() const {
  std::vector<std::int64_t> out(static_cast<std::size_t>(n_));
  for (Vertex v = 1; v <= n_; ++v) out[v - 1] = degree(v);
  return out;
}

Tree Tree::from_edges(Vertex n, std::span<const Edge> edges) {
  if (n < 1) throw Error(ErrorCode::kNotATree, "a tree needs at least one vertex");
  Graph g = Graph::from_edges(n, edges);  // bad ids, self-loops, duplicates
  DisjointSets sets(n);
  for (const Edge& e : edges) {
    if (!sets.unite(e.first, e.second)) throw NotATree(NotATreeReason::kCycle, edge_text(e));
  }
  if (edges.size() != static_cast<std::size_t>(n) - 1) {
    throw NotATree(NotATreeReason::kDisconnected,
                   std::to_string(edges.size()) + " edges on " + std::to_string(n) + " vertices");
  }
  return Tree(std::move(g));
}

Tree Tree::from_graph(Graph g) {
  auto edges = g.edges();
  return from_edges(g.order(), edges);
}

Tree build_tree(std::span<const Edge> edges, Vertex n) { return Tree::from_edges(n, edges); }

const char* to_string(VertexClass c) noexcept {
  switch (c) {
    case VertexClass::kLeaf: return "leaf";
    case VertexClass::kPreLeaf: return "pre-leaf";
    case VertexClass::kSpecialPreLeaf: return "special";
    case VertexClass::kInternal: return "internal";
  }
  return "unknown";
}

VertexClass classify_vertex(const Tree& t, Vertex v) {
  t.graph().require_vertex(v);
  const Vertex deg = t.degree(v);
  if (deg == 1) return VertexClass::kLeaf;
  if (deg == 0) return VertexClass::kInternal;
  Vertex leaf_neighbors = 0;
  for (Vertex u : t.neighbors(v)) leaf_neighbors += (t.degree(u) == 1);
  if (leaf_neighbors >= deg - 1) {
    return deg == 2 ? VertexClass::kSpecialPreLeaf : VertexClass::kPreLeaf;
  }
  return VertexClass::kInternal;
}

std::vector<Vertex> pre_leaves(const Tree& t) {
  std::vector<Vertex> out;
  for (Vertex v = 1; v <= t.order(); ++v) {
    if (is_pre_leaf(classify_vertex(t, v))) out.push_back(v);
  }
  return out;
}

std::vector<Vertex> branch(const Tree& t, Vertex v, Vertex u) {
  t.graph().require_vertex(v);
  t.graph().require_vertex(u);
  if (!t.adjacent(v, u)) {
    throw Error(ErrorCode::kNotAdjacent,
                std::to_string(u) + " is not adjacent to " + std::to_string(v));
  }
  std::vector<char> seen(static_cast<std::size_t>(t.order()) + 1, 0);
  seen[v] = 1;
  seen[u] = 1;
  std::vector<Vertex> out{u};
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (Vertex w : t.neighbors(out[head])) {
      if (!seen[w]) {
        seen[w] = 1;
        out.push_back(w);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_string(const Tree& t) noexcept { return t.max_degree() <= 2; }

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> removed) {
  const Vertex n = g.order();
  std::vector<char> gone(static_cast<std::size_t>(n) + 1, 0);
  for (Vertex v : removed) {
    g.require_vertex(v);
    gone[v] = 1;
  }
  InducedSubgraph out;
  out.to_local.assign(static_cast<std::size_t>(n) + 1, 0);
  out.to_original.push_back(0);
  for (Vertex v = 1; v <= n; ++v) {
    if (gone[v]) continue;
    out.to_local[v] = static_cast<Vertex>(out.to_original.size());
    out.to_original.push_back(v);
  }
  std::vector<Edge> edges;
  for (const auto& [a, b] : g.edges()) {
    if (!gone[a] && !gone[b]) edges.emplace_back(out.to_local[a], out.to_local[b]);
  }
  out.graph = Graph::from_edges(static_cast<Vertex>(out.to_original.size() - 1), edges);
  return out;
}

Tree complete_forest_to_tree(const Graph& f, Vertex degree_cap) {
  const Vertex n = f.order();
  if (n < 1) throw Error(ErrorCode::kNotATree, "empty forest");
  const Vertex allowed = std::max(degree_cap, f.max_degree());

  // Components in ascending order of minimum vertex.
  std::vector<Vertex> component(static_cast<std::size_t>(n) + 1, 0);
  std::vector<std::vector<Vertex>> members;
  for (Vertex s = 1; s <= n; ++s) {
    if (component[s]) continue;
    members.emplace_back();
    auto& list = members.back();
    const auto id = static_cast<Vertex>(members.size());
    component[s] = id;
    list.push_back(s);
    for (std::size_t head = 0; head < list.size(); ++head) {
      for (Vertex w : f.neighbors(list[head])) {
        if (!component[w]) {
          component[w] = id;
          list.push_back(w);
        }
      }
    }
  }
  if (f.edge_count() + members.size() != static_cast<std::size_t>(n)) {
    throw NotATree(NotATreeReason::kCycle, "input forest contains a cycle");
  }

  std::vector<Vertex> degree(static_cast<std::size_t>(n) + 1, 0);
  for (Vertex v = 1; v <= n; ++v) degree[v] = f.degree(v);
  std::set<std::pair<Vertex, Vertex>> grown;  // (degree, id) of the tree built so far
  for (Vertex v : members.front()) grown.emplace(degree[v], v);

  std::vector<Edge> edges = f.edges();
  for (std::size_t c = 1; c < members.size(); ++c) {
    const auto [deg_a, a] = *grown.begin();
    Vertex b = members[c].front();
    for (Vertex v : members[c]) {
      if (std::pair(degree[v], v) < std::pair(degree[b], b)) b = v;
    }
    if (deg_a + 1 > allowed || degree[b] + 1 > allowed) {
      throw Error(ErrorCode::kCapInfeasible,
                  "joining component " + std::to_string(c + 1) + " exceeds degree cap " +
                      std::to_string(allowed));
    }
    grown.erase(grown.begin());
    ++degree[a];
    ++degree[b];
    grown.emplace(degree[a], a);
    for (Vertex v : members[c]) grown.emplace(degree[v], v);
    edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  return Tree::from_edges(n, edges);
}

}  // namespace arbor
