#include "arbor/prufer.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>
#include <string>

#include "arbor/error.hpp"

namespace arbor {
namespace {

using MinHeap = std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>>;

}  // namespace

Tree prufer_decode(std::span<const Vertex> code, Vertex n) {
  if (n < 1) throw Error(ErrorCode::kBadEntry, "n must be positive");
  if (n == 1) {
    if (!code.empty()) throw Error(ErrorCode::kBadEntry, "n=1 takes an empty code");
    return Tree::from_edges(1, {});
  }
  if (code.size() != static_cast<std::size_t>(n) - 2) {
    throw Error(ErrorCode::kBadEntry, "code length " + std::to_string(code.size()) +
                                          " does not match n-2 = " + std::to_string(n - 2));
  }
  std::vector<Vertex> degree(static_cast<std::size_t>(n) + 1, 1);
  for (Vertex a : code) {
    if (a < 1 || a > n) {
      throw Error(ErrorCode::kBadEntry,
                  "entry " + std::to_string(a) + " outside 1.." + std::to_string(n));
    }
    ++degree[a];
  }
  std::vector<Vertex> initial;
  for (Vertex v = 1; v <= n; ++v) {
    if (degree[v] == 1) initial.push_back(v);
  }
  MinHeap leaves(std::greater<>{}, std::move(initial));
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n) - 1);
  for (Vertex a : code) {
    const Vertex leaf = leaves.top();
    leaves.pop();
    edges.emplace_back(leaf, a);
    if (--degree[a] == 1) leaves.push(a);
  }
  const Vertex last = leaves.top();
  leaves.pop();
  edges.emplace_back(last, leaves.top());
  return Tree::from_edges(n, edges);
}

PruferSequence prufer_encode(const Tree& t) {
  const Vertex n = t.order();
  if (n < 2) throw Error(ErrorCode::kPreconditionViolated, "encoding needs n >= 2");
  std::vector<Vertex> degree(static_cast<std::size_t>(n) + 1);
  std::vector<Vertex> neighbor_xor(static_cast<std::size_t>(n) + 1, 0);
  std::vector<Vertex> initial;
  for (Vertex v = 1; v <= n; ++v) {
    degree[v] = t.degree(v);
    for (Vertex u : t.neighbors(v)) neighbor_xor[v] ^= u;
    if (degree[v] == 1) initial.push_back(v);
  }
  MinHeap leaves(std::greater<>{}, std::move(initial));
  PruferSequence code;
  code.reserve(static_cast<std::size_t>(n) - 2);
  for (Vertex step = 0; step + 2 < n; ++step) {
    const Vertex leaf = leaves.top();
    leaves.pop();
    const Vertex a = neighbor_xor[leaf];
    code.push_back(a);
    neighbor_xor[a] ^= leaf;
    if (--degree[a] == 1) leaves.push(a);
  }
  return code;
}

std::uint64_t labeled_tree_count(Vertex n) {
  if (n < 1) throw Error(ErrorCode::kPreconditionViolated, "n must be positive");
  std::uint64_t count = 1;
  for (Vertex i = 2; i < n; ++i) {
    if (count > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(n)) {
      throw Error(ErrorCode::kTooLarge, "n^(n-2) overflows 64 bits");
    }
    count *= static_cast<std::uint64_t>(n);
  }
  return count;
}

LabeledTreeEnumerator::LabeledTreeEnumerator(Vertex n, Vertex max_n) : n_(n) {
  if (n < 1) throw Error(ErrorCode::kPreconditionViolated, "n must be positive");
  if (n > max_n) {
    throw Error(ErrorCode::kTooLarge, "enumeration limited to n <= " + std::to_string(max_n));
  }
  code_.assign(n >= 2 ? static_cast<std::size_t>(n) - 2 : 0, 1);
}

bool LabeledTreeEnumerator::next() {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    return true;
  }
  for (auto it = code_.rbegin(); it != code_.rend(); ++it) {
    if (*it < n_) {
      ++*it;
      return true;
    }
    *it = 1;
  }
  done_ = true;
  return false;
}

Tree LabeledTreeEnumerator::tree() const { return prufer_decode(code_, n_); }

std::uint64_t enumerate_labeled_trees(Vertex n, const std::function<void(const Tree&)>& visit,
                                      Vertex max_n) {
  LabeledTreeEnumerator it(n, max_n);
  std::uint64_t count = 0;
  while (it.next()) {
    visit(it.tree());
    ++count;
  }
  return count;
}

TreeStats tree_stats(const Tree& t) {
  TreeStats s;
  for (Vertex v = 1; v <= t.order(); ++v) {
    const Vertex d = t.degree(v);
    s.max_degree = std::max(s.max_degree, d);
    s.x1 += (d == 1);
    s.x2 += (d == 2);
  }
  return s;
}

}  // namespace arbor
