#include "arbor/coloring.hpp"

#include <algorithm>
#include <string>

#include "arbor/balance.hpp"
#include "arbor/error.hpp"

namespace arbor {
namespace {

template <typename T>
bool spread_at_most_one(const std::vector<T>& xs) {
  if (xs.empty()) return true;
  auto [lo, hi] = std::minmax_element(xs.begin(), xs.end());
  return *hi - *lo <= 1;
}

std::vector<Vertex> bfs_order(const Graph& g) {
  const Vertex n = g.order();
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  std::vector<Vertex> order;
  order.reserve(static_cast<std::size_t>(n));
  for (Vertex s = 1; s <= n; ++s) {
    if (seen[s]) continue;
    seen[s] = 1;
    const std::size_t head_start = order.size();
    order.push_back(s);
    for (std::size_t head = head_start; head < order.size(); ++head) {
      for (Vertex w : g.neighbors(order[head])) {
        if (!seen[w]) {
          seen[w] = 1;
          order.push_back(w);
        }
      }
    }
  }
  return order;
}

}  // namespace

KColoring::KColoring(Vertex n, int k) : k_(k), assignment_(static_cast<std::size_t>(n) + 1, 0) {
  if (k < 1) throw Error(ErrorCode::kPreconditionViolated, "k must be positive");
}

KColoring::KColoring(int k, std::vector<int> assignment)
    : k_(k), assignment_(std::move(assignment)) {
  if (k < 1) throw Error(ErrorCode::kPreconditionViolated, "k must be positive");
  if (assignment_.empty()) assignment_.push_back(0);
  assignment_[0] = 0;
  for (int c : assignment_) {
    if (c < 0 || c > k_) {
      throw Error(ErrorCode::kPreconditionViolated,
                  "color " + std::to_string(c) + " outside 1.." + std::to_string(k_));
    }
  }
}

void KColoring::set(Vertex v, int color) {
  if (v < 1 || v > order()) throw Error(ErrorCode::kBadVertex, "vertex " + std::to_string(v));
  if (color < 0 || color > k_) {
    throw Error(ErrorCode::kPreconditionViolated, "color " + std::to_string(color));
  }
  assignment_[static_cast<std::size_t>(v)] = color;
}

bool KColoring::total() const noexcept {
  return std::all_of(assignment_.begin() + 1, assignment_.end(), [](int c) { return c != 0; });
}

std::vector<Vertex> KColoring::class_sizes() const {
  std::vector<Vertex> sizes(static_cast<std::size_t>(k_), 0);
  for (std::size_t v = 1; v < assignment_.size(); ++v) {
    if (assignment_[v] != 0) ++sizes[static_cast<std::size_t>(assignment_[v] - 1)];
  }
  return sizes;
}

bool ColorTally::k_balanced() const noexcept {
  return spread_at_most_one(class_sizes) && spread_at_most_one(mono_edges);
}

bool ColorTally::strongly_balanced() const noexcept {
  return spread_at_most_one(class_sizes) &&
         std::all_of(mono_edges.begin(), mono_edges.end(), [](std::int64_t e) { return e == 0; });
}

ColorTally tally(const Graph& g, const KColoring& c) {
  if (c.order() != g.order()) {
    throw Error(ErrorCode::kPreconditionViolated,
                "coloring covers " + std::to_string(c.order()) + " vertices, graph has " +
                    std::to_string(g.order()));
  }
  if (!c.total()) throw Error(ErrorCode::kPartialColoring, "some vertex is uncolored");
  ColorTally t;
  t.class_sizes = c.class_sizes();
  t.mono_edges.assign(static_cast<std::size_t>(c.k()), 0);
  for (const auto& [u, v] : g.edges()) {
    if (c[u] == c[v]) {
      ++t.mono_edges[static_cast<std::size_t>(c[u] - 1)];
    } else {
      ++t.cross_edges;
    }
  }
  return t;
}

BalanceReport verify_balanced(const Graph& g, const KColoring& c) {
  if (c.k() != 2) throw Error(ErrorCode::kPreconditionViolated, "balance needs a 2-coloring");
  const ColorTally t = tally(g, c);
  BalanceReport r;
  r.v1 = t.class_sizes[0];
  r.v2 = t.class_sizes[1];
  r.e1 = t.mono_edges[0];
  r.e2 = t.mono_edges[1];
  r.cross = t.cross_edges;
  r.balanced = t.k_balanced();
  return r;
}

std::optional<KColoring> is_balanced_graph(const Graph& g) {
  const Vertex n = g.order();
  if (n == 0) return KColoring(0, 2);
  const BalanceResult r = balance_exact(DegreeSequence(g.degree_sequence()));
  if (r.F > 2) return std::nullopt;
  KColoring c(n, 2);
  for (std::size_t i : r.witness.I) c.set(static_cast<Vertex>(i), 1);
  for (std::size_t j : r.witness.J) c.set(static_cast<Vertex>(j), 2);
  return c;
}

bool brute_force_balanced(const Graph& g, Vertex max_n) {
  const Vertex n = g.order();
  if (n > max_n) {
    throw Error(ErrorCode::kTooLarge, "2^" + std::to_string(n) + " colorings exceed the limit");
  }
  // Gray-code walk: every step flips one vertex and updates the tallies in O(deg).
  std::vector<char> ones(static_cast<std::size_t>(n) + 1, 0);
  std::vector<Vertex> ones_around(static_cast<std::size_t>(n) + 1, 0);
  std::int64_t v1 = 0;
  std::int64_t e1 = 0;
  std::int64_t e2 = static_cast<std::int64_t>(g.edge_count());
  auto balanced = [&] {
    const std::int64_t dv = 2 * v1 - n;
    return dv >= -1 && dv <= 1 && e1 - e2 >= -1 && e1 - e2 <= 1;
  };
  if (balanced()) return true;
  const std::uint64_t steps = std::uint64_t{1} << n;
  for (std::uint64_t i = 1; i < steps; ++i) {
    const Vertex v = static_cast<Vertex>(__builtin_ctzll(i)) + 1;
    const Vertex a = ones_around[v];
    const Vertex b = g.degree(v) - a;
    if (ones[v]) {
      e1 -= a;
      e2 += b;
      --v1;
    } else {
      e1 += a;
      e2 -= b;
      ++v1;
    }
    ones[v] ^= 1;
    const int delta = ones[v] ? 1 : -1;
    for (Vertex w : g.neighbors(v)) ones_around[w] += delta;
    if (balanced()) return true;
  }
  return false;
}

std::optional<KColoring> k_balanced_brute(const Graph& g, int k, Vertex max_n) {
  if (k < 1) throw Error(ErrorCode::kPreconditionViolated, "k must be positive");
  const Vertex n = g.order();
  if (n > max_n) {
    throw Error(ErrorCode::kTooLarge,
                "search limited to n <= " + std::to_string(max_n) + ", got " + std::to_string(n));
  }
  if (n == 0) return KColoring(0, k);
  const Vertex q = n / k;
  const Vertex r = n % k;
  const std::vector<Vertex> order = bfs_order(g);
  std::vector<int> color(static_cast<std::size_t>(n) + 1, 0);
  std::vector<Vertex> size(static_cast<std::size_t>(k) + 1, 0);
  std::vector<std::int64_t> mono(static_cast<std::size_t>(k) + 1, 0);
  Vertex full = 0;  // classes already at q + 1
  std::int64_t open_edges = static_cast<std::int64_t>(g.edge_count());

  auto edge_spread_ok = [&] {
    std::int64_t lo = mono[1];
    std::int64_t hi = mono[1];
    for (int c = 2; c <= k; ++c) {
      lo = std::min(lo, mono[static_cast<std::size_t>(c)]);
      hi = std::max(hi, mono[static_cast<std::size_t>(c)]);
    }
    return hi - lo <= 1 + open_edges;
  };

  // Explicit stack of (depth, next color to try).
  std::vector<int> next_color(static_cast<std::size_t>(n) + 1, 1);
  std::vector<int> used_before(static_cast<std::size_t>(n) + 1, 0);
  std::size_t depth = 0;
  int used = 0;
  while (true) {
    if (depth == order.size()) {
      if (edge_spread_ok()) {
        std::vector<int> assignment(color.begin(), color.end());
        return KColoring(k, std::move(assignment));
      }
    }
    bool advanced = false;
    if (depth < order.size()) {
      const Vertex v = order[depth];
      const int limit = std::min(k, used + 1);
      for (int c = next_color[depth]; c <= limit; ++c) {
        const Vertex s = size[static_cast<std::size_t>(c)];
        if (s + 1 > q + 1 || (s + 1 == q + 1 && full == r)) continue;
        std::int64_t same = 0;
        std::int64_t closed = 0;
        for (Vertex w : g.neighbors(v)) {
          if (color[w] != 0) {
            ++closed;
            same += (color[w] == c);
          }
        }
        color[v] = c;
        ++size[static_cast<std::size_t>(c)];
        if (s + 1 == q + 1) ++full;
        mono[static_cast<std::size_t>(c)] += same;
        open_edges -= closed;
        if (edge_spread_ok()) {
          next_color[depth] = c + 1;
          used_before[depth] = used;
          used = std::max(used, c);
          ++depth;
          if (depth < next_color.size()) next_color[depth] = 1;
          advanced = true;
          break;
        }
        color[v] = 0;
        --size[static_cast<std::size_t>(c)];
        if (s + 1 == q + 1) --full;
        mono[static_cast<std::size_t>(c)] -= same;
        open_edges += closed;
      }
    }
    if (advanced) continue;
    if (depth == 0) return std::nullopt;
    --depth;
    const Vertex v = order[depth];
    const int c = color[v];
    std::int64_t same = 0;
    std::int64_t closed = 0;
    color[v] = 0;
    for (Vertex w : g.neighbors(v)) {
      if (color[w] != 0) {
        ++closed;
        same += (color[w] == c);
      }
    }
    if (size[static_cast<std::size_t>(c)] == q + 1) --full;
    --size[static_cast<std::size_t>(c)];
    mono[static_cast<std::size_t>(c)] -= same;
    open_edges += closed;
    used = used_before[depth];
  }
}

}  // namespace arbor
