#include "arbor/detail/exact_strong3.hpp"

#include <algorithm>
#include <array>
#include <cstdint>

#include "arbor/error.hpp"

namespace arbor::detail {
namespace {

using Word = std::uint64_t;

// Reachable (a, b) pairs with 0 <= a, b <= cap; row a is a bitset over b.
class Table {
 public:
  Table() = default;
  Table(std::size_t cap, std::size_t words) : cap_(cap), words_(words), bits_((cap + 1) * words, 0) {}

  bool empty() const {
    return std::all_of(bits_.begin(), bits_.end(), [](Word w) { return w == 0; });
  }
  bool test(std::size_t a, std::size_t b) const {
    return a <= cap_ && b <= cap_ && ((row(a)[b / 64] >> (b % 64)) & 1U);
  }
  void set(std::size_t a, std::size_t b) { row(a)[b / 64] |= Word{1} << (b % 64); }
  void merge(const Table& other) {
    for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] |= other.bits_[i];
  }
  const Word* row(std::size_t a) const { return &bits_[a * words_]; }
  Word* row(std::size_t a) { return &bits_[a * words_]; }
  bool row_empty(std::size_t a) const {
    const Word* r = row(a);
    return std::all_of(r, r + words_, [](Word w) { return w == 0; });
  }

  // { (a1 + a2, b1 + b2) : (a1, b1) in *this, (a2, b2) in other }, clipped at cap.
  Table sumset(const Table& other) const {
    Table out(cap_, words_);
    for (std::size_t a2 = 0; a2 <= cap_; ++a2) {
      const Word* orow = other.row(a2);
      for (std::size_t w2 = 0; w2 < words_; ++w2) {
        Word bits = orow[w2];
        while (bits != 0) {
          const std::size_t b2 = w2 * 64 + static_cast<std::size_t>(__builtin_ctzll(bits));
          bits &= bits - 1;
          for (std::size_t a1 = 0; a1 + a2 <= cap_; ++a1) {
            if (row_empty(a1)) continue;
            or_shifted(row(a1), b2, out.row(a1 + a2));
          }
        }
      }
    }
    return out;
  }

 private:
  void or_shifted(const Word* src, std::size_t shift, Word* dst) const {
    const std::size_t ws = shift / 64;
    const std::size_t bs = shift % 64;
    for (std::size_t w = words_; w-- > ws;) {
      Word v = src[w - ws] << bs;
      if (bs != 0 && w > ws) v |= src[w - ws - 1] >> (64 - bs);
      dst[w] |= v;
    }
    const std::size_t tail = (cap_ + 1) % 64;
    if (tail != 0) dst[words_ - 1] &= (Word{1} << tail) - 1;
  }

  std::size_t cap_ = 0;
  std::size_t words_ = 0;
  std::vector<Word> bits_;
};

struct Rooted {
  std::vector<Vertex> order;                  // BFS order from the root
  std::vector<Vertex> parent;                 // by vertex id
  std::vector<std::vector<Vertex>> children;  // by vertex id
};

Rooted root_at(const WorkingTree& wt, Vertex root) {
  Rooted r;
  const auto size = static_cast<std::size_t>(wt.order()) + 1;
  r.parent.assign(size, 0);
  r.children.assign(size, {});
  r.order.push_back(root);
  for (std::size_t head = 0; head < r.order.size(); ++head) {
    const Vertex v = r.order[head];
    for (Vertex u : wt.neighbors(v)) {
      if (u == r.parent[v]) continue;
      r.parent[u] = v;
      r.children[v].push_back(u);
      r.order.push_back(u);
    }
  }
  return r;
}

class Solver {
 public:
  Solver(const WorkingTree& wt, const Rooted& rooted, std::size_t m)
      : rooted_(rooted), m_(m), cap_((m + 2) / 3), words_(cap_ / 64 + 1) {
    const auto size = static_cast<std::size_t>(wt.order()) + 1;
    final_.assign(size, {});
    prefix_.assign(size, {});
  }

  bool run(const std::vector<int>& allowed_mask, std::vector<int>& colors) {
    for (auto it = rooted_.order.rbegin(); it != rooted_.order.rend(); ++it) build(*it, allowed_mask);
    const Vertex root = rooted_.order.front();
    for (int c = 1; c <= 3; ++c) {
      const Table& t = final_[root][c - 1];
      for (std::size_t a = 0; a <= cap_; ++a) {
        for (std::size_t b = 0; b <= cap_ && a + b <= m_; ++b) {
          if (!t.test(a, b)) continue;
          const std::size_t rest = m_ - a - b;
          const std::size_t lo = std::min({a, b, rest});
          const std::size_t hi = std::max({a, b, rest});
          if (hi - lo > 1) continue;
          reconstruct(root, c, a, b, colors);
          return true;
        }
      }
    }
    return false;
  }

 private:
  static std::pair<std::size_t, std::size_t> unit(int c) {
    return {c == 1 ? 1 : 0, c == 2 ? 1 : 0};
  }

  void build(Vertex v, const std::vector<int>& allowed_mask) {
    const auto& kids = rooted_.children[v];
    prefix_[v].assign(kids.size(), {});
    for (int c = 1; c <= 3; ++c) {
      Table t(cap_, words_);
      if (allowed_mask[v] & (1 << c)) {
        const auto [a, b] = unit(c);
        t.set(a, b);
      }
      for (std::size_t i = 0; i < kids.size(); ++i) {
        prefix_[v][i][c - 1] = t;
        if (t.empty()) continue;
        Table other(cap_, words_);
        for (int d = 1; d <= 3; ++d) {
          if (d != c) other.merge(final_[kids[i]][d - 1]);
        }
        t = t.sumset(other);
      }
      final_[v][c - 1] = std::move(t);
    }
  }

  void reconstruct(Vertex root, int color, std::size_t a, std::size_t b, std::vector<int>& colors) {
    struct Item {
      Vertex v;
      int c;
      std::size_t a;
      std::size_t b;
    };
    std::vector<Item> stack{{root, color, a, b}};
    while (!stack.empty()) {
      auto [v, c, ra, rb] = stack.back();
      stack.pop_back();
      colors[v] = c;
      const auto& kids = rooted_.children[v];
      for (std::size_t i = kids.size(); i-- > 0;) {
        const Table& before = prefix_[v][i][c - 1];
        bool found = false;
        for (int d = 1; d <= 3 && !found; ++d) {
          if (d == c) continue;
          const Table& child = final_[kids[i]][d - 1];
          for (std::size_t x = 0; x <= ra && !found; ++x) {
            for (std::size_t y = 0; y <= rb && !found; ++y) {
              if (child.test(x, y) && before.test(ra - x, rb - y)) {
                stack.push_back({kids[i], d, x, y});
                ra -= x;
                rb -= y;
                found = true;
              }
            }
          }
        }
        if (!found) throw Error(ErrorCode::kInvariantViolation, "exact 3-coloring backtrack broke");
      }
    }
  }

  const Rooted& rooted_;
  std::size_t m_;
  std::size_t cap_;
  std::size_t words_;
  std::vector<std::array<Table, 3>> final_;
  std::vector<std::vector<std::array<Table, 3>>> prefix_;
};

}  // namespace

bool solve_strong3_exact(const WorkingTree& wt, std::span<const std::pair<Vertex, Vertex>> differ,
                         std::vector<int>& colors) {
  const auto alive = wt.alive_vertices();
  if (alive.empty()) return true;
  const Rooted rooted = root_at(wt, alive.front());
  Solver solver(wt, rooted, alive.size());

  std::vector<Vertex> pinned;
  for (const auto& [x, y] : differ) {
    for (Vertex z : {x, y}) {
      if (!wt.alive(z)) throw Error(ErrorCode::kInvariantViolation, "constraint on a removed vertex");
      if (std::find(pinned.begin(), pinned.end(), z) == pinned.end()) pinned.push_back(z);
    }
  }
  // Patterns in restricted-growth form: colors are interchangeable, so the
  // k-th pinned vertex never opens a color beyond one past those used before.
  std::vector<int> pattern(pinned.size(), 1);
  std::vector<int> mask(static_cast<std::size_t>(wt.order()) + 1, 0b1110);
  while (true) {
    bool ok = true;
    for (const auto& [x, y] : differ) {
      const auto ix = std::find(pinned.begin(), pinned.end(), x) - pinned.begin();
      const auto iy = std::find(pinned.begin(), pinned.end(), y) - pinned.begin();
      if (pattern[static_cast<std::size_t>(ix)] == pattern[static_cast<std::size_t>(iy)]) ok = false;
    }
    int used = 0;
    for (int c : pattern) {
      if (c > used + 1) ok = false;
      used = std::max(used, c);
    }
    if (ok) {
      for (std::size_t i = 0; i < pinned.size(); ++i) mask[pinned[i]] = 1 << pattern[i];
      if (solver.run(mask, colors)) return true;
    }
    std::size_t i = pinned.size();
    while (i > 0 && pattern[i - 1] == 3) pattern[--i] = 1;
    if (i == 0) return false;
    ++pattern[i - 1];
  }
}

}  // namespace arbor::detail
