#include "arbor/equitable.hpp"

#include <algorithm>
#include <array>
#include <initializer_list>
#include <string>

#include "arbor/detail/exact_strong3.hpp"
#include "arbor/detail/working_tree.hpp"
#include "arbor/error.hpp"

namespace arbor {
namespace {

using detail::WorkingTree;

// Constraints in force for the subtree currently being colored.
struct Level {
  bool pair_mode = false;  // two-hub recursion: additionally c(u) != c(v)
  Vertex u = 0;
  Vertex v = 0;
  Vertex p = 0;  // 0 when there is no (p, q) constraint
  Vertex q = 0;

  bool constrained() const { return p != 0; }
};

enum class Step { kPeel, kTriple, kCherry, kSpecialPeel, kSpecialNext, kPair };

struct Frame {
  Step step;
  Level level;  // constraints the extension has to restore
  std::size_t trace_index;
  std::array<Vertex, 3> removed{};  // in removal order
  int removed_count = 0;
  Vertex a = 0;
  Vertex b = 0;
  Vertex c = 0;
  Vertex d = 0;
};

bool contains(std::initializer_list<Vertex> xs, Vertex x) {
  return std::find(xs.begin(), xs.end(), x) != xs.end();
}

int third_color(int a, int b) { return 6 - a - b; }

class Engine {
 public:
  explicit Engine(const Tree& t)
      : wt_(t), color_(static_cast<std::size_t>(t.order()) + 1, 0) {}

  Construction run(const Level& initial) {
    descend(initial);
    while (!frames_.empty()) {
      Frame f = frames_.back();
      frames_.pop_back();
      for (int i = f.removed_count; i-- > 0;) wt_.restore(f.removed[static_cast<std::size_t>(i)]);
      Vertex moved = 0;
      if (!extend(f, moved) || !locally_valid(f, moved)) fallback(f.level, f.trace_index);
    }
    return {KColoring(3, color_), std::move(trace_)};
  }

 private:
  // ---- bookkeeping -------------------------------------------------------

  void paint(Vertex v, int c) {
    if (color_[v] != 0) --size_[color_[v]];
    color_[v] = c;
    if (c != 0) ++size_[c];
  }

  int color(Vertex v) const { return color_[v]; }

  // Least-used color outside `forbid`, ties to the smaller color; 0 if none.
  int least_used(std::initializer_list<int> forbid) const {
    int best = 0;
    for (int c = 1; c <= 3; ++c) {
      if (std::find(forbid.begin(), forbid.end(), c) != forbid.end()) continue;
      if (best == 0 || size_[c] < size_[best]) best = c;
    }
    return best;
  }

  // Smallest color outside `forbid`.
  static int smallest_free(std::initializer_list<int> forbid) {
    for (int c = 1; c <= 3; ++c) {
      if (std::find(forbid.begin(), forbid.end(), c) == forbid.end()) return c;
    }
    return 0;
  }

  std::size_t label(std::string text) {
    trace_.push_back(std::move(text));
    return trace_.size() - 1;
  }

  void push(Step step, const Level& level, const std::string& text,
            std::initializer_list<Vertex> removed, Vertex a = 0, Vertex b = 0, Vertex c = 0,
            Vertex d = 0) {
    Frame f{step, level, label(text)};
    for (Vertex r : removed) {
      wt_.remove(r);
      f.removed[static_cast<std::size_t>(f.removed_count++)] = r;
    }
    f.a = a;
    f.b = b;
    f.c = c;
    f.d = d;
    frames_.push_back(f);
  }

  // Smallest alive leaf whose neighbor is not in `avoid`; 0 if none.
  Vertex leaf_avoiding(std::initializer_list<Vertex> avoid) const {
    for (Vertex l : wt_.leaves()) {
      if (!contains(avoid, wt_.leaf_neighbor(l)) && !contains(avoid, l)) return l;
    }
    return 0;
  }

  [[noreturn]] static void broken(const std::string& what) {
    throw Error(ErrorCode::kInvariantViolation, what);
  }

  // ---- checks and exact fallback -----------------------------------------

  bool balanced_sizes() const {
    const auto [lo, hi] = std::minmax({size_[1], size_[2], size_[3]});
    return hi - lo <= 1;
  }

  bool level_holds(const Level& level) const {
    if (level.constrained() && color(level.p) == color(level.q)) return false;
    if (level.pair_mode && color(level.u) == color(level.v)) return false;
    return true;
  }

  bool proper_at(Vertex x) const {
    if (color(x) < 1 || color(x) > 3) return false;
    for (Vertex y : wt_.tree().neighbors(x)) {
      if (wt_.alive(y) && color(y) == color(x)) return false;
    }
    return true;
  }

  bool locally_valid(const Frame& f, Vertex moved) const {
    for (int i = 0; i < f.removed_count; ++i) {
      if (!proper_at(f.removed[static_cast<std::size_t>(i)])) return false;
    }
    if (moved != 0 && !proper_at(moved)) return false;
    return balanced_sizes() && level_holds(f.level);
  }

  bool whole_valid(const Level& level) const {
    for (Vertex x : wt_.alive_vertices()) {
      if (!proper_at(x)) return false;
    }
    return balanced_sizes() && level_holds(level);
  }

  static std::vector<VertexPair> differ_pairs(const Level& level) {
    std::vector<VertexPair> pairs;
    if (level.pair_mode) pairs.emplace_back(level.u, level.v);
    if (level.constrained()) pairs.emplace_back(level.p, level.q);
    return pairs;
  }

  void solve_exact(const Level& level) {
    std::vector<int> scratch(color_.size(), 0);
    const auto pairs = differ_pairs(level);
    if (!detail::solve_strong3_exact(wt_, pairs, scratch)) {
      broken("no strongly 3-balanced coloring satisfies the constraints on a subtree of order " +
             std::to_string(wt_.alive_count()));
    }
    for (Vertex x : wt_.alive_vertices()) paint(x, scratch[x]);
  }

  void fallback(const Level& level, std::size_t trace_index) {
    trace_[trace_index] += ":fallback";
    solve_exact(level);
  }

  // ---- descent -----------------------------------------------------------

  void descend(Level cur) {
    while (true) {
      const Vertex n = wt_.alive_count();
      if (cur.pair_mode) {
        if (!pair_step(cur)) return;
        continue;
      }
      if (wt_.max_degree() <= 2) {
        color_string(cur);
        return;
      }
      if (n % 3 != 0) {
        peel(cur);
        continue;
      }
      if (n <= 9) {
        label("base-exact");
        solve_exact(cur);
        return;
      }
      const Vertex k = n / 3;
      if (wt_.max_degree() > k) broken("max degree exceeds n/3 inside the recursion");
      if (!cur.constrained()) {
        const auto& pre = wt_.pre_leaves();
        if (pre.size() < 2) broken("a non-path tree with max degree <= n/3 lacks two pre-leaves");
        cur.p = *pre.begin();
        cur.q = *std::next(pre.begin());
      }
      Vertex p = cur.p;
      Vertex q = cur.q;
      if (std::pair(wt_.degree(q), q) < std::pair(wt_.degree(p), p)) std::swap(p, q);
      const std::vector<Vertex> W =
          wt_.max_degree() == k ? wt_.vertices_of_degree(k) : std::vector<Vertex>{};

      if (W.size() >= 2) {
        label("case-F");
        cur.pair_mode = true;
        cur.u = W[0];
        cur.v = W[1];
        continue;
      }
      if (W.empty()) {
        cur = wt_.degree(p) >= 3 ? case_triple(cur, p, q, 0) : case_special(cur, p, q, 0);
        continue;
      }
      const Vertex v0 = W[0];
      if (wt_.leaf_at(v0) != 0) {
        cur = wt_.degree(p) >= 3 ? case_triple(cur, p, q, v0) : case_special(cur, p, q, v0);
      } else {
        cur = case_hub_without_leaf(cur, p, q, v0);
      }
    }
  }

  void peel(const Level& cur) {
    const Vertex n = wt_.alive_count();
    Vertex leaf = 0;
    for (Vertex l : wt_.leaves()) {
      const Vertex x = wt_.leaf_neighbor(l);
      if (!cur.constrained() || (x != cur.p && x != cur.q) || wt_.degree(x) >= 3) {
        leaf = l;
        break;
      }
    }
    if (leaf == 0) broken("no leaf can be peeled without breaking the pre-leaf pair");
    push(Step::kPeel, cur, n % 3 == 1 ? "case-1" : "case-2", {leaf});
  }

  // Cases A and C: one leaf at p, one at q, one more elsewhere (at v0 when
  // the unique degree-k vertex exists).
  Level case_triple(const Level& cur, Vertex p, Vertex q, Vertex v0) {
    const Vertex v1 = wt_.leaf_at(p);
    const Vertex v2 = wt_.leaf_at(q);
    const char* text = v0 == 0 ? "case-A" : "case-C";
    Vertex v3 = 0;
    if (v0 != 0 && v0 != q) {
      if (v0 == p) broken("the degree-n/3 vertex cannot be the lower-degree pre-leaf");
      v3 = wt_.leaf_at(v0);
    } else {
      v3 = leaf_avoiding({p, q});
    }
    Vertex w = v3 != 0 ? wt_.leaf_neighbor(v3) : 0;
    if (v3 == 0) {
      const Vertex z = v0 == q                  ? q
                       : wt_.degree(p) >= 4     ? p
                       : wt_.degree(q) >= 4     ? q
                                                : 0;
      if (z == 0) return case_cherry(cur, p, q);
      v3 = wt_.leaf_at(z, z == p ? v1 : v2);
      w = z;
    }
    if (v1 == 0 || v2 == 0 || v3 == 0) broken(std::string(text) + " is missing a leaf");
    Level next;
    next.p = p;
    next.q = q;
    push(Step::kTriple, cur, text, {v1, v2, v3}, p, q, w);
    return next;
  }

  // Case A without a third leaf: p has degree 3, two leaves and one other
  // neighbor y; drop p with both leaves.
  Level case_cherry(const Level& cur, Vertex p, Vertex q) {
    const Vertex l1 = wt_.leaf_at(p);
    const Vertex l2 = wt_.leaf_at(p, l1);
    Vertex y = 0;
    for (Vertex x : wt_.neighbors(p)) {
      if (x != l1 && x != l2) y = x;
    }
    if (l1 == 0 || l2 == 0 || y == 0 || wt_.degree(p) != 3) broken("case-A-cherry shape mismatch");
    push(Step::kCherry, cur, "case-A-cherry", {l1, l2, p}, p, q, y);
    return Level{};
  }

  // Cases B and D: p is special; drop p with its leaf, plus one more leaf
  // (at v0 when the unique degree-k vertex exists).
  Level case_special(const Level& cur, Vertex p, Vertex q, Vertex v0) {
    const Vertex v1 = wt_.leaf_at(p);
    Vertex u = 0;
    for (Vertex x : wt_.neighbors(p)) {
      if (x != v1) u = x;
    }
    Vertex v2 = 0;
    if (v0 != 0) {
      v2 = wt_.leaf_at(v0);
    } else {
      v2 = leaf_avoiding({u, p});
      if (v2 == 0) v2 = leaf_avoiding({p});
    }
    if (v1 == 0 || u == 0 || v2 == 0) broken("case-B/D is missing a vertex");
    const Vertex w = wt_.leaf_neighbor(v2);
    push(Step::kSpecialPeel, cur, v0 == 0 ? "case-B" : "case-D", {v1, p, v2}, p, q, u, w);
    return Level{};
  }

  // Case E: the unique degree-k vertex v0 has no leaf; a special neighbor of
  // v0 must exist because its k branches share only 3k - 1 vertices.
  Level case_hub_without_leaf(const Level& cur, Vertex p, Vertex q, Vertex v0) {
    Vertex s = 0;
    for (Vertex x : wt_.neighbors(v0)) {
      if (wt_.is_special(x)) {
        s = x;
        break;
      }
    }
    if (s == 0) broken("case-E: no special vertex next to the unique degree-n/3 vertex");
    const Vertex v1 = wt_.leaf_at(s);
    const Vertex v2 = leaf_avoiding({p, q, s});
    if (v1 == 0 || v2 == 0) broken("case-E is missing a leaf");
    const Vertex w = wt_.leaf_neighbor(v2);
    const Vertex other = s == p ? q : s == q ? p : 0;
    push(Step::kSpecialNext, cur, "case-E", {v1, s, v2}, s, v0, w, other);
    Level next;
    if (other == 0) {
      next.p = p;
      next.q = q;
    }
    return next;
  }

  // Two-hub recursion; returns false once the subtree has been colored.
  bool pair_step(const Level& cur) {
    const Vertex n = wt_.alive_count();
    if (n <= 5) {
      label("base-exact");
      solve_exact(cur);
      return false;
    }
    Vertex w = leaf_avoiding({cur.u, cur.v, cur.p, cur.q});
    const char* text = "pair-c2";
    if (w == 0) {
      for (Vertex z : {std::min(cur.p, cur.q), std::max(cur.p, cur.q)}) {
        if (z != cur.u && z != cur.v && wt_.degree(z) >= 3) {
          w = wt_.leaf_at(z);
          text = "pair-c1";
          break;
        }
      }
    }
    if (w == 0) {
      pair_terminal(cur);
      return false;
    }
    push(Step::kPair, cur, text, {w}, wt_.leaf_neighbor(w));
    return true;
  }

  // ---- direct colorings --------------------------------------------------

  void color_string(const Level& cur) {
    const std::size_t index = label("string");
    if (wt_.alive_count() == 1) {
      paint(wt_.alive_vertices().front(), 1);
    } else {
      std::vector<Vertex> walk;
      Vertex prev = 0;
      Vertex at = *wt_.leaves().begin();
      while (at != 0) {
        walk.push_back(at);
        Vertex next = 0;
        for (Vertex y : wt_.tree().neighbors(at)) {
          if (wt_.alive(y) && y != prev) next = y;
        }
        prev = at;
        at = next;
      }
      for (std::size_t i = 0; i < walk.size(); ++i) paint(walk[i], static_cast<int>(i % 3) + 1);
      if (cur.constrained() && color(cur.p) == color(cur.q) && walk.size() >= 3) {
        const Vertex x = walk[walk.size() - 2];
        const Vertex y = walk.back();
        const int cx = color(x);
        paint(x, color(y));
        paint(y, cx);
      }
    }
    if (!whole_valid(cur)) fallback(cur, index);
  }

  // Neither pair-c1 nor pair-c2 applies: every leaf hangs off u, v, p or q
  // and the rest is the u-v path plus at most two hanging paths. Color that
  // skeleton greedily, then split the leaves of u and v to even out sizes.
  void pair_terminal(const Level& cur) {
    const std::size_t index = label("pair-terminal");
    const Vertex u = cur.u;
    const Vertex v = cur.v;
    const auto n = static_cast<std::size_t>(wt_.order());
    std::vector<char> hub_leaf(n + 1, 0);
    std::vector<Vertex> leaves_u;
    std::vector<Vertex> leaves_v;
    for (Vertex l : wt_.leaves()) {
      const Vertex x = wt_.leaf_neighbor(l);
      if (x == u) leaves_u.push_back(l);
      if (x == v) leaves_v.push_back(l);
      if (x == u || x == v) hub_leaf[l] = 1;
    }

    auto partner = [&](Vertex x) -> Vertex {
      if (x == cur.p) return cur.q;
      if (x == cur.q) return cur.p;
      return 0;
    };
    auto pick = [&](Vertex x, Vertex parent, int extra) {
      const Vertex other = partner(x);
      const int c_other = other != 0 ? color(other) : 0;
      return least_used({parent != 0 ? color(parent) : 0, extra, c_other});
    };

    bool ok = true;
    // u-v path through the skeleton.
    std::vector<Vertex> parent(n + 1, 0);
    std::vector<char> seen(n + 1, 0);
    std::vector<Vertex> queue{u};
    seen[u] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (Vertex y : wt_.tree().neighbors(queue[head])) {
        if (wt_.alive(y) && !hub_leaf[y] && !seen[y]) {
          seen[y] = 1;
          parent[y] = queue[head];
          queue.push_back(y);
        }
      }
    }
    std::vector<Vertex> path;
    for (Vertex x = v; x != 0; x = parent[x]) path.push_back(x);
    std::reverse(path.begin(), path.end());
    if (path.front() != u) broken("pair-terminal: u and v are disconnected");
    paint(u, 1);
    for (std::size_t i = 1; i + 1 < path.size(); ++i) {
      const int c = pick(path[i], path[i - 1], i + 2 == path.size() ? 2 : 0);
      if (c == 0) ok = false;
      paint(path[i], c == 0 ? 1 : c);
    }
    paint(v, 2);

    // Hanging parts of the skeleton, breadth first from the path.
    std::fill(seen.begin(), seen.end(), 0);
    queue.assign(path.begin(), path.end());
    for (Vertex x : path) seen[x] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex x = queue[head];
      for (Vertex y : wt_.tree().neighbors(x)) {
        if (!wt_.alive(y) || hub_leaf[y] || seen[y]) continue;
        seen[y] = 1;
        const int c = pick(y, x, 0);
        if (c == 0) ok = false;
        paint(y, c == 0 ? 1 : c);
        queue.push_back(y);
      }
    }

    // Leaves of u take 2 or 3, leaves of v take 1 or 3.
    const auto m = static_cast<Vertex>(wt_.alive_count());
    const Vertex base = m / 3;
    bool placed = false;
    for (int extra_mask = 0; extra_mask < 8 && ok && !placed; ++extra_mask) {
      std::array<Vertex, 4> target{0, base, base, base};
      int extras = 0;
      for (int c = 1; c <= 3; ++c) {
        if (extra_mask & (1 << (c - 1))) {
          ++target[c];
          ++extras;
        }
      }
      if (extras != m % 3) continue;
      const Vertex ones = target[1] - size_[1];
      const Vertex twos = target[2] - size_[2];
      if (ones < 0 || ones > static_cast<Vertex>(leaves_v.size())) continue;
      if (twos < 0 || twos > static_cast<Vertex>(leaves_u.size())) continue;
      for (std::size_t i = 0; i < leaves_v.size(); ++i) paint(leaves_v[i], i < static_cast<std::size_t>(ones) ? 1 : 3);
      for (std::size_t i = 0; i < leaves_u.size(); ++i) paint(leaves_u[i], i < static_cast<std::size_t>(twos) ? 2 : 3);
      placed = true;
    }
    if (!ok || !placed || !whole_valid(cur)) {
      for (Vertex x : wt_.alive_vertices()) paint(x, 0);
      fallback(cur, index);
    }
  }

  // ---- extensions --------------------------------------------------------

  bool extend(const Frame& f, Vertex& moved) {
    const auto& r = f.removed;
    switch (f.step) {
      case Step::kPeel: {
        const Vertex l = r[0];
        if (wt_.alive_count() == 1) {
          paint(l, 1);
          return true;
        }
        paint(l, least_used({color(wt_.leaf_neighbor(l))}));
        return true;
      }
      case Step::kTriple: {
        const Vertex p = f.a;
        const Vertex q = f.b;
        const Vertex w = f.c;
        const int a = color(p);
        const int b = color(q);
        if (a == b) return false;
        const int t = third_color(a, b);
        if (w == p || w == q || color(w) != t) {
          paint(r[0], b);
          paint(r[1], a);
          paint(r[2], t);
        } else {
          paint(r[0], t);
          paint(r[1], a);
          paint(r[2], b);
        }
        return true;
      }
      case Step::kCherry: {
        const int cp = smallest_free({color(f.c), color(f.b)});
        paint(r[2], cp);
        paint(r[0], cp == 1 ? 2 : 1);
        paint(r[1], cp == 3 ? 2 : 3);
        return true;
      }
      case Step::kSpecialPeel: {
        // r = {leaf of p, p, other leaf}; a = p, b = q, c = u, d = w.
        const int cp = smallest_free({color(f.c), color(f.b)});
        const int c2 = smallest_free({color(f.d), cp});
        paint(r[1], cp);
        paint(r[2], c2);
        paint(r[0], third_color(cp, c2));
        return true;
      }
      case Step::kSpecialNext: {
        // r = {leaf of s, s, other leaf}; a = s, b = v0, c = w, d = partner of s.
        int cs = 0;
        int c2 = 0;
        if (f.d == 0) {
          c2 = smallest_free({color(f.c)});
          cs = smallest_free({color(f.b), c2});
        } else {
          cs = smallest_free({color(f.b), color(f.d)});
          c2 = smallest_free({color(f.c), cs});
        }
        paint(r[1], cs);
        paint(r[2], c2);
        paint(r[0], third_color(cs, c2));
        return true;
      }
      case Step::kPair:
        return extend_pair(f, moved);
    }
    return false;
  }

  bool extend_pair(const Frame& f, Vertex& moved) {
    const Vertex w = f.removed[0];
    const int a = color(f.a);
    const int b1 = a == 1 ? 2 : 1;
    const int b2 = third_color(a, b1);
    const int b = size_[b1] <= size_[b2] ? b1 : b2;
    if (size_[a] >= size_[b]) {
      paint(w, b);
      return true;
    }
    // Color a is strictly the smallest class: recolor a leaf x in a branch at
    // a hub that avoids color a, and give w the color x had.
    const std::size_t n = color_.size();
    std::vector<char> seen(n, 0);
    for (Vertex r : {f.level.u, f.level.v}) {
      if (color(r) == a) continue;
      for (Vertex y : wt_.tree().neighbors(r)) {
        if (!wt_.alive(y) || y == w || seen[y]) continue;
        std::vector<Vertex> branch{y};
        seen[y] = 1;
        seen[r] = 1;
        bool clean = true;
        Vertex x = 0;
        for (std::size_t head = 0; head < branch.size(); ++head) {
          const Vertex z = branch[head];
          if (color(z) == a) clean = false;
          if (wt_.degree(z) == 1 && (x == 0 || z < x)) x = z;
          for (Vertex nb : wt_.tree().neighbors(z)) {
            if (wt_.alive(nb) && nb != w && !seen[nb]) {
              seen[nb] = 1;
              branch.push_back(nb);
            }
          }
        }
        seen[r] = 0;
        if (!clean || x == 0) continue;
        const int old = color(x);
        paint(x, a);
        paint(w, old);
        moved = x;
        trace_[f.trace_index] += ":swap";
        return true;
      }
      std::fill(seen.begin(), seen.end(), 0);
    }
    return false;
  }

  WorkingTree wt_;
  std::vector<int> color_;
  std::array<Vertex, 4> size_{};
  std::vector<Frame> frames_;
  std::vector<std::string> trace_;
};

void require_pre_leaf_pair(const Tree& t, Vertex p, Vertex q) {
  if (p == q || !t.graph().contains(p) || !t.graph().contains(q)) {
    throw Error(ErrorCode::kPreconditionViolated, "constraint needs two distinct vertices");
  }
  if (!is_pre_leaf(classify_vertex(t, p)) || !is_pre_leaf(classify_vertex(t, q))) {
    throw Error(ErrorCode::kPreconditionViolated,
                std::to_string(p) + " and " + std::to_string(q) + " are not both pre-leaves");
  }
}

Construction checked(const Tree& t, Construction c, const std::vector<VertexPair>& differ) {
  const EquitableCertificate cert = verify_strong_k(t, c.coloring);
  bool ok = cert.valid;
  for (const auto& [x, y] : differ) ok = ok && c.coloring[x] != c.coloring[y];
  if (!ok) throw Error(ErrorCode::kInvariantViolation, "constructed coloring failed verification");
  return c;
}

// Pairwise non-adjacent vertices of degree <= 2, smallest ids first; exact
// (alternate vertices along each path of the induced path forest) when the
// greedy pass comes up short.
std::vector<Vertex> independent_low_degree(const Tree& t, Vertex m, bool& exact_used) {
  const Vertex n = t.order();
  std::vector<Vertex> chosen;
  std::vector<char> blocked(static_cast<std::size_t>(n) + 1, 0);
  for (Vertex v = 1; v <= n && static_cast<Vertex>(chosen.size()) < m; ++v) {
    if (t.degree(v) > 2 || blocked[v]) continue;
    chosen.push_back(v);
    for (Vertex u : t.neighbors(v)) blocked[u] = 1;
  }
  exact_used = false;
  if (static_cast<Vertex>(chosen.size()) >= m) return chosen;

  exact_used = true;
  chosen.clear();
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  auto low = [&](Vertex v) { return t.degree(v) <= 2; };
  for (Vertex s = 1; s <= n; ++s) {
    if (!low(s) || seen[s]) continue;
    // Walk to one end of this path component, then take every other vertex.
    Vertex end = s;
    Vertex prev = 0;
    while (true) {
      Vertex next = 0;
      for (Vertex u : t.neighbors(end)) {
        if (low(u) && u != prev && u != s) next = u;
      }
      if (next == 0) break;
      prev = end;
      end = next;
    }
    prev = 0;
    bool take = true;
    for (Vertex at = end; at != 0;) {
      seen[at] = 1;
      if (take) chosen.push_back(at);
      take = !take;
      Vertex next = 0;
      for (Vertex u : t.neighbors(at)) {
        if (low(u) && u != prev && !seen[u]) next = u;
      }
      prev = at;
      at = next;
    }
  }
  std::sort(chosen.begin(), chosen.end());
  if (static_cast<Vertex>(chosen.size()) < m) {
    throw Error(ErrorCode::kIndependentSetNotFound,
                "only " + std::to_string(chosen.size()) + " independent vertices of degree <= 2, need " +
                    std::to_string(m));
  }
  chosen.resize(static_cast<std::size_t>(m));
  return chosen;
}

}  // namespace

std::size_t Construction::fallback_count() const {
  return static_cast<std::size_t>(std::count_if(trace.begin(), trace.end(), [](const std::string& s) {
    return s.find(":fallback") != std::string::npos;
  }));
}

EquitableCertificate verify_strong_k(const Graph& g, const KColoring& c) {
  const ColorTally t = tally(g, c);
  EquitableCertificate cert;
  cert.coloring = c;
  cert.class_sizes = t.class_sizes;
  cert.mono_edges = t.mono_edges;
  cert.valid = t.strongly_balanced();
  return cert;
}

Construction equitable3(const Tree& t, std::optional<VertexPair> constraint) {
  const Vertex n = t.order();
  if (3 * t.max_degree() > n) {
    throw Error(ErrorCode::kDegreeTooHigh, "max degree " + std::to_string(t.max_degree()) +
                                               " exceeds n/3 for n = " + std::to_string(n));
  }
  Level level;
  std::vector<VertexPair> differ;
  if (constraint) {
    if (pre_leaves(t).size() < 2) {
      throw Error(ErrorCode::kNoTwoPreLeaves, "the tree has fewer than two pre-leaves");
    }
    require_pre_leaf_pair(t, constraint->first, constraint->second);
    level.p = constraint->first;
    level.q = constraint->second;
    differ.push_back(*constraint);
  }
  return checked(t, Engine(t).run(level), differ);
}

Construction two_hub_coloring(const Tree& t, Vertex u, Vertex v, Vertex p, Vertex q) {
  const Vertex n = t.order();
  if (u == v || !t.graph().contains(u) || !t.graph().contains(v)) {
    throw Error(ErrorCode::kPreconditionViolated, "hubs must be two distinct vertices");
  }
  if (3 * t.degree(u) < n || 3 * t.degree(v) < n) {
    throw Error(ErrorCode::kPreconditionViolated, "both hubs need degree >= n/3");
  }
  require_pre_leaf_pair(t, p, q);
  Level level;
  level.pair_mode = true;
  level.u = u;
  level.v = v;
  level.p = p;
  level.q = q;
  return checked(t, Engine(t).run(level), {{u, v}, {p, q}});
}

Construction equitable_k(const Tree& t, int k) {
  if (k < 3) throw Error(ErrorCode::kPreconditionViolated, "k must be at least 3");
  const Vertex n = t.order();
  const Vertex cap = t.max_degree();
  if (static_cast<std::int64_t>(cap) * k > n) {
    throw Error(ErrorCode::kDegreeTooHigh, "max degree " + std::to_string(cap) + " exceeds n/" +
                                               std::to_string(k) + " for n = " + std::to_string(n));
  }
  if (k == 3) return equitable3(t);

  std::vector<std::string> trace;
  std::vector<int> assignment(static_cast<std::size_t>(n) + 1, 0);
  std::optional<Tree> current(t);
  std::vector<Vertex> to_original(static_cast<std::size_t>(n) + 1);
  for (Vertex v = 0; v <= n; ++v) to_original[v] = v;

  for (int level = k; level >= 4; --level) {
    const Vertex m = current->order() / level;
    bool exact_used = false;
    const std::vector<Vertex> layer = independent_low_degree(*current, m, exact_used);
    trace.push_back("reduce-" + std::to_string(level) + (exact_used ? ":exact-mis" : ""));
    for (Vertex v : layer) assignment[to_original[v]] = level;
    InducedSubgraph sub = induced_subgraph(current->graph(), layer);
    std::vector<Vertex> next_original(sub.to_original.size());
    for (std::size_t j = 1; j < sub.to_original.size(); ++j) {
      next_original[j] = to_original[sub.to_original[j]];
    }
    to_original = std::move(next_original);
    current.emplace(complete_forest_to_tree(sub.graph, std::max<Vertex>(cap, 2)));
  }

  Construction inner = equitable3(*current);
  for (Vertex v = 1; v <= current->order(); ++v) assignment[to_original[v]] = inner.coloring[v];
  trace.insert(trace.end(), inner.trace.begin(), inner.trace.end());
  return checked(t, Construction{KColoring(k, std::move(assignment)), std::move(trace)}, {});
}

std::optional<KColoring> brute_force_equitable(const Graph& g, int k, Vertex max_n) {
  if (k < 1) throw Error(ErrorCode::kPreconditionViolated, "k must be positive");
  const Vertex n = g.order();
  if (n > max_n) {
    throw Error(ErrorCode::kTooLarge,
                "search limited to n <= " + std::to_string(max_n) + ", got " + std::to_string(n));
  }
  if (n == 0) return KColoring(0, k);
  const Vertex q = n / k;
  const Vertex r = n % k;

  std::vector<Vertex> order;
  {
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (Vertex s = 1; s <= n; ++s) {
      if (seen[s]) continue;
      seen[s] = 1;
      const std::size_t start = order.size();
      order.push_back(s);
      for (std::size_t head = start; head < order.size(); ++head) {
        for (Vertex w : g.neighbors(order[head])) {
          if (!seen[w]) {
            seen[w] = 1;
            order.push_back(w);
          }
        }
      }
    }
  }

  std::vector<int> color(static_cast<std::size_t>(n) + 1, 0);
  std::vector<Vertex> size(static_cast<std::size_t>(k) + 1, 0);
  std::vector<int> next_color(order.size() + 1, 1);
  std::vector<int> used_before(order.size() + 1, 0);
  Vertex full = 0;
  int used = 0;
  std::size_t depth = 0;
  while (true) {
    if (depth == order.size()) return KColoring(k, color);
    const Vertex v = order[depth];
    bool advanced = false;
    for (int c = next_color[depth]; c <= std::min(k, used + 1); ++c) {
      const Vertex s = size[static_cast<std::size_t>(c)];
      if (s + 1 > q + 1 || (s + 1 == q + 1 && full == r)) continue;
      bool clash = false;
      for (Vertex w : g.neighbors(v)) clash = clash || color[w] == c;
      if (clash) continue;
      color[v] = c;
      ++size[static_cast<std::size_t>(c)];
      if (s + 1 == q + 1) ++full;
      next_color[depth] = c + 1;
      used_before[depth] = used;
      used = std::max(used, c);
      ++depth;
      next_color[depth] = 1;
      advanced = true;
      break;
    }
    if (advanced) continue;
    if (depth == 0) return std::nullopt;
    --depth;
    const Vertex back = order[depth];
    const int c = color[back];
    if (size[static_cast<std::size_t>(c)] == q + 1) --full;
    --size[static_cast<std::size_t>(c)];
    color[back] = 0;
    used = used_before[depth];
  }
}

}  // namespace arbor
