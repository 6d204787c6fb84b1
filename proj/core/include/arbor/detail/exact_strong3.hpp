#pragma once

#include <span>
#include <utility>
#include <vector>

#include "arbor/detail/working_tree.hpp"

namespace arbor::detail {

/// Exact search for a strongly 3-balanced coloring of the alive part of wt in
/// which every listed pair gets different colors.
///
/// Tree DP: for each vertex and color, the set of reachable (#color 1,
/// #color 2) counts inside its subtree, kept as bitset rows, with per-child
/// prefix tables retained for reconstruction. The listed vertices (at most a
/// handful) are pinned to each admissible color pattern in turn.
///
/// On success writes colors 1..3 into colors[v] for every alive v and
/// returns true. Polynomial, but meant for small or residual trees.
bool solve_strong3_exact(const WorkingTree& wt, std::span<const std::pair<Vertex, Vertex>> differ,
                         std::vector<int>& colors);

}  // namespace arbor::detail
