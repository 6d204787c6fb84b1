#pragma once

#include "arbor/graph.hpp"

namespace arbor {

/// Path 1-2-...-n.
Tree path_tree(Vertex n);

/// Star on n vertices centered at 1.
Tree star_tree(Vertex n);

/// Adjacent centers 1 and 2 carrying p and q pendant leaves respectively.
Tree double_star_tree(Vertex p, Vertex q);

/// Center 1 with one pendant path per entry of legs, of the given lengths.
Tree spider_tree(std::span<const Vertex> legs);

/// Complete graph K_n.
Graph complete_graph(Vertex n);

}  // namespace arbor
