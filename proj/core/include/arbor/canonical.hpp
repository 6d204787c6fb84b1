#pragma once

#include <string>
#include <vector>

#include "arbor/graph.hpp"

namespace arbor {

/// Vertices minimizing the largest component left after their removal (one
/// or two, ascending).
std::vector<Vertex> centroids(const Tree& t);

/// Isomorphism invariant: parenthesised AHU encoding rooted at the centroid,
/// the smaller of the two encodings when there are two centroids. Two trees
/// are isomorphic iff their canonical forms are equal.
std::string canonical_form(const Tree& t);

/// One labeled representative per isomorphism class of trees on n vertices,
/// grown by leaf extension from n - 1 and deduplicated by canonical form.
/// Deterministic order. Throws kTooLarge when n > max_n.
std::vector<Tree> enumerate_unlabeled_trees(Vertex n, Vertex max_n = 16);

}  // namespace arbor
