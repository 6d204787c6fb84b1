#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "arbor/graph.hpp"

namespace arbor {

using PruferSequence = std::vector<Vertex>;

/// Standard decoding: repeatedly join the smallest current leaf to the next
/// entry. Throws Error(kBadEntry) on a wrong length or an entry outside 1..n.
Tree prufer_decode(std::span<const Vertex> code, Vertex n);

/// Inverse of prufer_decode. Requires n >= 2.
PruferSequence prufer_encode(const Tree& t);

/// n^(n-2) for n >= 2, 1 for n = 1. Throws kTooLarge on 64-bit overflow.
std::uint64_t labeled_tree_count(Vertex n);

/// Walks every labeled tree on n vertices exactly once, in lexicographic
/// order of the Prufer code.
class LabeledTreeEnumerator {
 public:
  static constexpr Vertex kDefaultMaxN = 8;

  /// Throws kTooLarge when n > max_n.
  explicit LabeledTreeEnumerator(Vertex n, Vertex max_n = kDefaultMaxN);

  /// Advances to the next tree; false once exhausted.
  bool next();

  const PruferSequence& code() const noexcept { return code_; }
  Tree tree() const;

 private:
  Vertex n_;
  PruferSequence code_;
  bool started_ = false;
  bool done_ = false;
};

/// Calls visit on each labeled tree; returns the number visited.
std::uint64_t enumerate_labeled_trees(Vertex n, const std::function<void(const Tree&)>& visit,
                                      Vertex max_n = LabeledTreeEnumerator::kDefaultMaxN);

struct TreeStats {
  Vertex max_degree = 0;
  Vertex x1 = 0;  // vertices of degree 1
  Vertex x2 = 0;  // vertices of degree 2

  friend bool operator==(const TreeStats&, const TreeStats&) = default;
};

TreeStats tree_stats(const Tree& t);

}  // namespace arbor
