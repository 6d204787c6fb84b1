#pragma once

#include <cstdint>
#include <random>

#include "arbor/graph.hpp"
#include "arbor/prufer.hpp"

namespace arbor {

/// splitmix64 finalizer over (master, index): the seed of trial `index`.
/// Depends only on its arguments, so trial streams do not depend on how many
/// trials run or on which worker runs them.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) noexcept;

/// 64-bit Mersenne Twister with a bounded-uniform draw that is defined here
/// rather than by the standard library, so streams are identical across
/// toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [lo, hi] (rejection sampling, no modulo bias).
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);

  /// Uniform double in [0, 1) with 53 random bits.
  double unit();

 private:
  std::mt19937_64 engine_;
};

/// Uniform code over {1..n}^(n-2).
PruferSequence sample_prufer(Vertex n, Rng& rng);

/// Uniform labeled tree on n >= 1 vertices.
Tree sample_labeled_tree(Vertex n, Rng& rng);
Tree sample_labeled_tree(Vertex n, std::uint64_t seed);

}  // namespace arbor
