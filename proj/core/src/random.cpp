#include "arbor/random.hpp"

#include "arbor/error.hpp"

namespace arbor {

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) noexcept {
  std::uint64_t z = master + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw Error(ErrorCode::kPreconditionViolated, "empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
  if (span == ~std::uint64_t{0}) return static_cast<std::int64_t>(next());
  const std::uint64_t range = span + 1;
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % range);
  std::uint64_t x = next();
  while (x >= limit) x = next();
  return lo + static_cast<std::int64_t>(x % range);
}

double Rng::unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

PruferSequence sample_prufer(Vertex n, Rng& rng) {
  if (n < 1) throw Error(ErrorCode::kPreconditionViolated, "n must be positive");
  PruferSequence code(n >= 2 ? static_cast<std::size_t>(n) - 2 : 0);
  for (Vertex& a : code) a = static_cast<Vertex>(rng.uniform(1, n));
  return code;
}

Tree sample_labeled_tree(Vertex n, Rng& rng) { return prufer_decode(sample_prufer(n, rng), n); }

Tree sample_labeled_tree(Vertex n, std::uint64_t seed) {
  Rng rng(seed);
  return sample_labeled_tree(n, rng);
}

}  // namespace arbor
