#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace arbor {

/// A finite sequence of nonnegative integers d_1..d_n with cached tallies.
///
/// Graph degree sequences are the main source; zero entries (isolated
/// vertices) are accepted so that arbitrary graphs can be analysed.
class DegreeSequence {
 public:
  DegreeSequence() = default;
  /// Throws kPreconditionViolated on a negative entry.
  explicit DegreeSequence(std::vector<std::int64_t> values);

  std::span<const std::int64_t> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }
  std::int64_t operator[](std::size_t i) const { return values_[i]; }  // 0-based

  std::int64_t max() const noexcept { return max_; }
  std::int64_t total() const noexcept { return total_; }
  std::size_t ones() const noexcept { return ones_; }
  std::size_t twos() const noexcept { return twos_; }

 private:
  std::vector<std::int64_t> values_;
  std::int64_t max_ = 0;
  std::int64_t total_ = 0;
  std::size_t ones_ = 0;
  std::size_t twos_ = 0;
};

/// Split of the 1-based positions {1..n} into I and J.
struct Partition {
  std::vector<std::size_t> I;  // ascending
  std::vector<std::size_t> J;  // ascending
  std::int64_t sum_I = 0;
  std::int64_t sum_J = 0;

  std::int64_t difference() const noexcept {
    return sum_I >= sum_J ? sum_I - sum_J : sum_J - sum_I;
  }
  std::int64_t signed_difference() const noexcept { return sum_I - sum_J; }
  std::size_t cardinality_gap() const noexcept {
    return I.size() >= J.size() ? I.size() - J.size() : J.size() - I.size();
  }

  /// Checks disjointness, coverage of 1..n, |I|-|J| <= 1 and the sums.
  bool valid_for(const DegreeSequence& seq) const;
};

struct BalanceResult {
  std::int64_t F = 0;
  Partition witness;
};

/// Exact minimum of |sum_I - sum_J| over splits with |I| = ceil(n/2).
///
/// Pseudo-polynomial DP over (count, sum) with bitset rows; equal values are
/// grouped and split into power-of-two bundles. Among optimal witnesses the one
/// with the fewest DP-chosen items, then the smallest sum, is returned.
/// Throws kPreconditionViolated on an empty sequence.
BalanceResult balance_exact(const DegreeSequence& seq);

/// Largest-pair-first greedy. Sort ascending (stable), pad a virtual 0 in
/// front when n is odd, walk pairs from the top: the side with the larger
/// running sum gets the smaller element, ties give the larger element to I.
/// Guarantees difference <= max(seq) and cardinality gap <= 1.
Partition greedy_pair_partition(const DegreeSequence& seq);

/// Reserves m = max(seq) ones and m twos, greedily splits the rest and then
/// splits the reserved block m/m so that its imbalance cancels the greedy
/// one. Guarantees difference <= 2 and cardinality gap <= 1.
/// Throws kHypothesisViolated unless ones() >= m and twos() >= m.
Partition ones_twos_partition(const DegreeSequence& seq);

}  // namespace arbor
