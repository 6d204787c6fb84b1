#include "arbor/balance.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <numeric>

#include "arbor/error.hpp"

namespace arbor {
namespace {

using Word = std::uint64_t;
constexpr std::size_t kWordBits = 64;

struct Bundle {
  std::size_t group;
  std::size_t count;
  std::int64_t weight;  // count * reduced value
};

Partition assemble(const DegreeSequence& seq, std::vector<char> in_I) {
  Partition p;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (in_I[i]) {
      p.I.push_back(i + 1);
      p.sum_I += seq[i];
    } else {
      p.J.push_back(i + 1);
      p.sum_J += seq[i];
    }
  }
  return p;
}

// Subset DP over bundles; IndexT stores, per (count, sum) state, the bundle
// that first reached it, which is enough to backtrack one witness.
template <typename IndexT>
std::vector<std::size_t> choose_bundles(const std::vector<Bundle>& bundles, std::size_t max_count,
                                        std::size_t min_count, std::int64_t total_reduced,
                                        const std::function<std::int64_t(std::size_t, std::int64_t)>& score) {
  const auto sums = static_cast<std::size_t>(total_reduced) + 1;
  const std::size_t words = (sums + kWordBits - 1) / kWordBits;
  constexpr IndexT kNone = std::numeric_limits<IndexT>::max();
  std::vector<Word> reach((max_count + 1) * words, 0);
  std::vector<IndexT> first((max_count + 1) * sums, kNone);
  reach[0] = 1;
  std::vector<Word> shifted(words);

  for (std::size_t j = 0; j < bundles.size(); ++j) {
    const auto [group, cnt, weight] = bundles[j];
    if (cnt > max_count) continue;
    const auto word_shift = static_cast<std::size_t>(weight) / kWordBits;
    const auto bit_shift = static_cast<std::size_t>(weight) % kWordBits;
    for (std::size_t c = max_count - cnt + 1; c-- > 0;) {
      const Word* src = &reach[c * words];
      Word* dst = &reach[(c + cnt) * words];
      for (std::size_t w = 0; w < words; ++w) {
        Word v = 0;
        if (w >= word_shift) {
          v = src[w - word_shift] << bit_shift;
          if (bit_shift != 0 && w > word_shift) v |= src[w - word_shift - 1] >> (kWordBits - bit_shift);
        }
        shifted[w] = v & ~dst[w];
      }
      if (sums % kWordBits != 0) shifted[words - 1] &= (Word{1} << (sums % kWordBits)) - 1;
      for (std::size_t w = 0; w < words; ++w) {
        Word fresh = shifted[w];
        dst[w] |= fresh;
        while (fresh != 0) {
          const auto bit = static_cast<std::size_t>(__builtin_ctzll(fresh));
          first[(c + cnt) * sums + w * kWordBits + bit] = static_cast<IndexT>(j);
          fresh &= fresh - 1;
        }
      }
    }
  }

  std::int64_t best_score = std::numeric_limits<std::int64_t>::max();
  std::size_t best_c = 0;
  std::size_t best_s = 0;
  for (std::size_t c = min_count; c <= max_count; ++c) {
    for (std::size_t w = 0; w < words; ++w) {
      Word bits = reach[c * words + w];
      while (bits != 0) {
        const std::size_t s = w * kWordBits + static_cast<std::size_t>(__builtin_ctzll(bits));
        bits &= bits - 1;
        const std::int64_t sc = score(c, static_cast<std::int64_t>(s));
        if (sc < best_score) {
          best_score = sc;
          best_c = c;
          best_s = s;
        }
      }
    }
  }
  if (best_score == std::numeric_limits<std::int64_t>::max()) {
    throw Error(ErrorCode::kInvariantViolation, "balance DP found no feasible split");
  }

  std::vector<std::size_t> taken;
  std::size_t c = best_c;
  std::size_t s = best_s;
  while (c != 0 || s != 0) {
    const IndexT j = first[c * sums + s];
    if (j == kNone) throw Error(ErrorCode::kInvariantViolation, "balance DP backtrack broke");
    taken.push_back(j);
    c -= bundles[j].count;
    s -= static_cast<std::size_t>(bundles[j].weight);
  }
  return taken;
}

}  // namespace

DegreeSequence::DegreeSequence(std::vector<std::int64_t> values) : values_(std::move(values)) {
  for (std::int64_t v : values_) {
    if (v < 0) throw Error(ErrorCode::kPreconditionViolated, "sequence entries must be >= 0");
    max_ = std::max(max_, v);
    total_ += v;
    ones_ += (v == 1);
    twos_ += (v == 2);
  }
}

bool Partition::valid_for(const DegreeSequence& seq) const {
  const std::size_t n = seq.size();
  if (I.size() + J.size() != n || cardinality_gap() > 1) return false;
  std::vector<char> seen(n + 1, 0);
  std::int64_t si = 0;
  std::int64_t sj = 0;
  for (std::size_t i : I) {
    if (i < 1 || i > n || seen[i]) return false;
    seen[i] = 1;
    si += seq[i - 1];
  }
  for (std::size_t j : J) {
    if (j < 1 || j > n || seen[j]) return false;
    seen[j] = 1;
    sj += seq[j - 1];
  }
  return si == sum_I && sj == sum_J;
}

BalanceResult balance_exact(const DegreeSequence& seq) {
  const std::size_t n = seq.size();
  if (n == 0) throw Error(ErrorCode::kPreconditionViolated, "balance of an empty sequence");
  const std::size_t target = (n + 1) / 2;
  const std::int64_t low = *std::min_element(seq.values().begin(), seq.values().end());

  // Positions grouped by reduced value; value 0 positions are free fillers.
  std::map<std::int64_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < n; ++i) groups[seq[i] - low].push_back(i);
  std::vector<std::size_t> fillers;
  if (auto it = groups.find(0); it != groups.end()) {
    fillers = std::move(it->second);
    groups.erase(it);
  }
  std::vector<std::vector<std::size_t>> members;
  std::vector<Bundle> bundles;
  std::int64_t total_reduced = 0;
  std::size_t nonzero = 0;
  for (auto& [value, positions] : groups) {
    const std::size_t g = members.size();
    std::size_t left = positions.size();
    for (std::size_t size = 1; left > 0; size *= 2) {
      const std::size_t take = std::min(size, left);
      bundles.push_back({g, take, static_cast<std::int64_t>(take) * value});
      left -= take;
    }
    total_reduced += value * static_cast<std::int64_t>(positions.size());
    nonzero += positions.size();
    members.push_back(std::move(positions));
  }

  const std::size_t max_count = std::min(target, nonzero);
  const std::size_t min_count = target > fillers.size() ? target - fillers.size() : 0;
  const std::int64_t total = seq.total();
  const std::int64_t base = static_cast<std::int64_t>(target) * low;
  auto score = [&](std::size_t, std::int64_t s) {
    const std::int64_t d = 2 * (s + base) - total;
    return d < 0 ? -d : d;
  };
  // Ties go to the first state met, i.e. the smallest count and then sum.
  std::vector<std::size_t> taken =
      bundles.size() < std::numeric_limits<std::uint8_t>::max()
          ? choose_bundles<std::uint8_t>(bundles, max_count, min_count, total_reduced, score)
          : choose_bundles<std::uint32_t>(bundles, max_count, min_count, total_reduced, score);

  std::vector<std::size_t> per_group(members.size(), 0);
  std::size_t chosen = 0;
  for (std::size_t j : taken) {
    per_group[bundles[j].group] += bundles[j].count;
    chosen += bundles[j].count;
  }
  std::vector<char> in_I(n, 0);
  for (std::size_t g = 0; g < members.size(); ++g) {
    for (std::size_t i = 0; i < per_group[g]; ++i) in_I[members[g][i]] = 1;
  }
  for (std::size_t i = 0; i < target - chosen; ++i) in_I[fillers[i]] = 1;

  BalanceResult result;
  result.witness = assemble(seq, std::move(in_I));
  result.F = result.witness.difference();
  return result;
}

Partition greedy_pair_partition(const DegreeSequence& seq) {
  const std::size_t n = seq.size();
  if (n == 0) throw Error(ErrorCode::kPreconditionViolated, "greedy split of an empty sequence");
  // Entries are 1-based positions; 0 stands for the virtual padding zero.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{1});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return seq[a - 1] < seq[b - 1]; });
  if (n % 2 == 1) order.insert(order.begin(), 0);
  auto value = [&](std::size_t pos) { return pos == 0 ? std::int64_t{0} : seq[pos - 1]; };

  std::vector<char> in_I(n, 0);
  std::int64_t sum_I = 0;
  std::int64_t sum_J = 0;
  for (std::size_t top = order.size(); top >= 2; top -= 2) {
    const std::size_t hi = order[top - 1];
    const std::size_t lo = order[top - 2];
    const bool I_heavier = sum_I > sum_J;
    const std::size_t to_I = I_heavier ? lo : hi;
    const std::size_t to_J = I_heavier ? hi : lo;
    sum_I += value(to_I);
    sum_J += value(to_J);
    if (to_I != 0) in_I[to_I - 1] = 1;
  }
  return assemble(seq, std::move(in_I));
}

Partition ones_twos_partition(const DegreeSequence& seq) {
  const std::int64_t m = seq.max();
  if (static_cast<std::int64_t>(seq.ones()) < m || static_cast<std::int64_t>(seq.twos()) < m) {
    throw Error(ErrorCode::kHypothesisViolated,
                "needs at least max(seq) = " + std::to_string(m) + " ones and twos, found " +
                    std::to_string(seq.ones()) + " and " + std::to_string(seq.twos()));
  }
  std::vector<std::size_t> ones;
  std::vector<std::size_t> twos;
  std::vector<std::size_t> rest;  // 0-based positions
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (seq[i] == 1 && static_cast<std::int64_t>(ones.size()) < m) {
      ones.push_back(i);
    } else if (seq[i] == 2 && static_cast<std::int64_t>(twos.size()) < m) {
      twos.push_back(i);
    } else {
      rest.push_back(i);
    }
  }

  std::vector<char> in_I(seq.size(), 0);
  std::int64_t D = 0;
  if (!rest.empty()) {
    std::vector<std::int64_t> values;
    for (std::size_t i : rest) values.push_back(seq[i]);
    const Partition inner = greedy_pair_partition(DegreeSequence(std::move(values)));
    for (std::size_t local : inner.I) in_I[rest[local - 1]] = 1;
    D = inner.signed_difference();
  }
  // I takes t twos and m - t ones: the block contributes 2t - m to sum_I - sum_J.
  const std::int64_t t = std::clamp<std::int64_t>((m - D) / 2, 0, m);
  for (std::int64_t i = 0; i < t; ++i) in_I[twos[static_cast<std::size_t>(i)]] = 1;
  for (std::int64_t i = 0; i < m - t; ++i) in_I[ones[static_cast<std::size_t>(i)]] = 1;
  return assemble(seq, std::move(in_I));
}

}  // namespace arbor
