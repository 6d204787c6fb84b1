#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "arbor/graph.hpp"

namespace arbor {

struct ExperimentConfig {
  Vertex n = 0;
  std::uint64_t trials = 0;
  int k = 3;  // equitable runs only
  std::uint64_t seed = 42;
  unsigned workers = 1;
};

struct Interval {
  double lo = 0.0;
  double hi = 1.0;
};

/// Sample mean and unbiased sample variance.
struct Observable {
  double mean = 0.0;
  double variance = 0.0;
};

/// Aggregate of one experiment. Outcome counts sum to the number of trials;
/// `fraction` is successes / denominator and lies inside `wilson`.
struct ExperimentSummary {
  std::string experiment;
  ExperimentConfig config;
  std::uint64_t successes = 0;
  std::uint64_t denominator = 0;
  double fraction = 0.0;
  Interval wilson;
  std::map<std::string, std::uint64_t> counts;
  std::map<std::string, Observable> observables;
  std::map<std::string, double> metrics;
  std::map<Vertex, std::uint64_t> histogram;  // max degree -> trees
  std::vector<std::string> failure_examples;  // Prufer lines, at most 10
};

/// Per-trial observation. `value` is F for balanced runs and the number of
/// fallback steps for equitable runs.
struct TrialRecord {
  std::uint64_t trial = 0;
  Vertex n = 0;
  Vertex max_degree = 0;
  Vertex x1 = 0;
  Vertex x2 = 0;
  std::string outcome;
  std::int64_t value = 0;
  bool failure = false;
  std::string example;  // Prufer line of a failing tree when n is small enough
};

struct ExperimentRun {
  ExperimentSummary summary;
  std::vector<TrialRecord> records;  // trial order
};

inline constexpr std::size_t kMaxFailureExamples = 10;
/// Failing trees larger than this are counted but not serialized.
inline constexpr Vertex kMaxExampleOrder = 2000;

/// 95% Wilson score interval.
Interval wilson_interval(std::uint64_t successes, std::uint64_t total, double z = 1.96);

/// Throws kPreconditionViolated unless trials >= 1, n >= 2 and, when
/// `needs_k`, k >= 3.
void validate(const ExperimentConfig& cfg, bool needs_k = false);

/// Summary plus per-trial records.
///
/// Trial i samples its tree from an Rng seeded with derive_seed(seed, i);
/// trials are spread over `workers` threads and merged in trial order, so the
/// result does not depend on the worker count.
ExperimentRun balanced_trials(const ExperimentConfig& cfg);
ExperimentRun equitable_trials(const ExperimentConfig& cfg);
ExperimentRun degree_stats_trials(const ExperimentConfig& cfg);
ExperimentRun max_degree_trials(const ExperimentConfig& cfg);

/// Balanced verdict from the degree sequence, re-checked with
/// verify_balanced. Successes are certified balanced trees.
ExperimentSummary run_balanced_fraction(const ExperimentConfig& cfg);

/// Trees with k * max_degree <= n go through equitable_k and verify_strong_k;
/// the rest are precondition misses, tried by brute force when n <= 12.
/// denominator = hits, metrics["hit_rate"] = hits / trials.
ExperimentSummary run_equitable_fraction(const ExperimentConfig& cfg);

/// Means and variances of X1, X2 (degree-1 and degree-2 counts) with
/// z-scores against n/e and the variances n(1/e)(1-2/e), n(1/e)(1-1/e).
/// A trial succeeds when both counts reach 2 ln n / ln ln n.
ExperimentSummary run_degree_stats(const ExperimentConfig& cfg);

/// Histogram of max degree. Success means the wide band
/// [0.9 L, 3 ln n] with L = ln n / ln ln n; the tight band (0.9 L, 1.1 L) is
/// reported in metrics. For n <= 2 the bands are undefined and every trial
/// counts as a success.
ExperimentSummary run_max_degree(const ExperimentConfig& cfg);

struct ExactFraction {
  std::uint64_t balanced = 0;
  std::uint64_t total = 0;
  double fraction() const noexcept {
    return total == 0 ? 0.0 : static_cast<double>(balanced) / static_cast<double>(total);
  }
};

/// Share of balanced trees among all labeled trees on n vertices (n <= 8).
ExactFraction exact_balanced_fraction(Vertex n);

}  // namespace arbor
