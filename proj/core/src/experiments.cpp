#include "arbor/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <functional>
#include <numbers>
#include <thread>

#include "arbor/balance.hpp"
#include "arbor/coloring.hpp"
#include "arbor/equitable.hpp"
#include "arbor/error.hpp"
#include "arbor/prufer.hpp"
#include "arbor/random.hpp"
#include "arbor/tree_io.hpp"

namespace arbor {
namespace {

constexpr double kInvE = 1.0 / std::numbers::e;
constexpr Vertex kBruteForceMissLimit = 12;

using TrialFn = std::function<TrialRecord(std::uint64_t, const Tree&)>;

std::vector<TrialRecord> run_trials(const ExperimentConfig& cfg, const TrialFn& fn) {
  std::vector<TrialRecord> records(cfg.trials);
  auto work = [&](std::uint64_t first, std::uint64_t stride) {
    for (std::uint64_t i = first; i < cfg.trials; i += stride) {
      Rng rng(derive_seed(cfg.seed, i));
      const Tree t = sample_labeled_tree(cfg.n, rng);
      TrialRecord r = fn(i, t);
      const TreeStats s = tree_stats(t);
      r.trial = i;
      r.n = cfg.n;
      r.max_degree = s.max_degree;
      r.x1 = s.x1;
      r.x2 = s.x2;
      if (r.failure && cfg.n <= kMaxExampleOrder) r.example = format_prufer_line(t);
      records[i] = std::move(r);
    }
  };
  const auto workers = static_cast<std::uint64_t>(
      std::clamp<std::uint64_t>(cfg.workers, 1, std::max<std::uint64_t>(cfg.trials, 1)));
  if (workers == 1) {
    work(0, 1);
    return records;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  for (std::uint64_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        work(w, workers);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return records;
}

Observable observe(const std::vector<TrialRecord>& records,
                   const std::function<double(const TrialRecord&)>& f) {
  Observable o;
  if (records.empty()) return o;
  double sum = 0.0;
  for (const auto& r : records) sum += f(r);
  o.mean = sum / static_cast<double>(records.size());
  if (records.size() < 2) return o;
  double sq = 0.0;
  for (const auto& r : records) sq += (f(r) - o.mean) * (f(r) - o.mean);
  o.variance = sq / static_cast<double>(records.size() - 1);
  return o;
}

ExperimentRun summarize(std::string name, const ExperimentConfig& cfg,
                        std::vector<TrialRecord> records, std::uint64_t successes,
                        std::uint64_t denominator) {
  ExperimentRun run;
  auto& s = run.summary;
  s.experiment = std::move(name);
  s.config = cfg;
  s.successes = successes;
  s.denominator = denominator;
  s.fraction = denominator == 0
                   ? 0.0
                   : static_cast<double>(successes) / static_cast<double>(denominator);
  s.wilson = wilson_interval(successes, denominator);
  for (const auto& r : records) {
    ++s.counts[r.outcome];
    ++s.histogram[r.max_degree];
    if (r.failure && !r.example.empty() && s.failure_examples.size() < kMaxFailureExamples) {
      s.failure_examples.push_back(r.example);
    }
  }
  s.observables["max_degree"] = observe(records, [](const TrialRecord& r) { return r.max_degree; });
  run.records = std::move(records);
  return run;
}

std::uint64_t count_outcome(const std::vector<TrialRecord>& records, std::string_view outcome) {
  return static_cast<std::uint64_t>(std::count_if(
      records.begin(), records.end(), [&](const TrialRecord& r) { return r.outcome == outcome; }));
}

// ln n / ln ln n, defined for n >= 3.
double moon_scale(Vertex n) {
  const double ln = std::log(static_cast<double>(n));
  return ln / std::log(ln);
}

}  // namespace

Interval wilson_interval(std::uint64_t successes, std::uint64_t total, double z) {
  if (total == 0) return {0.0, 1.0};
  const double n = static_cast<double>(total);
  const double p = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = (p + z2 / (2.0 * n)) / denom;
  const double half = z / denom * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n));
  return {std::clamp(std::min(center - half, p), 0.0, 1.0),
          std::clamp(std::max(center + half, p), 0.0, 1.0)};
}

void validate(const ExperimentConfig& cfg, bool needs_k) {
  if (cfg.trials < 1) throw Error(ErrorCode::kPreconditionViolated, "trials must be >= 1");
  if (cfg.n < 2) throw Error(ErrorCode::kPreconditionViolated, "n must be >= 2");
  if (needs_k && cfg.k < 3) throw Error(ErrorCode::kPreconditionViolated, "k must be >= 3");
}

ExperimentRun balanced_trials(const ExperimentConfig& cfg) {
  validate(cfg);
  auto records = run_trials(cfg, [](std::uint64_t, const Tree& t) {
    TrialRecord r;
    const DegreeSequence seq(t.graph().degree_sequence());
    r.value = balance_exact(seq).F;
    if (auto c = is_balanced_graph(t)) {
      r.outcome = verify_balanced(t, *c).balanced ? "balanced" : "certificate-failure";
    } else {
      r.outcome = "unbalanced";
    }
    r.failure = r.outcome != "balanced";
    return r;
  });
  const std::uint64_t ok = count_outcome(records, "balanced");
  std::uint64_t hypothesis = 0;
  for (const auto& r : records) {
    hypothesis += (r.x1 >= r.max_degree && r.x2 >= r.max_degree);
  }
  auto run = summarize("balanced", cfg, std::move(records), ok, cfg.trials);
  auto& s = run.summary;
  s.observables["F"] = observe(run.records, [](const TrialRecord& r) {
    return static_cast<double>(r.value);
  });
  s.metrics["hypothesis_rate"] = static_cast<double>(hypothesis) / static_cast<double>(cfg.trials);
  if (cfg.n <= LabeledTreeEnumerator::kDefaultMaxN) {
    const double exact = exact_balanced_fraction(cfg.n).fraction();
    const double sd = std::sqrt(exact * (1.0 - exact) / static_cast<double>(cfg.trials));
    s.metrics["exact_fraction"] = exact;
    s.metrics["z_exact"] = sd > 0.0 ? (s.fraction - exact) / sd : 0.0;
  }
  return run;
}

ExperimentRun equitable_trials(const ExperimentConfig& cfg) {
  validate(cfg, true);
  const int k = cfg.k;
  auto records = run_trials(cfg, [k](std::uint64_t, const Tree& t) {
    TrialRecord r;
    const bool hit = static_cast<std::int64_t>(t.max_degree()) * k <= t.order();
    if (hit) {
      try {
        Construction c = equitable_k(t, k);
        r.value = static_cast<std::int64_t>(c.fallback_count());
        r.outcome = verify_strong_k(t, c.coloring).valid ? "success" : "failure";
      } catch (const Error&) {
        r.outcome = "failure";
      }
      r.failure = r.outcome == "failure";
    } else if (t.order() <= kBruteForceMissLimit) {
      auto c = brute_force_equitable(t, k);
      r.outcome = c && verify_strong_k(t, *c).valid ? "miss-colorable" : "miss-uncolorable";
    } else {
      r.outcome = "miss";
    }
    return r;
  });
  const std::uint64_t ok = count_outcome(records, "success");
  const std::uint64_t hits = ok + count_outcome(records, "failure");
  std::int64_t fallbacks = 0;
  for (const auto& r : records) fallbacks += r.value;
  auto run = summarize("equitable", cfg, std::move(records), ok, hits);
  run.summary.metrics["hit_rate"] = static_cast<double>(hits) / static_cast<double>(cfg.trials);
  run.summary.metrics["fallback_steps"] = static_cast<double>(fallbacks);
  return run;
}

ExperimentRun degree_stats_trials(const ExperimentConfig& cfg) {
  validate(cfg);
  const bool bound_defined = cfg.n >= 3;
  const double bound = bound_defined ? 2.0 * moon_scale(cfg.n) : 0.0;
  auto records = run_trials(cfg, [&](std::uint64_t, const Tree& t) {
    TrialRecord r;
    const TreeStats s = tree_stats(t);
    const bool below = bound_defined && (s.x1 < bound || s.x2 < bound);
    r.outcome = below ? "below-bound" : "within-bound";
    return r;
  });
  const std::uint64_t ok = count_outcome(records, "within-bound");
  auto run = summarize("degree-stats", cfg, std::move(records), ok, cfg.trials);
  auto& s = run.summary;
  const Observable x1 = observe(run.records, [](const TrialRecord& r) { return r.x1; });
  const Observable x2 = observe(run.records, [](const TrialRecord& r) { return r.x2; });
  s.observables["x1"] = x1;
  s.observables["x2"] = x2;

  const double n = cfg.n;
  const double trials = static_cast<double>(cfg.trials);
  const double var1 = kInvE * (1.0 - 2.0 * kInvE);
  const double var2 = kInvE * (1.0 - kInvE);
  s.metrics["mean_x1_over_n"] = x1.mean / n;
  s.metrics["mean_x2_over_n"] = x2.mean / n;
  s.metrics["var_x1_over_n"] = x1.variance / n;
  s.metrics["var_x2_over_n"] = x2.variance / n;
  s.metrics["ref_mean_over_n"] = kInvE;
  s.metrics["ref_var_x1_over_n"] = var1;
  s.metrics["ref_var_x2_over_n"] = var2;
  s.metrics["z_mean_x1"] = (x1.mean - n * kInvE) / std::sqrt(n * var1 / trials);
  s.metrics["z_mean_x2"] = (x2.mean - n * kInvE) / std::sqrt(n * var2 / trials);
  if (cfg.trials >= 2) {
    const double spread = std::sqrt(2.0 / (trials - 1.0));
    s.metrics["z_var_x1"] = (x1.variance / (n * var1) - 1.0) / spread;
    s.metrics["z_var_x2"] = (x2.variance / (n * var2) - 1.0) / spread;
  }
  s.metrics["count_bound"] = bound;
  s.metrics["violation_rate"] = static_cast<double>(cfg.trials - ok) / trials;
  return run;
}

ExperimentRun max_degree_trials(const ExperimentConfig& cfg) {
  validate(cfg);
  const bool defined = cfg.n >= 3;
  const double scale = defined ? moon_scale(cfg.n) : 0.0;
  const double wide_lo = 0.9 * scale;
  const double wide_hi = 3.0 * std::log(static_cast<double>(cfg.n));
  auto records = run_trials(cfg, [&](std::uint64_t, const Tree& t) {
    TrialRecord r;
    const double d = t.max_degree();
    if (!defined) {
      r.outcome = "no-band";
    } else if (d >= wide_lo && d <= wide_hi) {
      r.outcome = "in-wide-band";
    } else {
      r.outcome = "outside-wide-band";
      r.failure = true;
    }
    return r;
  });
  std::uint64_t tight = 0;
  for (const auto& r : records) {
    tight += defined && r.max_degree > 0.9 * scale && r.max_degree < 1.1 * scale;
  }
  const std::uint64_t ok = defined ? count_outcome(records, "in-wide-band") : cfg.trials;
  auto run = summarize("max-degree", cfg, std::move(records), ok, cfg.trials);
  auto& s = run.summary;
  s.metrics["bands_defined"] = defined ? 1.0 : 0.0;
  if (defined) {
    s.metrics["scale"] = scale;
    s.metrics["wide_lo"] = wide_lo;
    s.metrics["wide_hi"] = wide_hi;
    s.metrics["tight_lo"] = 0.9 * scale;
    s.metrics["tight_hi"] = 1.1 * scale;
    s.metrics["tight_band_fraction"] =
        static_cast<double>(tight) / static_cast<double>(cfg.trials);
  }
  return run;
}

ExperimentSummary run_balanced_fraction(const ExperimentConfig& cfg) {
  return balanced_trials(cfg).summary;
}
ExperimentSummary run_equitable_fraction(const ExperimentConfig& cfg) {
  return equitable_trials(cfg).summary;
}
ExperimentSummary run_degree_stats(const ExperimentConfig& cfg) {
  return degree_stats_trials(cfg).summary;
}
ExperimentSummary run_max_degree(const ExperimentConfig& cfg) {
  return max_degree_trials(cfg).summary;
}

ExactFraction exact_balanced_fraction(Vertex n) {
  ExactFraction out;
  out.total = enumerate_labeled_trees(n, [&](const Tree& t) {
    if (auto c = is_balanced_graph(t); c && verify_balanced(t, *c).balanced) ++out.balanced;
  });
  return out;
}

}  // namespace arbor
