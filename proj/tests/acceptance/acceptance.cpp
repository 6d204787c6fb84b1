// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "arbor/balance.hpp"
#include "arbor/canonical.hpp"
#include "arbor/coloring.hpp"
#include "arbor/equitable.hpp"
#include "arbor/error.hpp"
#include "arbor/experiments.hpp"
#include "arbor/families.hpp"
#include "arbor/prufer.hpp"
#include "arbor/random.hpp"
#include "oracles.hpp"

#ifdef ARBOR_HAVE_CLI
#include "cli.hpp"
#endif

using namespace arbor;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* pattern, double a = 0, double b = 0, double c = 0, double d = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, pattern, a, b, c, d);
  return buf;
}

int failures = 0;

void report(int id, const std::string& name, double limit_s, const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double elapsed = seconds_since(start);
  const bool in_time = limit_s <= 0 || elapsed < limit_s;
  const bool pass = o.pass && in_time;
  if (!pass) ++failures;
  std::printf("[%s] %2d %-34s %s; %.2fs%s\n", pass ? "PASS" : "FAIL", id, name.c_str(),
              o.detail.c_str(), elapsed,
              limit_s > 0 ? fmt(" (limit %.0fs)", limit_s).c_str() : "");
  std::fflush(stdout);
}

Outcome balance_example() {
  const DegreeSequence seq({1, 3, 12, 2, 1, 1, 4, 3});
  BalanceResult r = balance_exact(seq);
  std::vector<double> times;
  for (int i = 0; i < 200; ++i) {
    const auto start = Clock::now();
    r = balance_exact(seq);
    times.push_back(seconds_since(start));
  }
  std::nth_element(times.begin(), times.begin() + 100, times.end());
  const double median_ms = times[100] * 1e3;
  const bool ok = r.F == 3 && r.witness.valid_for(seq) && r.witness.difference() == 3;
  return {ok && median_ms < 1.0,
          fmt("F=%.0f, witness valid=%.0f, median %.4f ms", static_cast<double>(r.F),
              r.witness.valid_for(seq), median_ms)};
}

Outcome closed_forms() {
  int checked = 0, mismatches = 0;
  auto check = [&](const Graph& g, bool expected) {
    ++checked;
    const bool brute = brute_force_balanced(g);
    if (brute != expected || is_balanced_graph(g).has_value() != expected) ++mismatches;
  };
  for (Vertex n = 2; n <= 12; ++n) check(complete_graph(n), n <= 3 || n % 2 == 0);
  for (Vertex n = 2; n <= 12; ++n) check(star_tree(n), n <= 5);
  for (Vertex p = 0; p <= 5; ++p) {
    for (Vertex q = 0; q <= 5; ++q) check(double_star_tree(p, q), std::abs(p - q) <= 3);
  }
  return {mismatches == 0, fmt("%.0f graphs, %.0f mismatches", checked, mismatches)};
}

Outcome characterization() {
  std::uint64_t trees = 0, mismatches = 0;
  for (Vertex n = 2; n <= 8; ++n) {
    trees += enumerate_labeled_trees(n, [&](const Tree& t) {
      const bool brute = brute_force_balanced(t);
      const bool by_degree = balance_exact(DegreeSequence(t.graph().degree_sequence())).F <= 2;
      mismatches += brute != by_degree;
    });
  }
  Rng rng(20);
  std::mt19937_64 eng(21);
  for (int i = 0; i < 1000; ++i) {
    const Vertex n = static_cast<Vertex>(rng.uniform(1, 10));
    const Graph g = oracle::random_graph(n, rng.unit(), eng);
    const bool brute = brute_force_balanced(g);
    const bool by_degree = balance_exact(DegreeSequence(g.degree_sequence())).F <= 2;
    mismatches += brute != by_degree;
  }
  return {trees == 280392 && mismatches == 0,
          fmt("%.0f labeled trees + 1000 graphs, %.0f mismatches", static_cast<double>(trees),
              static_cast<double>(mismatches))};
}

Outcome greedy_bound() {
  Rng rng(30);
  int violations = 0;
  for (int i = 0; i < 100000; ++i) {
    std::vector<std::int64_t> v(static_cast<std::size_t>(rng.uniform(1, 40)));
    for (auto& x : v) x = rng.uniform(1, 50);
    const DegreeSequence seq(v);
    const Partition p = greedy_pair_partition(seq);
    if (!p.valid_for(seq) || p.difference() > seq.max() || p.cardinality_gap() > 1) ++violations;
  }
  return {violations == 0, fmt("100000 sequences, %.0f violations", violations)};
}

Outcome ones_twos() {
  Rng rng(40);
  int violations = 0, above_exact = 0;
  for (int i = 0; i < 10000; ++i) {
    const std::int64_t m = rng.uniform(2, 20);  // twos are present, so max >= 2
    std::vector<std::int64_t> v;
    v.push_back(m);
    const auto ones = rng.uniform(m, m + 10), twos = rng.uniform(m, m + 10);
    v.insert(v.end(), static_cast<std::size_t>(ones), 1);
    v.insert(v.end(), static_cast<std::size_t>(twos), 2);
    const auto extra = rng.uniform(0, 30);
    for (std::int64_t j = 0; j < extra; ++j) v.push_back(rng.uniform(1, m));
    for (std::size_t j = v.size(); j > 1; --j) {
      std::swap(v[j - 1], v[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(j) - 1))]);
    }
    const DegreeSequence seq(v);
    const Partition p = ones_twos_partition(seq);
    if (!p.valid_for(seq) || p.difference() > 2) ++violations;
    if (balance_exact(seq).F > p.difference()) ++above_exact;
  }
  return {violations == 0 && above_exact == 0,
          fmt("10000 sequences, %.0f violations", violations + above_exact)};
}

Outcome small_tree_sweep() {
  std::uint64_t trees = 0, runs = 0, failed = 0, brute_disagree = 0, fallbacks = 0;
  for (Vertex n = 1; n <= 12; ++n) {
    for (const Tree& t : enumerate_unlabeled_trees(n)) {
      if (3 * t.max_degree() > n) continue;
      ++trees;
      bool ok = true;
      auto attempt = [&](std::optional<VertexPair> pair) {
        ++runs;
        try {
          const Construction c = equitable3(t, pair);
          fallbacks += c.fallback_count();
          if (!oracle::strongly_balanced(t, 3, c.coloring.assignment())) ok = false;
          if (pair && c.coloring[pair->first] == c.coloring[pair->second]) ok = false;
        } catch (const Error&) {
          ok = false;
        }
      };
      attempt(std::nullopt);
      const auto pre = pre_leaves(t);
      for (std::size_t i = 0; i < pre.size(); ++i) {
        for (std::size_t j = i + 1; j < pre.size(); ++j) attempt(VertexPair{pre[i], pre[j]});
      }
      failed += !ok;
      const bool witness = brute_force_equitable(t, 3).has_value();
      brute_disagree += witness != ok;
    }
  }
  return {failed == 0 && brute_disagree == 0,
          fmt("%.0f trees, %.0f runs, %.0f failures, %.0f brute-force disagreements",
              static_cast<double>(trees), static_cast<double>(runs), static_cast<double>(failed),
              static_cast<double>(brute_disagree)) +
              fmt(", %.0f fallback steps", static_cast<double>(fallbacks))};
}

Outcome equitable_k_sweep() {
  std::uint64_t failed = 0, rejected = 0, total = 0;
  for (int k = 3; k <= 6; ++k) {
    Rng rng(derive_seed(70, static_cast<std::uint64_t>(k)));
    for (int accepted = 0; accepted < 10000;) {
      const Tree t = sample_labeled_tree(120, rng);
      if (static_cast<std::int64_t>(t.max_degree()) * k > 120) {
        ++rejected;
        continue;
      }
      ++accepted;
      ++total;
      try {
        const Construction c = equitable_k(t, k);
        bool ok = verify_strong_k(t, c.coloring).valid;
        const Vertex q = 120 / k, r = 120 % k;
        std::vector<Vertex> sizes = c.coloring.class_sizes();
        std::sort(sizes.begin(), sizes.end());
        for (int i = 0; i < k; ++i) ok = ok && sizes[i] == (i < k - r ? q : q + 1);
        failed += !ok;
      } catch (const Error&) {
        ++failed;
      }
    }
  }
  return {failed == 0, fmt("%.0f trees (k=3..6), %.0f rejected samples, %.0f failures",
                           static_cast<double>(total), static_cast<double>(rejected),
                           static_cast<double>(failed))};
}

Outcome random_balanced_fraction() {
  ExperimentConfig cfg;
  cfg.n = 200;
  cfg.trials = 10000;
  cfg.seed = 42;
  const ExperimentSummary big = run_balanced_fraction(cfg);
  cfg.n = 6;
  const ExperimentSummary small = run_balanced_fraction(cfg);
  const double exact = exact_balanced_fraction(6).fraction();
  const double sigma = std::sqrt(exact * (1 - exact) / static_cast<double>(cfg.trials));
  const double z = (small.fraction - exact) / sigma;
  const bool certs = big.counts.count("certificate-failure") == 0 &&
                     small.counts.count("certificate-failure") == 0;
  return {big.fraction >= 0.99 && std::abs(z) <= 3.0 && certs,
          fmt("n=200 fraction %.4f; n=6 MC %.4f vs exact %.4f (z=%.2f)", big.fraction,
              small.fraction, exact, z)};
}

Outcome random_equitable_fraction() {
  ExperimentConfig cfg;
  cfg.n = 200;
  cfg.k = 3;
  cfg.trials = 10000;
  const ExperimentSummary s = run_equitable_fraction(cfg);
  const double hit_rate = s.metrics.at("hit_rate");
  return {s.denominator > 0 && s.successes == s.denominator && hit_rate >= 0.999,
          fmt("success among hits %.4f (%.0f/%.0f), hit rate %.4f", s.fraction,
              static_cast<double>(s.successes), static_cast<double>(s.denominator), hit_rate)};
}

Outcome degree_statistics() {
  ExperimentConfig cfg;
  cfg.n = 2000;
  cfg.trials = 2000;
  const ExperimentSummary d = run_degree_stats(cfg);
  const double inv_e = 1.0 / std::exp(1.0);
  const double m1 = d.metrics.at("mean_x1_over_n"), m2 = d.metrics.at("mean_x2_over_n");
  const double v1 = d.metrics.at("var_x1_over_n"), v2 = d.metrics.at("var_x2_over_n");
  const bool stats_ok = std::abs(m1 - inv_e) <= 0.01 && std::abs(m2 - inv_e) <= 0.01 &&
                        std::abs(v1 - inv_e * (1 - 2 * inv_e)) <= 0.02 &&
                        std::abs(v2 - inv_e * (1 - inv_e)) <= 0.02;

  cfg.n = 100000;
  cfg.trials = 200;
  const ExperimentSummary m = run_max_degree(cfg);
  const Vertex lo = m.histogram.begin()->first, hi = m.histogram.rbegin()->first;
  const bool band_ok = m.successes == cfg.trials;
  return {stats_ok && band_ok,
          fmt("X1/n %.4f var %.4f, X2/n %.4f var %.4f", m1, v1, m2, v2) +
              fmt("; d_max in [%.0f,%.0f] within [%.2f,%.2f]", lo, hi, m.metrics.at("wide_lo"),
                  m.metrics.at("wide_hi")) +
              fmt(", tight band share %.3f (reported)", m.metrics.at("tight_band_fraction"))};
}

Outcome prufer_bijection() {
  Rng rng(110);
  int broken = 0;
  for (int i = 0; i < 100000; ++i) {
    const Vertex n = static_cast<Vertex>(rng.uniform(2, 60));
    const PruferSequence code = sample_prufer(n, rng);
    const Tree t = prufer_decode(code, n);
    if (prufer_encode(t) != code) ++broken;
    if (prufer_decode(prufer_encode(t), n) != t) ++broken;
  }
  int bad_counts = 0;
  for (Vertex n = 2; n <= 8; ++n) {
    std::uint64_t expected = 1;
    for (Vertex i = 0; i + 2 < n; ++i) expected *= static_cast<std::uint64_t>(n);
    if (enumerate_labeled_trees(n, [](const Tree&) {}) != expected) ++bad_counts;
  }
  return {broken == 0 && bad_counts == 0,
          fmt("100000 round trips, %.0f broken; %.0f enumeration count mismatches (n=2..8)",
              broken, bad_counts)};
}

#ifdef ARBOR_HAVE_CLI
std::string cli_output(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  if (cli::run_cli(args, out, err) != 0) throw std::runtime_error(err.str());
  return out.str();
}
#endif

Outcome determinism() {
#ifdef ARBOR_HAVE_CLI
  const std::vector<std::vector<std::string>> runs = {
      {"experiment", "balanced", "--n", "150", "--trials", "2000"},
      {"experiment", "equitable", "--n", "150", "--trials", "2000", "--k", "4"},
      {"experiment", "degree-stats", "--n", "500", "--trials", "2000"},
      {"experiment", "max-degree", "--n", "2000", "--trials", "500"},
      {"experiment", "balanced", "--n", "10", "--trials", "3000", "--format", "csv"},
      {"experiment", "equitable", "--n", "11", "--trials", "1000", "--format", "csv"},
  };
  int differing = 0;
  for (const auto& args : runs) {
    const std::string first = cli_output(args);
    const std::string again = cli_output(args);
    auto parallel = args;
    parallel.insert(parallel.end(), {"--workers", "8"});
    const std::string threaded = cli_output(parallel);
    differing += (first != again) + (first != threaded);
  }
  return {differing == 0, fmt("%.0f commands x (repeat, workers=8), %.0f byte differences",
                              static_cast<double>(runs.size()), differing)};
#else
  return {false, "command line tool not built"};
#endif
}

}  // namespace

int main() {
  report(1, "balance example", 0, balance_example);
  report(2, "closed-form families", 5, closed_forms);
  report(3, "degree characterization", 120, characterization);
  report(4, "greedy pair bound", 0, greedy_bound);
  report(5, "ones/twos partition", 0, ones_twos);
  report(6, "3-coloring small-tree sweep", 300, small_tree_sweep);
  report(7, "k-coloring random trees", 60, equitable_k_sweep);
  report(8, "random trees are balanced", 0, random_balanced_fraction);
  report(9, "random trees are k-equitable", 0, random_equitable_fraction);
  report(10, "degree statistics", 180, degree_statistics);
  report(11, "prufer bijection", 0, prufer_bijection);
  report(12, "determinism", 0, determinism);

  ExperimentConfig cfg;
  cfg.trials = 10000;
  std::printf("[INFO] balanced fraction by n:");
  for (Vertex n : {50, 100, 200, 400}) {
    cfg.n = n;
    const ExperimentSummary s = run_balanced_fraction(cfg);
    std::printf(" n=%d %.4f [%.4f,%.4f]", n, s.fraction, s.wilson.lo, s.wilson.hi);
  }
  std::printf("\n%s: %d of 12 criteria failed\n", failures == 0 ? "OK" : "FAILED", failures);
  return failures == 0 ? 0 : 1;
}
