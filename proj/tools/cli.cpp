#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "arbor/balance.hpp"
#include "arbor/canonical.hpp"
#include "arbor/coloring.hpp"
#include "arbor/equitable.hpp"
#include "arbor/error.hpp"
#include "arbor/experiments.hpp"
#include "arbor/prufer.hpp"
#include "arbor/random.hpp"
#include "arbor/tree_io.hpp"

namespace arbor::cli {
namespace {

using nlohmann::json;

constexpr int kSchema = 1;

struct Options {
  Vertex n = 0;
  int k = 3;
  std::uint64_t seed = 42;
  std::uint64_t trials = 1000;
  std::uint64_t count = 1;
  unsigned workers = 1;
  std::string in = "-";
  std::string out;
  std::string format = "json";
  std::string emit = "prufer";
  std::string seq;
  std::string method = "exact";
  std::string experiment;
  std::string coloring_path;
  std::vector<Vertex> constrain;
  bool verify = false;
  bool count_only = false;
  bool unlabeled = false;
};

// The tree being processed, for the invariant-violation dump.
struct Context {
  std::optional<Tree> tree;
};

std::uint64_t default_seed() {
  const char* env = std::getenv("ARBOR_SEED");
  if (env == nullptr || *env == '\0') return 42;
  try {
    std::size_t used = 0;
    const auto seed = std::stoull(env, &used);
    if (used == std::string(env).size()) return seed;
  } catch (const std::exception&) {
  }
  throw Error(ErrorCode::kPreconditionViolated, std::string("ARBOR_SEED is not a number: ") + env);
}

Tree load_tree(const std::string& path) {
  if (path == "-") return read_tree(std::cin);
  std::ifstream file(path);
  if (!file) throw Error(ErrorCode::kParse, "cannot open " + path);
  return read_tree(file);
}

std::vector<std::int64_t> parse_numbers(const std::string& text) {
  std::string spaced = text;
  std::replace(spaced.begin(), spaced.end(), ',', ' ');
  std::istringstream in(spaced);
  std::vector<std::int64_t> out;
  std::string token;
  while (in >> token) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(token, &used));
      if (used != token.size()) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      throw Error(ErrorCode::kParse, "not an integer: " + token);
    }
  }
  return out;
}

void put_partition(json& j, const Partition& p) {
  j["partition_I"] = p.I;
  j["partition_J"] = p.J;
  j["sum_I"] = p.sum_I;
  j["sum_J"] = p.sum_J;
  j["difference"] = p.difference();
}

json to_json(const ExperimentSummary& s) {
  json observables = json::object();
  for (const auto& [name, o] : s.observables) {
    observables[name] = {{"mean", o.mean}, {"variance", o.variance}};
  }
  json histogram = json::array();
  for (const auto& [d, c] : s.histogram) histogram.push_back({d, c});
  return {{"schema", kSchema},
          {"experiment", s.experiment},
          {"config",
           {{"n", s.config.n},
            {"trials", s.config.trials},
            {"k", s.config.k},
            {"seed", s.config.seed}}},
          {"successes", s.successes},
          {"denominator", s.denominator},
          {"fraction_success", s.fraction},
          {"wilson_ci", {s.wilson.lo, s.wilson.hi}},
          {"counts", s.counts},
          {"observables", observables},
          {"metrics", s.metrics},
          {"max_degree_histogram", histogram},
          {"failure_examples", s.failure_examples}};
}

void write_records_csv(std::ostream& out, const std::vector<TrialRecord>& records) {
  out << "trial,n,max_degree,x1,x2,outcome,value\n";
  for (const auto& r : records) {
    out << r.trial << ',' << r.n << ',' << r.max_degree << ',' << r.x1 << ',' << r.x2 << ','
        << r.outcome << ',' << r.value << '\n';
  }
}

json coloring_json(const Tree& t, const KColoring& c, const EquitableCertificate& cert) {
  std::vector<int> colors(c.assignment().begin() + 1, c.assignment().end());
  return {{"schema", kSchema},      {"n", t.order()},
          {"k", c.k()},             {"assignment", colors},
          {"class_sizes", cert.class_sizes},
          {"mono_edges", cert.mono_edges},
          {"valid", cert.valid}};
}

int cmd_sample(const Options& o, std::ostream& out) {
  if (o.n < 1) throw Error(ErrorCode::kPreconditionViolated, "--n must be >= 1");
  if (o.emit == "stats") out << "trial,max_degree,x1,x2\n";
  for (std::uint64_t i = 0; i < o.count; ++i) {
    const Tree t = sample_labeled_tree(o.n, derive_seed(o.seed, i));
    if (o.emit == "edges") {
      if (i > 0) out << '\n';
      write_tree(out, t);
    } else if (o.emit == "stats") {
      const TreeStats s = tree_stats(t);
      out << i << ',' << s.max_degree << ',' << s.x1 << ',' << s.x2 << '\n';
    } else {
      out << format_prufer_line(t) << '\n';
    }
  }
  return kExitOk;
}

int cmd_check(const Options& o, std::ostream& out, Context& ctx) {
  const Tree& t = ctx.tree.emplace(load_tree(o.in));
  std::vector<Vertex> pre, special, leaves;
  for (Vertex v = 1; v <= t.order(); ++v) {
    const VertexClass c = classify_vertex(t, v);
    if (c == VertexClass::kLeaf) leaves.push_back(v);
    if (is_pre_leaf(c)) pre.push_back(v);
    if (c == VertexClass::kSpecialPreLeaf) special.push_back(v);
  }
  const BalanceResult b = balance_exact(DegreeSequence(t.graph().degree_sequence()));
  json j = {{"schema", kSchema},
            {"n", t.order()},
            {"edges", t.graph().edge_count()},
            {"max_degree", t.max_degree()},
            {"leaves", leaves},
            {"pre_leaves", pre},
            {"special", special},
            {"is_string", is_string(t)},
            {"F", b.F},
            {"balanced", b.F <= 2},
            {"canonical", canonical_form(t)}};
  out << j.dump(2) << '\n';
  return kExitOk;
}

int cmd_color(const Options& o, std::ostream& out, Context& ctx) {
  const Tree& t = ctx.tree.emplace(load_tree(o.in));
  if (o.verify) {
    if (o.coloring_path.empty()) {
      throw Error(ErrorCode::kPreconditionViolated, "--verify needs --coloring");
    }
    std::ifstream file(o.coloring_path);
    if (!file) throw Error(ErrorCode::kParse, "cannot open " + o.coloring_path);
    std::stringstream text;
    text << file.rdbuf();
    const auto values = parse_numbers(text.str());
    if (values.size() != static_cast<std::size_t>(t.order())) {
      throw Error(ErrorCode::kPartialColoring, "expected " + std::to_string(t.order()) +
                                                   " colors, got " + std::to_string(values.size()));
    }
    std::vector<int> assignment{0};
    assignment.insert(assignment.end(), values.begin(), values.end());
    const KColoring c(o.k, std::move(assignment));
    out << coloring_json(t, c, verify_strong_k(t, c)).dump(2) << '\n';
    return kExitOk;
  }

  Construction built;
  if (!o.constrain.empty()) {
    if (o.k != 3) throw Error(ErrorCode::kPreconditionViolated, "--constrain requires --k 3");
    built = equitable3(t, VertexPair{o.constrain[0], o.constrain[1]});
  } else if (o.k == 3) {
    built = equitable3(t);
  } else {
    built = equitable_k(t, o.k);
  }
  const EquitableCertificate cert = verify_strong_k(t, built.coloring);
  if (!cert.valid) throw Error(ErrorCode::kInvariantViolation, "constructed coloring failed verification");
  if (o.format == "csv") {
    out << "vertex,color\n";
    for (Vertex v = 1; v <= t.order(); ++v) out << v << ',' << built.coloring[v] << '\n';
    return kExitOk;
  }
  json j = coloring_json(t, built.coloring, cert);
  j["trace"] = built.trace;
  j["fallback_steps"] = built.fallback_count();
  out << j.dump(2) << '\n';
  return kExitOk;
}

int cmd_balance(const Options& o, std::ostream& out, Context& ctx) {
  std::vector<std::int64_t> values;
  if (!o.seq.empty()) {
    values = parse_numbers(o.seq);
  } else {
    values = ctx.tree.emplace(load_tree(o.in)).graph().degree_sequence();
  }
  const DegreeSequence seq(std::move(values));
  json j = {{"schema", kSchema}, {"method", o.method}, {"n", seq.size()}};
  if (o.method == "exact") {
    const BalanceResult r = balance_exact(seq);
    j["F"] = r.F;
    j["balanced"] = r.F <= 2;
    put_partition(j, r.witness);
  } else {
    const Partition p =
        o.method == "greedy" ? greedy_pair_partition(seq) : ones_twos_partition(seq);
    j["balanced"] = p.difference() <= 2;
    put_partition(j, p);
  }
  out << j.dump(2) << '\n';
  return kExitOk;
}

int cmd_experiment(const Options& o, std::ostream& out) {
  ExperimentConfig cfg;
  cfg.n = o.n;
  cfg.trials = o.trials;
  cfg.k = o.k;
  cfg.seed = o.seed;
  cfg.workers = o.workers;
  ExperimentRun run;
  if (o.experiment == "balanced") {
    run = balanced_trials(cfg);
  } else if (o.experiment == "equitable") {
    run = equitable_trials(cfg);
  } else if (o.experiment == "degree-stats") {
    run = degree_stats_trials(cfg);
  } else {
    run = max_degree_trials(cfg);
  }
  if (o.format == "csv") {
    write_records_csv(out, run.records);
  } else {
    out << to_json(run.summary).dump(2) << '\n';
  }
  return kExitOk;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  if (o.unlabeled) {
    const auto trees = enumerate_unlabeled_trees(o.n);
    if (o.count_only) {
      out << trees.size() << '\n';
      return kExitOk;
    }
    for (std::size_t i = 0; i < trees.size(); ++i) {
      if (i > 0) out << '\n';
      write_tree(out, trees[i]);
    }
    return kExitOk;
  }
  if (o.count_only) {
    out << labeled_tree_count(o.n) << '\n';
    return kExitOk;
  }
  enumerate_labeled_trees(o.n, [&](const Tree& t) { out << format_prufer_line(t) << '\n'; });
  return kExitOk;
}

void add_output(CLI::App* cmd, Options& o, std::vector<std::string> formats) {
  cmd->add_option("--out", o.out, "Write to this file instead of stdout");
  cmd->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember(std::move(formats)));
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  Context ctx;
  CLI::App app{"Random tree balance and equitable coloring toolkit", "arbor"};
  app.require_subcommand(1);

  auto* sample = app.add_subcommand("sample", "Sample uniform random labeled trees");
  sample->add_option("--n", o.n, "Number of vertices")->required();
  sample->add_option("--seed", o.seed, "Master seed (default $ARBOR_SEED or 42)");
  sample->add_option("--trials", o.count, "Number of trees")->check(CLI::PositiveNumber);
  sample->add_option("--emit", o.emit, "edges, prufer or stats")
      ->check(CLI::IsMember({"edges", "prufer", "stats"}));
  sample->add_option("--out", o.out, "Write to this file instead of stdout");

  auto* check = app.add_subcommand("check", "Validate a tree and report its structure");
  check->add_option("--in", o.in, "Tree file, - for stdin");
  add_output(check, o, {"json"});

  auto* color = app.add_subcommand("color", "Strongly k-balanced coloring of a tree");
  color->add_option("--k", o.k, "Number of colors")->check(CLI::Range(3, 1 << 20));
  color->add_option("--in", o.in, "Tree file, - for stdin");
  color->add_option("--constrain", o.constrain, "Pre-leaves p q that must differ")
      ->expected(2);
  color->add_flag("--verify", o.verify, "Check the coloring given by --coloring");
  color->add_option("--coloring", o.coloring_path, "File with colors of vertices 1..n");
  add_output(color, o, {"json", "csv"});

  auto* balance = app.add_subcommand("balance", "Balance of an integer sequence");
  auto* seq_opt = balance->add_option("--seq", o.seq, "Comma separated values");
  balance->add_option("--in", o.in, "Tree file whose degree sequence is used")
      ->excludes(seq_opt);
  balance->add_option("--method", o.method, "exact, greedy or ones-twos")
      ->check(CLI::IsMember({"exact", "greedy", "ones-twos"}));
  add_output(balance, o, {"json"});

  auto* experiment = app.add_subcommand("experiment", "Monte Carlo experiments");
  experiment->add_option("name", o.experiment, "balanced, equitable, degree-stats, max-degree")
      ->required()
      ->check(CLI::IsMember({"balanced", "equitable", "degree-stats", "max-degree"}));
  experiment->add_option("--n", o.n, "Tree size")->required();
  experiment->add_option("--trials", o.trials, "Number of trials");
  experiment->add_option("--k", o.k, "Number of colors (equitable)");
  experiment->add_option("--seed", o.seed, "Master seed (default $ARBOR_SEED or 42)");
  experiment->add_option("--workers", o.workers, "Worker threads");
  add_output(experiment, o, {"json", "csv"});

  auto* enumerate = app.add_subcommand("enumerate", "Enumerate trees on n vertices");
  enumerate->add_option("--n", o.n, "Number of vertices")->required();
  enumerate->add_flag("--count-only", o.count_only, "Print only the number of trees");
  enumerate->add_flag("--unlabeled", o.unlabeled, "One tree per isomorphism class");
  enumerate->add_option("--out", o.out, "Write to this file instead of stdout");

  try {
    o.seed = default_seed();
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  std::ofstream file;
  if (!o.out.empty()) {
    file.open(o.out);
    if (!file) {
      err << "error: cannot write " << o.out << '\n';
      return kExitUsage;
    }
  }
  std::ostream& sink = o.out.empty() ? out : file;

  try {
    if (sample->parsed()) return cmd_sample(o, sink);
    if (check->parsed()) return cmd_check(o, sink, ctx);
    if (color->parsed()) return cmd_color(o, sink, ctx);
    if (balance->parsed()) return cmd_balance(o, sink, ctx);
    if (experiment->parsed()) return cmd_experiment(o, sink);
    return cmd_enumerate(o, sink);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kInvariantViolation) {
      err << "error: " << e.what() << '\n';
      return kExitUsage;
    }
    err << "internal error: " << e.what() << '\n';
    if (ctx.tree) err << "offending tree:\n" << format_tree(*ctx.tree);
    return kExitInvariant;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInvariant;
  }
}

}  // namespace arbor::cli
