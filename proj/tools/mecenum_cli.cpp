// mecenum: enumerate, count, extend, generate, check, and benchmark
// Markov-equivalence-class instances in the text graph format.
//
// Exit codes: 0 success, 1 malformed input, 2 not extendable,
//             3 oracle guard exceeded.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include "mecenum/baselines.hpp"
#include "mecenum/bench.hpp"
#include "mecenum/chordal.hpp"
#include "mecenum/enumerate.hpp"
#include "mecenum/errors.hpp"
#include "mecenum/instances.hpp"
#include "mecenum/io.hpp"
#include "mecenum/meek.hpp"
#include "mecenum/oracle.hpp"

namespace {

using namespace mecenum;

constexpr int kExitOk = 0;
constexpr int kExitMalformed = 1;
constexpr int kExitNotExtendable = 2;
constexpr int kExitOracleGuard = 3;

std::uint64_t run_algo(bench::Algorithm algo, const Pdag& g, const EnumerationSink& sink) {
  switch (algo) {
    case bench::Algorithm::Mcs: return enumerate_pdag(g, sink);
    case bench::Algorithm::Meek: return meek_enum(g, sink);
    case bench::Algorithm::Chickering: return chickering_enum(g, sink);
    case bench::Algorithm::Shd3: return shd3_enum(g, sink);
  }
  throw std::invalid_argument("unknown algorithm");
}

GenModel model_from_string(const std::string& name) {
  if (name == "chordal") return GenModel::Chordal;
  if (name == "dag-uniform") return GenModel::DagUniform;
  if (name == "dag-ba") return GenModel::DagBa;
  throw std::invalid_argument("unknown model: " + name);
}

struct EnumerateArgs {
  std::string algo = "mcs";
  std::string input;
  std::uint64_t limit = 0;  // 0 = unlimited
  std::string output = "-";
};

int cmd_enumerate(const EnumerateArgs& args, bool count_only) {
  Pdag g = read_pdag_file(args.input);
  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!count_only && args.output != "-") {
    file.open(args.output);
    if (!file) throw std::runtime_error("cannot open for writing: " + args.output);
    out = &file;
  }
  std::uint64_t emitted = 0;
  auto sink = [&](const DagView& view) {
    ++emitted;
    if (!count_only) {
      write_pdag(*out, view.materialize());
      *out << '\n';  // blank line between members
    }
    return args.limit == 0 || emitted < args.limit;
  };
  std::uint64_t count = run_algo(bench::algorithm_from_string(args.algo), g, sink);
  if (count_only) std::cout << count << '\n';
  return kExitOk;
}

int cmd_extend(const std::string& input) {
  Pdag g = read_pdag_file(input);
  try {
    std::optional<Pdag> closure = maximal_orientation(g);
    if (!closure) {
      std::cerr << "not extendable\n";
      return kExitNotExtendable;
    }
    write_pdag(std::cout, consistent_extension_mpdag(*closure));
  } catch (const NotExtendableError&) {
    std::cerr << "not extendable\n";
    return kExitNotExtendable;
  }
  return kExitOk;
}

struct GenArgs {
  std::string model = "chordal";
  int n = 16;
  int k = 3;
  std::uint64_t seed = 0;
  bool to_cpdag = false;
  bool to_pdag = false;
};

int cmd_gen(const GenArgs& args) {
  GenConfig cfg;
  cfg.model = model_from_string(args.model);
  cfg.n = args.n;
  cfg.k = args.k;
  cfg.seed = args.seed;
  Pdag g = cfg.model == GenModel::Chordal ? random_chordal(cfg) : random_dag(cfg);
  if (args.to_cpdag || args.to_pdag) {
    if (cfg.model == GenModel::Chordal) {
      // a UCCG already is its own CPDAG
    } else {
      g = dag_to_cpdag(g);
    }
    if (args.to_pdag) g = cpdag_to_pdag(g, cfg);
  }
  std::cout << "# seed=" << args.seed << " model=" << args.model << " n=" << args.n
            << " k=" << args.k << '\n';
  write_pdag(std::cout, g);
  return kExitOk;
}

int cmd_check(const std::string& input) {
  Pdag g = read_pdag_file(input);
  if (g.undirected_edges().size() > static_cast<std::size_t>(oracle::kMaxUndirectedEdges)) {
    std::cerr << "oracle guard exceeded: more than " << oracle::kMaxUndirectedEdges
              << " undirected edges\n";
    return kExitOracleGuard;
  }
  bool all_ok = true;
  for (auto algo : {bench::Algorithm::Mcs, bench::Algorithm::Meek, bench::Algorithm::Chickering,
                    bench::Algorithm::Shd3}) {
    std::vector<Pdag> outputs;
    run_algo(algo, g, [&](const DagView& view) {
      outputs.push_back(view.materialize());
      return true;
    });
    oracle::ValidationReport report = oracle::validate_enumeration(g, outputs);
    std::cout << bench::to_string(algo) << ": " << (report.ok ? "ok" : "FAIL") << " ("
              << report.actual_count << "/" << report.expected_count << " members, "
              << report.duplicates.size() << " dup, " << report.missing.size() << " missing, "
              << report.extra.size() << " extra)\n";
    all_ok = all_ok && report.ok;
  }
  return all_ok ? kExitOk : kExitMalformed;
}

struct BenchArgs {
  std::vector<std::string> algos{"mcs"};
  std::string model = "chordal";
  std::vector<int> sizes{64};
  std::vector<std::uint64_t> seeds{0};
  int k = 3;
  std::uint64_t limit = 0;  // required by the CLI definition
  double max_seconds = 10.0;
  std::string csv;
  std::string stats_csv;
  std::string plot_csv;
  bool parallel = false;
};

int cmd_bench(const BenchArgs& args) {
  struct Job {
    std::string instance_id;
    Pdag graph;
    bench::Algorithm algo;
    std::vector<bench::DelayRecord> records;
  };
  std::vector<Job> jobs;
  GenModel model = model_from_string(args.model);
  for (int n : args.sizes)
    for (std::uint64_t seed : args.seeds) {
      GenConfig cfg;
      cfg.model = model;
      cfg.n = n;
      cfg.k = args.k;
      cfg.seed = seed;
      Pdag g = model == GenModel::Chordal ? random_chordal(cfg) : dag_to_cpdag(random_dag(cfg));
      std::ostringstream id;
      id << args.model << "-n" << n << "-s" << seed;
      if (args.parallel) id << "-par";  // timings taken under thread contention
      for (const std::string& name : args.algos)
        jobs.push_back({id.str(), g, bench::algorithm_from_string(name), {}});
    }

  bench::Budget budget;
  budget.max_outputs = args.limit;
  budget.max_time = std::chrono::nanoseconds(static_cast<std::int64_t>(args.max_seconds * 1e9));
  auto run_job = [&](Job& job) {
    job.records = bench::measure_delays(job.graph, job.algo, budget, job.instance_id, true);
  };
  if (args.parallel) {
    std::vector<std::thread> threads;
    threads.reserve(jobs.size());
    for (Job& job : jobs) threads.emplace_back(run_job, std::ref(job));
    for (std::thread& t : threads) t.join();
  } else {
    for (Job& job : jobs) run_job(job);
  }

  std::vector<bench::DelayRecord> all;
  std::vector<bench::StatsRow> stats;
  std::vector<bench::PlotPoint> plot;
  for (const Job& job : jobs) {
    all.insert(all.end(), job.records.begin(), job.records.end());
    if (job.records.empty()) continue;
    bench::DelayStats s = bench::delay_stats(job.records);
    stats.push_back({bench::to_string(job.algo), job.instance_id, s});
    plot.push_back({bench::to_string(job.algo),
                    static_cast<int>(job.graph.vertex_count()), s.mean_ns / 1e6});
  }
  if (!args.csv.empty()) bench::emit_csv(all, args.csv);
  if (!args.stats_csv.empty()) bench::emit_csv(stats, args.stats_csv);
  if (!args.plot_csv.empty()) {
    std::ofstream out(args.plot_csv);
    if (!out) throw std::runtime_error("cannot open for writing: " + args.plot_csv);
    bench::emit_plot_csv(plot, out);
  }
  for (const bench::StatsRow& row : stats)
    std::cout << row.algorithm << ' ' << row.scenario << ": " << row.stats.count
              << " outputs, mean " << row.stats.mean_ns / 1e6 << " ms\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Markov equivalence class enumeration toolkit"};
  app.require_subcommand(1);

  EnumerateArgs enum_args;
  auto* enumerate = app.add_subcommand("enumerate", "Stream all members of a class");
  enumerate->add_option("--algo", enum_args.algo, "mcs|meek|chickering|shd3");
  enumerate->add_option("--input", enum_args.input, "input graph file")->required();
  enumerate->add_option("--limit", enum_args.limit, "stop after N members (0 = unlimited)");
  enumerate->add_option("--output", enum_args.output, "output file or - for stdout");

  EnumerateArgs count_args;
  auto* count = app.add_subcommand("count", "Count the members of a class");
  count->add_option("--algo", count_args.algo, "mcs|meek|chickering|shd3");
  count->add_option("--input", count_args.input, "input graph file")->required();

  std::string extend_input;
  auto* extend = app.add_subcommand("extend", "Print one consistent extension");
  extend->add_option("--input", extend_input, "input graph file")->required();

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "Generate a random instance");
  gen->add_option("--model", gen_args.model, "chordal|dag-uniform|dag-ba");
  gen->add_option("--n", gen_args.n, "vertex count");
  gen->add_option("--k", gen_args.k, "edge density target m = min(k*n, n(n-1)/2)");
  gen->add_option("--seed", gen_args.seed, "RNG seed");
  gen->add_flag("--to-cpdag", gen_args.to_cpdag, "emit the CPDAG of the instance");
  gen->add_flag("--to-pdag", gen_args.to_pdag, "emit a PDAG with background orientations");

  std::string check_input;
  bool against_oracle = false;
  auto* check = app.add_subcommand("check", "Validate all algorithms against the oracle");
  check->add_option("--input", check_input, "input graph file")->required();
  check->add_flag("--against-oracle", against_oracle, "compare against brute force");

  BenchArgs bench_args;
  auto* bench_cmd = app.add_subcommand("bench", "Measure enumeration delays");
  bench_cmd->add_option("--algos", bench_args.algos, "algorithms to run")->delimiter(',');
  bench_cmd->add_option("--model", bench_args.model, "chordal|dag-uniform|dag-ba");
  bench_cmd->add_option("--sizes", bench_args.sizes, "vertex counts")->delimiter(',');
  bench_cmd->add_option("--seeds", bench_args.seeds, "RNG seeds")->delimiter(',');
  bench_cmd->add_option("--k", bench_args.k, "edge density");
  bench_cmd->add_option("--limit", bench_args.limit, "max outputs per run")->required();
  bench_cmd->add_option("--max-seconds", bench_args.max_seconds, "wall-time cap per run");
  bench_cmd->add_option("--csv", bench_args.csv, "per-output delay records CSV");
  bench_cmd->add_option("--stats-csv", bench_args.stats_csv, "per-run statistics CSV");
  bench_cmd->add_option("--plot-csv", bench_args.plot_csv, "(n, mean ms) series CSV");
  bench_cmd->add_flag("--parallel-instances", bench_args.parallel,
                      "run instances on separate threads (perturbs timings)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*enumerate) return cmd_enumerate(enum_args, false);
    if (*count) return cmd_enumerate(count_args, true);
    if (*extend) return cmd_extend(extend_input);
    if (*gen) return cmd_gen(gen_args);
    if (*check) return cmd_check(check_input);
    if (*bench_cmd) return cmd_bench(bench_args);
  } catch (const TooLargeError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitOracleGuard;
  } catch (const NotExtendableError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNotExtendable;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitMalformed;
  }
  return kExitOk;
}
