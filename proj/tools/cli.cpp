#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "bench.hpp"
#include "lpsplit/connectivity.hpp"
#include "lpsplit/generate.hpp"
#include "lpsplit/membership.hpp"
#include "report.hpp"

namespace lpsplit::cli {

namespace {

/** Raised for bad input or flag values; maps to exit code 2. */
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GraphInput {
  std::string path;
  std::string format;
  int indexing = 0;

  void add_to(CLI::App& app) {
    app.add_option("--input", path, "Graph file")->required();
    app.add_option("--format", format, "mtx or edgelist [from file extension]")
        ->check(CLI::IsMember({"mtx", "edgelist"}));
    app.add_option("--indexing", indexing, "Edge-list vertex id base [0]")->check(CLI::IsMember({0, 1}));
  }

  Graph load() const {
    std::string fmt = format;
    if (fmt.empty()) fmt = std::filesystem::path(path).extension() == ".mtx" ? "mtx" : "edgelist";
    try {
      if (fmt == "mtx") return load_mtx(path);
      return load_edgelist({path, indexing == 1 ? Indexing::one : Indexing::zero, 1.0});
    } catch (const GraphError& e) {
      throw UsageError(e.what());
    }
  }
};


template <class T>
std::vector<T> parse_list(const std::string& text, const std::string& flag, auto parse_one) {
  std::vector<T> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw UsageError(flag + ": empty list item");
    out.push_back(parse_one(item));
  }
  if (out.empty()) throw UsageError(flag + ": empty list");
  return out;
}


SplitStrategy parse_strategy(const std::string& name) {
  auto s = parse_split_strategy(name);
  if (!s) throw UsageError("unknown split strategy '" + name + "'");
  return *s;
}


std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  return out;
}


void emit_json(const nlohmann::json& doc, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << doc.dump(2) << '\n';
    return;
  }
  std::ofstream file = open_output(path);
  file << doc.dump(2) << '\n';
}


std::vector<std::string> reversed(const std::vector<std::string>& args) {
  return {args.rbegin(), args.rend()};
}

}  // namespace


int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Label propagation community detection with connected communities", "lpsplit"};
  app.require_subcommand(1);

  // detect
  GraphInput detect_input;
  LpaParams detect_params;
  detect_params.worker_count = default_worker_count();
  std::string detect_split = "bfs", detect_output, detect_report_path;
  auto* detect_cmd = app.add_subcommand("detect", "Detect communities and write membership and report");
  detect_input.add_to(*detect_cmd);
  detect_cmd->add_option("--tolerance", detect_params.tolerance, "Iteration tolerance [0.05]");
  detect_cmd->add_option("--max-iterations", detect_params.max_iterations, "Iteration limit [20]");
  detect_cmd->add_option("--split", detect_split, "none, lp, lpp or bfs [bfs]");
  detect_cmd->add_option("--threads", detect_params.worker_count, "Worker threads [hardware]");
  detect_cmd->add_option("--chunk-size", detect_params.chunk_size, "Work-list chunk size [1024]");
  detect_cmd->add_option("--output", detect_output, "Membership TSV path");
  detect_cmd->add_option("--report", detect_report_path, "Report JSON path [stdout]");

  // check
  GraphInput check_input;
  std::string check_membership, check_report_path;
  int check_threads = default_worker_count();
  std::size_t check_chunk = 1024;
  auto* check_cmd = app.add_subcommand("check", "Audit a membership for disconnected communities");
  check_input.add_to(*check_cmd);
  check_cmd->add_option("--membership", check_membership, "Membership TSV path")->required();
  check_cmd->add_option("--threads", check_threads, "Worker threads [hardware]");
  check_cmd->add_option("--chunk-size", check_chunk, "Work-list chunk size [1024]");
  check_cmd->add_option("--report", check_report_path, "Report JSON path [stdout]");

  // bench
  GraphInput bench_input;
  BenchConfig bench;
  std::string bench_threads = "1", bench_splits = "none,lp,lpp,bfs", bench_report_path;
  auto* bench_cmd = app.add_subcommand("bench", "Time every strategy and thread count");
  bench_input.add_to(*bench_cmd);
  bench_cmd->add_option("--threads-list", bench_threads, "Comma-separated thread counts [1]");
  bench_cmd->add_option("--split-list", bench_splits, "Comma-separated strategies [none,lp,lpp,bfs]");
  bench_cmd->add_option("--repeats", bench.repeats, "Runs per configuration [5]");
  bench_cmd->add_option("--tolerance", bench.tolerance, "Iteration tolerance [0.05]");
  bench_cmd->add_option("--max-iterations", bench.max_iterations, "Iteration limit [20]");
  bench_cmd->add_option("--chunk-size", bench.chunk_size, "Work-list chunk size [1024]");
  bench_cmd->add_option("--report", bench_report_path, "Report JSON path [stdout]");

  // generate
  std::string gen_model, gen_output;
  PlantedPartitionParams gen;
  auto* gen_cmd = app.add_subcommand("generate", "Write a synthetic edge list");
  gen_cmd->add_option("--model", gen_model, "planted-partition or cliques-bridges")
      ->required()
      ->check(CLI::IsMember({"planted-partition", "cliques-bridges"}));
  gen_cmd->add_option("--n", gen.n, "Vertices")->required();
  gen_cmd->add_option("--communities", gen.communities, "Blocks or cliques")->required();
  gen_cmd->add_option("--p-in", gen.p_in, "Intra-block edge probability");
  gen_cmd->add_option("--p-out", gen.p_out, "Inter-block edge probability");
  gen_cmd->add_option("--seed", gen.seed, "Random seed [0]");
  gen_cmd->add_option("--output", gen_output, "Edge-list path [stdout]");

  try {
    auto argv = reversed(args);
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (*detect_cmd) {
      auto strategy = parse_split_strategy(detect_split);
      if (!strategy) throw UsageError("unknown split strategy '" + detect_split + "'");
      detect_params.split = *strategy;
      try {
        detect_params.validate();
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      Graph g = detect_input.load();
      Detection d = detect(g, detect_params);
      if (!detect_output.empty()) {
        std::ofstream file = open_output(detect_output);
        write_membership(file, d.run.final_labels);
      }
      emit_json(detect_report(g, detect_params, d), detect_report_path, out);
      return kOk;
    }

    if (*check_cmd) {
      if (check_threads < 1 || check_chunk < 1) throw UsageError("--threads and --chunk-size must be positive");
      Graph g = check_input.load();
      Labels labels;
      try {
        labels = load_membership(check_membership);
        validate_labels(g, labels);
      } catch (const std::exception& e) {
        throw UsageError(e.what());
      }
      CommunitySummary s = summarize(g, labels, check_threads, check_chunk);
      DisconnectedFlags flags = disconnected_communities(g, labels, check_threads, check_chunk);
      std::vector<Label> disconnected;
      for (std::size_t c = 0; c < flags.size(); ++c)
        if (flags[c]) disconnected.push_back(static_cast<Label>(c));
      emit_json(check_report(g, s, disconnected), check_report_path, out);
      return disconnected.empty() ? kOk : kDisconnected;
    }

    if (*bench_cmd) {
      bench.threads = parse_list<int>(bench_threads, "--threads-list", [](const std::string& s) {
        int t = 0;
        try {
          std::size_t used = 0;
          t = std::stoi(s, &used);
          if (used != s.size()) t = 0;
        } catch (const std::exception&) {
        }
        if (t < 1) throw UsageError("--threads-list: bad thread count '" + s + "'");
        return t;
      });
      bench.strategies = parse_list<SplitStrategy>(bench_splits, "--split-list", parse_strategy);
      if (bench.repeats < 1) throw UsageError("--repeats must be positive");
      LpaParams probe{bench.tolerance, bench.max_iterations, SplitStrategy::none, 1, bench.chunk_size};
      try {
        probe.validate();
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      Graph g = bench_input.load();
      auto records = run_benchmark(g, bench);
      emit_json(bench_report(g, bench, records), bench_report_path, out);
      return kOk;
    }

    if (*gen_cmd) {
      std::vector<Edge> edges;
      std::ostringstream comment;
      comment << "model=" << gen_model << " n=" << gen.n << " communities=" << gen.communities;
      try {
        if (gen_model == "planted-partition") {
          edges = planted_partition_edges(gen);
          comment << " p_in=" << gen.p_in << " p_out=" << gen.p_out << " seed=" << gen.seed;
        } else {
          edges = cliques_bridges_edges(gen.n, gen.communities);
        }
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      if (gen_output.empty()) {
        write_edgelist(out, edges, comment.str());
      } else {
        std::ofstream file = open_output(gen_output);
        write_edgelist(file, edges, comment.str());
      }
      return kOk;
    }
  } catch (const UsageError& e) {
    err << "lpsplit: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace lpsplit::cli
