#pragma once
#include <optional>
#include <vector>

#include <json.hpp>

#include "lpsplit/graph.hpp"
#include "lpsplit/lpa.hpp"

namespace lpsplit::cli {

struct BenchConfig {
  std::vector<int> threads{1};
  std::vector<SplitStrategy> strategies{SplitStrategy::none, SplitStrategy::lp, SplitStrategy::lpp,
                                        SplitStrategy::bfs};
  int repeats = 5;
  double tolerance = 0.05;
  int max_iterations = 20;
  std::size_t chunk_size = 1024;
};

/** One timed run of one (strategy, threads) configuration. */
struct BenchRecord {
  SplitStrategy strategy = SplitStrategy::bfs;
  int threads = 1;
  int repeat = 0;
  PhaseTimes times;
  std::optional<double> modularity;
  double fraction_disconnected = 0;
  int iterations = 0;
  std::size_t num_communities = 0;
};

/** Means over the repeats of one configuration. */
struct BenchMean {
  SplitStrategy strategy = SplitStrategy::bfs;
  int threads = 1;
  int runs = 0;
  PhaseTimes times;
  std::optional<double> modularity;
  double fraction_disconnected = 0;
  double iterations = 0;
};

/** Run every (strategy, threads, repeat) combination in that nesting order. */
std::vector<BenchRecord> run_benchmark(const Graph& g, const BenchConfig& config);

std::vector<BenchMean> mean_rows(const std::vector<BenchRecord>& records);

/**
 * Geometric-mean speedup of mean total time per doubling of threads, for one
 * strategy, from the smallest to the largest thread count measured.
 * Empty with fewer than two thread counts.
 */
std::optional<double> per_doubling_speedup(const std::vector<BenchMean>& means, SplitStrategy strategy);

nlohmann::json bench_report(const Graph& g, const BenchConfig& config, const std::vector<BenchRecord>& records);

}  // namespace lpsplit::cli
