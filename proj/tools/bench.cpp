#include "bench.hpp"

#include <algorithm>
#include <cmath>

#include "lpsplit/metrics.hpp"
#include "report.hpp"

namespace lpsplit::cli {

using nlohmann::json;

std::vector<BenchRecord> run_benchmark(const Graph& g, const BenchConfig& config) {
  std::vector<BenchRecord> records;
  for (SplitStrategy strategy : config.strategies) {
    for (int threads : config.threads) {
      LpaParams params;
      params.tolerance = config.tolerance;
      params.max_iterations = config.max_iterations;
      params.split = strategy;
      params.worker_count = threads;
      params.chunk_size = config.chunk_size;
      for (int r = 0; r < config.repeats; ++r) {
        RunReport run = lpa(g, params);
        CommunitySummary s = summarize(g, run.final_labels, threads, config.chunk_size);
        records.push_back({strategy, threads, r, run.phase_times, s.modularity, s.fraction_disconnected,
                           run.iterations, s.num_communities});
      }
    }
  }
  return records;
}


std::vector<BenchMean> mean_rows(const std::vector<BenchRecord>& records) {
  std::vector<BenchMean> means;
  for (const BenchRecord& r : records) {
    auto it = std::find_if(means.begin(), means.end(),
                           [&](const BenchMean& m) { return m.strategy == r.strategy && m.threads == r.threads; });
    if (it == means.end()) {
      BenchMean m;
      m.strategy = r.strategy;
      m.threads = r.threads;
      means.push_back(m);
      it = means.end() - 1;
      if (r.modularity) it->modularity = 0.0;
    }
    ++it->runs;
    it->times.propagation_s += r.times.propagation_s;
    it->times.splitting_s += r.times.splitting_s;
    it->times.total_s += r.times.total_s;
    if (it->modularity && r.modularity) *it->modularity += *r.modularity;
    it->fraction_disconnected += r.fraction_disconnected;
    it->iterations += r.iterations;
  }
  for (BenchMean& m : means) {
    const double k = m.runs;
    m.times.propagation_s /= k;
    m.times.splitting_s /= k;
    m.times.total_s /= k;
    if (m.modularity) *m.modularity /= k;
    m.fraction_disconnected /= k;
    m.iterations /= k;
  }
  return means;
}


std::optional<double> per_doubling_speedup(const std::vector<BenchMean>& means, SplitStrategy strategy) {
  const BenchMean* lo = nullptr;
  const BenchMean* hi = nullptr;
  for (const BenchMean& m : means) {
    if (m.strategy != strategy) continue;
    if (!lo || m.threads < lo->threads) lo = &m;
    if (!hi || m.threads > hi->threads) hi = &m;
  }
  if (!lo || lo->threads == hi->threads || !(hi->times.total_s > 0)) return std::nullopt;
  const double doublings = std::log2(static_cast<double>(hi->threads) / lo->threads);
  return std::pow(lo->times.total_s / hi->times.total_s, 1.0 / doublings);
}


json bench_report(const Graph& g, const BenchConfig& config, const std::vector<BenchRecord>& records) {
  json rows = json::array();
  for (const BenchRecord& r : records) {
    rows.push_back({
      {"strategy", std::string(to_string(r.strategy))},
      {"threads", r.threads},
      {"repeat", r.repeat},
      {"propagation_s", r.times.propagation_s},
      {"splitting_s", r.times.splitting_s},
      {"total_s", r.times.total_s},
      {"modularity", optional_json(r.modularity)},
      {"fraction_disconnected", r.fraction_disconnected},
      {"iterations", r.iterations},
      {"num_communities", r.num_communities},
    });
  }
  const auto means = mean_rows(records);
  json mean_json = json::array();
  for (const BenchMean& m : means) {
    mean_json.push_back({
      {"strategy", std::string(to_string(m.strategy))},
      {"threads", m.threads},
      {"runs", m.runs},
      {"propagation_s", m.times.propagation_s},
      {"splitting_s", m.times.splitting_s},
      {"total_s", m.times.total_s},
      {"modularity", optional_json(m.modularity)},
      {"fraction_disconnected", m.fraction_disconnected},
      {"iterations", m.iterations},
    });
  }
  json scaling = json::object();
  for (SplitStrategy s : config.strategies) scaling[std::string(to_string(s))] = optional_json(per_doubling_speedup(means, s));

  std::vector<std::string> strategies;
  for (SplitStrategy s : config.strategies) strategies.emplace_back(to_string(s));
  return {
    {"graph", graph_json(g)},
    {"config", {
      {"threads", config.threads},
      {"strategies", strategies},
      {"repeats", config.repeats},
      {"tolerance", config.tolerance},
      {"max_iterations", config.max_iterations},
      {"chunk_size", config.chunk_size},
    }},
    {"records", rows},
    {"means", mean_json},
    {"per_doubling_speedup", scaling},
  };
}

}  // namespace lpsplit::cli
