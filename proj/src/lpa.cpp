#include "lpsplit/lpa.hpp"

#include <chrono>
#include <stdexcept>
#include <string>

#include <omp.h>

#include "lpsplit/detail/shared.hpp"
#include "lpsplit/split.hpp"

namespace lpsplit {

using detail::load_relaxed;
using detail::store_relaxed;

std::string_view to_string(SplitStrategy s) {
  switch (s) {
    case SplitStrategy::none: return "none";
    case SplitStrategy::lp:   return "lp";
    case SplitStrategy::lpp:  return "lpp";
    case SplitStrategy::bfs:  return "bfs";
  }
  return "?";
}


std::optional<SplitStrategy> parse_split_strategy(std::string_view name) {
  for (auto s : {SplitStrategy::none, SplitStrategy::lp, SplitStrategy::lpp, SplitStrategy::bfs})
    if (name == to_string(s)) return s;
  return std::nullopt;
}


int default_worker_count() { return omp_get_max_threads(); }


void LpaParams::validate() const {
  if (!(tolerance >= 0 && tolerance < 1)) throw std::invalid_argument("tolerance must lie in [0, 1)");
  if (max_iterations < 1) throw std::invalid_argument("max_iterations must be positive");
  if (worker_count < 1) throw std::invalid_argument("worker_count must be positive");
  if (chunk_size < 1) throw std::invalid_argument("chunk_size must be positive");
}




namespace {

template <class Read>
inline void scan_with(LabelAccumulator& acc, const Graph& g, VertexId i, Read read) {
  g.for_each_arc(i, [&](VertexId j, Weight w) {
    if (j != i) acc.add(read(j), w);
  });
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace


void scan_communities(LabelAccumulator& acc, const Graph& g, std::span<const Label> labels, VertexId i) {
  scan_with(acc, g, i, [&](VertexId j) { return labels[j]; });
}


Label best_label(const LabelAccumulator& acc, Label current) {
  Label best = current;
  Weight best_weight = -1;
  for (Label c : acc.labels()) {
    Weight w = acc.get(c);
    if (w > best_weight || (w == best_weight && c < best)) {
      best = c;
      best_weight = w;
    }
  }
  if (acc.empty() || acc.get(current) == best_weight) return current;
  return best;
}


std::size_t lpa_move(const Graph& g, Labels& labels, std::vector<std::uint8_t>& processed,
                     std::span<LabelAccumulator> accumulators) {
  const auto n = static_cast<std::int64_t>(g.num_vertices());
  const int workers = static_cast<int>(accumulators.size());
  std::size_t changed = 0;
  #pragma omp parallel num_threads(workers) reduction(+:changed)
  {
    LabelAccumulator& acc = accumulators[omp_get_thread_num()];
    #pragma omp for schedule(dynamic, 2048)
    for (std::int64_t u = 0; u < n; ++u) {
      auto i = static_cast<VertexId>(u);
      if (load_relaxed(processed[i])) continue;
      store_relaxed(processed[i], std::uint8_t{1});
      acc.clear();
      scan_with(acc, g, i, [&](VertexId j) { return load_relaxed(labels[j]); });
      Label current = load_relaxed(labels[i]);
      Label next = best_label(acc, current);
      if (next == current) continue;
      store_relaxed(labels[i], next);
      ++changed;
      for (VertexId j : g.neighbors(i)) store_relaxed(processed[j], std::uint8_t{0});
    }
  }
  return changed;
}


RunReport lpa(const Graph& g, const LpaParams& params) {
  params.validate();
  const auto start = std::chrono::steady_clock::now();
  const std::size_t n = g.num_vertices();
  RunReport report;
  report.final_labels = identity_labels(n);
  std::vector<std::uint8_t> processed(n, 0);
  std::vector<LabelAccumulator> accumulators;
  accumulators.reserve(params.worker_count);
  for (int t = 0; t < params.worker_count; ++t) accumulators.emplace_back(n);

  for (int iteration = 0; iteration < params.max_iterations; ++iteration) {
    std::size_t changed = lpa_move(g, report.final_labels, processed, accumulators);
    report.delta_n_history.push_back(changed);
    ++report.iterations;
    if (n == 0 || static_cast<double>(changed) / static_cast<double>(n) <= params.tolerance) break;
  }
  report.phase_times.propagation_s = seconds_since(start);

  if (params.split != SplitStrategy::none) {
    const auto split_start = std::chrono::steady_clock::now();
    report.final_labels =
        split_communities(g, report.final_labels, params.split, params.worker_count, params.chunk_size).labels;
    report.phase_times.splitting_s = seconds_since(split_start);
  }
  report.phase_times.total_s = seconds_since(start);
  return report;
}

}  // namespace lpsplit
