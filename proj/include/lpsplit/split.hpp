#pragma once
#include <cstddef>
#include <span>

#include "lpsplit/graph.hpp"
#include "lpsplit/labels.hpp"
#include "lpsplit/lpa.hpp"

namespace lpsplit {

/**
 * Labels after splitting. Every connected component of every input
 * community is labeled by its smallest vertex id.
 */
struct SplitResult {
  Labels labels;
  /** Sweeps performed, including the final quiet one (min-label splitters only). */
  int iterations = 0;
  /** Label changes summed over all sweeps (min-label splitters only). */
  std::size_t changed_total = 0;
};

/**
 * Split communities by minimum-label propagation restricted to
 * same-community neighbors. With prune set, only vertices whose
 * same-community neighbors changed are revisited.
 */
SplitResult split_lp(const Graph& g, std::span<const Label> communities, bool prune, int worker_count = 1);

/**
 * Split communities with one BFS per component. Each worker scans all
 * vertices in ascending order and traverses only communities in its
 * WorkList, so no two workers touch the same vertex.
 */
SplitResult split_bfs(const Graph& g, std::span<const Label> communities, int worker_count = 1,
                      std::size_t chunk_size = 1024);

/** Dispatch on strategy; none returns the input labels unchanged. */
SplitResult split_communities(const Graph& g, std::span<const Label> communities, SplitStrategy strategy,
                              int worker_count = 1, std::size_t chunk_size = 1024);

}  // namespace lpsplit
