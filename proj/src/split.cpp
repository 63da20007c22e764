#include "lpsplit/split.hpp"

#include <omp.h>

#include "lpsplit/bfs.hpp"
#include "lpsplit/detail/shared.hpp"
#include "lpsplit/worklist.hpp"

namespace lpsplit {

using detail::load_sc;
using detail::store_sc;

// Workers run asynchronously over shared C' and processed flags. Sequentially
// consistent access keeps pruning sound: a worker that marks i processed and
// then reads a stale neighbor label is ordered before that neighbor's writer,
// whose later re-mark of i wins.
SplitResult split_lp(const Graph& g, std::span<const Label> communities, bool prune, int worker_count) {
  const auto n = static_cast<std::int64_t>(g.num_vertices());
  SplitResult result;
  result.labels = identity_labels(g.num_vertices());
  Labels& minimum = result.labels;
  std::vector<std::uint8_t> processed(g.num_vertices(), 0);

  for (;;) {
    std::size_t changed = 0;
    #pragma omp parallel for num_threads(worker_count) schedule(dynamic, 2048) reduction(+:changed)
    for (std::int64_t u = 0; u < n; ++u) {
      auto i = static_cast<VertexId>(u);
      if (prune) {
        if (load_sc(processed[i])) continue;
        store_sc(processed[i], std::uint8_t{1});
      }
      const Label community = communities[i];
      const Label current = load_sc(minimum[i]);
      Label lowest = current;
      for (VertexId j : g.neighbors(i)) {
        if (communities[j] == community) lowest = std::min(lowest, load_sc(minimum[j]));
      }
      if (lowest == current) continue;
      store_sc(minimum[i], lowest);
      ++changed;
      if (prune) {
        for (VertexId j : g.neighbors(i))
          if (communities[j] == community) store_sc(processed[j], std::uint8_t{0});
      }
    }
    ++result.iterations;
    result.changed_total += changed;
    if (changed == 0) break;
  }
  return result;
}


SplitResult split_bfs(const Graph& g, std::span<const Label> communities, int worker_count, std::size_t chunk_size) {
  const std::size_t n = g.num_vertices();
  SplitResult result;
  result.labels = identity_labels(n);
  Labels& split = result.labels;
  // Each cell is read and written only by the worker owning its community.
  std::vector<std::uint8_t> visited(n, 0);

  #pragma omp parallel num_threads(worker_count)
  {
    const WorkList work(omp_get_thread_num(), omp_get_num_threads(), chunk_size);
    std::vector<VertexId> queue;
    for (std::size_t u = 0; u < n; ++u) {
      auto i = static_cast<VertexId>(u);
      const Label c = communities[i];
      if (!work.contains(c) || visited[i]) continue;
      bfs_visit_for_each(visited, queue, g, i,
                         [&](VertexId j) { return communities[j] == c; },
                         [&](VertexId j) { split[j] = i; });
    }
  }
  return result;
}


SplitResult split_communities(const Graph& g, std::span<const Label> communities, SplitStrategy strategy,
                              int worker_count, std::size_t chunk_size) {
  switch (strategy) {
    case SplitStrategy::lp:  return split_lp(g, communities, false, worker_count);
    case SplitStrategy::lpp: return split_lp(g, communities, true, worker_count);
    case SplitStrategy::bfs: return split_bfs(g, communities, worker_count, chunk_size);
    case SplitStrategy::none: break;
  }
  return {Labels(communities.begin(), communities.end())};
}

}  // namespace lpsplit
