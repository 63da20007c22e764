#include "lpsplit/connectivity.hpp"

#include <numeric>

#include <omp.h>

#include "lpsplit/bfs.hpp"
#include "lpsplit/worklist.hpp"

namespace lpsplit {

CommunitySizes community_sizes(const Graph& g, std::span<const Label> labels) {
  CommunitySizes sizes(g.num_vertices(), 0);
  for (Label c : labels) ++sizes[c];
  return sizes;
}


DisconnectedFlags disconnected_communities(const Graph& g, std::span<const Label> labels, int worker_count,
                                           std::size_t chunk_size) {
  const std::size_t n = g.num_vertices();
  DisconnectedFlags flags(n, 0);
  // Shared, but entry c is only read or zeroed by the worker owning c.
  CommunitySizes sizes = community_sizes(g, labels);
  std::vector<std::uint8_t> visited(n, 0);

  #pragma omp parallel num_threads(worker_count)
  {
    const WorkList work(omp_get_thread_num(), omp_get_num_threads(), chunk_size);
    std::vector<VertexId> queue;
    for (std::size_t u = 0; u < n; ++u) {
      auto i = static_cast<VertexId>(u);
      const Label c = labels[i];
      if (!work.contains(c) || sizes[c] == 0) continue;
      std::size_t reached = 0;
      bfs_visit_for_each(visited, queue, g, i,
                         [&](VertexId j) { return labels[j] == c; },
                         [&](VertexId) { ++reached; });
      if (reached < sizes[c]) flags[c] = 1;
      sizes[c] = 0;
    }
  }
  return flags;
}


double fraction_disconnected(std::span<const std::uint8_t> flags, std::span<const std::size_t> sizes) {
  std::size_t communities = 0, disconnected = 0;
  for (std::size_t c = 0; c < sizes.size(); ++c) {
    if (sizes[c] == 0) continue;
    ++communities;
    if (flags[c]) ++disconnected;
  }
  return communities == 0 ? 0.0 : static_cast<double>(disconnected) / static_cast<double>(communities);
}




namespace {

/** Disjoint sets with path halving; the root of each set is its smallest member. */
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), VertexId{0}); }

  VertexId find(VertexId x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(VertexId a, VertexId b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) parent_[b] = a;
    else parent_[a] = b;
  }

 private:
  std::vector<VertexId> parent_;
};

}  // namespace


Labels oracle_components(const Graph& g, std::span<const Label> labels) {
  const std::size_t n = g.num_vertices();
  DisjointSets sets(n);
  auto offsets = g.offsets();
  auto targets = g.targets();
  for (std::size_t i = 0; i < n; ++i) {
    for (ArcIndex k = offsets[i]; k < offsets[i + 1]; ++k) {
      if (labels[i] == labels[targets[k]]) sets.unite(static_cast<VertexId>(i), targets[k]);
    }
  }
  Labels out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = sets.find(static_cast<VertexId>(i));
  return out;
}

}  // namespace lpsplit
