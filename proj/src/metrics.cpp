#include "lpsplit/metrics.hpp"

#include <algorithm>
#include <limits>

#include "lpsplit/connectivity.hpp"

namespace lpsplit {

CommunityAggregates community_aggregates(const Graph& g, std::span<const Label> labels) {
  const auto n = static_cast<std::int64_t>(g.num_vertices());
  // Per-vertex partials in parallel, then a fixed-order reduction per community.
  std::vector<Weight> internal(n, 0);
  #pragma omp parallel for schedule(dynamic, 2048)
  for (std::int64_t u = 0; u < n; ++u) {
    auto i = static_cast<VertexId>(u);
    Weight sum = 0;
    g.for_each_arc(i, [&](VertexId j, Weight w) {
      if (labels[j] == labels[i]) sum += w;
    });
    internal[i] = sum;
  }
  CommunityAggregates out{std::vector<Weight>(n, 0), std::vector<Weight>(n, 0)};
  for (std::int64_t i = 0; i < n; ++i) {
    out.internal_weight[labels[i]] += internal[i];
    out.total_weight[labels[i]] += g.weighted_degree(static_cast<VertexId>(i));
  }
  return out;
}


std::optional<double> modularity(const Graph& g, std::span<const Label> labels) {
  const double m2 = 2 * g.total_weight_half();
  if (!(m2 > 0)) return std::nullopt;
  auto [sigma, total] = community_aggregates(g, labels);
  double q = 0;
  for (std::size_t c = 0; c < sigma.size(); ++c) {
    if (total[c] == 0) continue;
    double share = total[c] / m2;
    q += sigma[c] / m2 - share * share;
  }
  return q;
}


std::optional<double> modularity_edge_form(const Graph& g, std::span<const Label> labels) {
  const std::size_t n = g.num_vertices();
  const double m2 = 2 * g.total_weight_half();
  if (!(m2 > 0)) return std::nullopt;
  double sum = 0;
  for (std::size_t i = 0; i < n; ++i) {
    auto nbrs = g.neighbors(static_cast<VertexId>(i));
    auto wts = g.neighbor_weights(static_cast<VertexId>(i));
    std::size_t k = 0;
    for (std::size_t j = 0; j < n; ++j) {
      Weight a = 0;
      if (k < nbrs.size() && nbrs[k] == j) a = wts[k++];
      if (labels[i] != labels[j]) continue;
      sum += a - g.weighted_degree(static_cast<VertexId>(i)) * g.weighted_degree(static_cast<VertexId>(j)) / m2;
    }
  }
  return sum / m2;
}


CommunitySummary summarize(const Graph& g, std::span<const Label> labels, int worker_count, std::size_t chunk_size) {
  CommunitySummary s;
  CommunitySizes sizes = community_sizes(g, labels);
  s.min_size = std::numeric_limits<std::size_t>::max();
  for (std::size_t size : sizes) {
    if (size == 0) continue;
    ++s.num_communities;
    s.min_size = std::min(s.min_size, size);
    s.max_size = std::max(s.max_size, size);
  }
  if (s.num_communities == 0) s.min_size = 0;
  else s.mean_size = static_cast<double>(labels.size()) / static_cast<double>(s.num_communities);
  s.modularity = modularity(g, labels);
  s.fraction_disconnected = fraction_disconnected(disconnected_communities(g, labels, worker_count, chunk_size), sizes);
  return s;
}

}  // namespace lpsplit
