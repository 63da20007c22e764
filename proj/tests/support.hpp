#pragma once
// Fixtures, random instance generators and independent reference
// implementations shared by the test binaries.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "lpsplit/graph.hpp"
#include "lpsplit/labels.hpp"

namespace lpsplit::testing {

inline Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (VertexId i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, 1.0});
  return build_graph(n, edges);
}

inline Graph triangle() { return build_graph(3, std::vector<Edge>{{0, 1}, {1, 2}, {0, 2}}); }

inline Graph two_triangles() {
  return build_graph(6, std::vector<Edge>{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
}

/** Two triangles joined by the bridge 2-3. */
inline Graph two_triangles_bridge() {
  return build_graph(6, std::vector<Edge>{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {2, 3}});
}

inline Graph star(std::size_t leaves) {
  std::vector<Edge> edges;
  for (VertexId i = 1; i <= leaves; ++i) edges.push_back({0, i, 1.0});
  return build_graph(leaves + 1, edges);
}

/** Erdos-Renyi style graph with random weights in {0.5, 1, 2, 3}. */
inline std::vector<Edge> random_edges(std::size_t n, double p, std::mt19937_64& rng, bool weighted = true) {
  std::bernoulli_distribution coin(p);
  std::uniform_int_distribution<int> pick(0, 3);
  const double choices[] = {0.5, 1.0, 2.0, 3.0};
  std::vector<Edge> edges;
  for (VertexId i = 0; i < n; ++i)
    for (VertexId j = i + 1; j < n; ++j)
      if (coin(rng)) edges.push_back({i, j, weighted ? choices[pick(rng)] : 1.0});
  return edges;
}

/** Labels drawn from a small random subset of vertex ids, so communities have several members. */
inline Labels random_labels(std::size_t n, std::mt19937_64& rng) {
  if (n == 0) return {};
  std::uniform_int_distribution<std::size_t> groups(1, std::max<std::size_t>(1, n / 2));
  std::size_t k = groups(rng);
  std::uniform_int_distribution<Label> id(0, static_cast<Label>(n - 1));
  std::vector<Label> pool(k);
  for (auto& c : pool) c = id(rng);
  std::uniform_int_distribution<std::size_t> slot(0, k - 1);
  Labels labels(n);
  for (auto& c : labels) c = pool[slot(rng)];
  return labels;
}

/** Random (graph, labels) instance with 1 <= n <= max_n. */
struct Instance {
  Graph graph;
  Labels labels;
};

inline Instance random_instance(std::uint64_t seed, std::size_t max_n = 64) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> size(1, max_n);
  std::uniform_real_distribution<double> density(0.02, 0.3);
  std::size_t n = size(rng);
  auto edges = random_edges(n, density(rng), rng);
  Instance inst{build_graph(n, edges), {}};
  inst.labels = random_labels(n, rng);
  return inst;
}


// REFERENCE IMPLEMENTATIONS
// -------------------------

/** Adjacency as nested ordered maps, built from the input edge list rather than the CSR. */
using AdjacencyMap = std::map<VertexId, std::map<VertexId, double>>;

inline AdjacencyMap adjacency_map(std::size_t n, const std::vector<Edge>& edges) {
  AdjacencyMap adj;
  for (VertexId i = 0; i < n; ++i) adj[i];
  for (const Edge& e : edges) {
    if (e.u == e.v) continue;
    adj[e.u][e.v] += e.w;
    adj[e.v][e.u] += e.w;
  }
  return adj;
}

/**
 * Sequential trace of one pruned propagation sweep in ascending vertex
 * order, with keep-current-else-smallest tie breaking.
 */
inline std::size_t trace_lpa_sweep(const AdjacencyMap& adj, std::vector<Label>& labels,
                                   std::vector<bool>& processed) {
  std::size_t changed = 0;
  for (const auto& [i, nbrs] : adj) {
    if (processed[i]) continue;
    processed[i] = true;
    std::map<Label, double> weight;
    for (const auto& [j, w] : nbrs) weight[labels[j]] += w;
    if (weight.empty()) continue;
    double top = 0;
    for (const auto& [c, w] : weight) top = std::max(top, w);
    Label chosen = labels[i];
    if (!(weight.count(chosen) && weight[chosen] == top)) {
      for (const auto& [c, w] : weight) {
        if (w == top) { chosen = c; break; }
      }
    }
    if (chosen == labels[i]) continue;
    labels[i] = chosen;
    ++changed;
    for (const auto& [j, w] : nbrs) processed[j] = false;
  }
  return changed;
}

struct TraceResult {
  std::vector<Label> labels;
  std::vector<std::size_t> history;
};

inline TraceResult trace_lpa(const AdjacencyMap& adj, double tolerance, int max_iterations) {
  const std::size_t n = adj.size();
  TraceResult out;
  for (VertexId i = 0; i < n; ++i) out.labels.push_back(i);
  std::vector<bool> processed(n, false);
  for (int it = 0; it < max_iterations; ++it) {
    std::size_t changed = trace_lpa_sweep(adj, out.labels, processed);
    out.history.push_back(changed);
    if (n == 0 || static_cast<double>(changed) / n <= tolerance) break;
  }
  return out;
}

/** Modularity over all ordered vertex pairs with a dense adjacency matrix. */
inline double dense_modularity(std::size_t n, const std::vector<Edge>& edges, const std::vector<Label>& labels) {
  std::vector<std::vector<double>> a(n, std::vector<double>(n, 0));
  for (const Edge& e : edges) {
    if (e.u == e.v) continue;
    a[e.u][e.v] += e.w;
    a[e.v][e.u] += e.w;
  }
  std::vector<double> k(n, 0);
  double m2 = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      k[i] += a[i][j];
      m2 += a[i][j];
    }
  double q = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (labels[i] == labels[j]) q += a[i][j] - k[i] * k[j] / m2;
  return q / m2;
}

/** Number of distinct labels. */
inline std::size_t count_labels(const std::vector<Label>& labels) {
  return std::set<Label>(labels.begin(), labels.end()).size();
}

}  // namespace lpsplit::testing
