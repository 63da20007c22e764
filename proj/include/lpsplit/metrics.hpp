#pragma once
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "lpsplit/graph.hpp"
#include "lpsplit/labels.hpp"

namespace lpsplit {

/**
 * Per-community arc weights, indexed by label.
 * internal_weight counts each intra-community edge in both directions.
 */
struct CommunityAggregates {
  std::vector<Weight> internal_weight;
  std::vector<Weight> total_weight;
};

CommunityAggregates community_aggregates(const Graph& g, std::span<const Label> labels);

/**
 * Modularity from community aggregates: sum over c of sigma_c/2m - (Sigma_c/2m)^2.
 * Empty when the graph has no edges (m = 0).
 */
std::optional<double> modularity(const Graph& g, std::span<const Label> labels);

/**
 * Modularity by direct pairwise summation,
 * (1/2m) * sum over ordered vertex pairs (i, j) of [A_ij - K_i K_j / 2m] delta(C_i, C_j).
 * O(N^2); meant as a cross-check for modularity() on small graphs.
 */
std::optional<double> modularity_edge_form(const Graph& g, std::span<const Label> labels);

struct CommunitySummary {
  std::size_t num_communities = 0;
  std::size_t min_size = 0;
  std::size_t max_size = 0;
  double mean_size = 0;
  std::optional<double> modularity;
  double fraction_disconnected = 0;
};

CommunitySummary summarize(const Graph& g, std::span<const Label> labels, int worker_count = 1,
                           std::size_t chunk_size = 1024);

}  // namespace lpsplit
