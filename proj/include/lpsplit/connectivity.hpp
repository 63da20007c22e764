#pragma once
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "lpsplit/graph.hpp"
#include "lpsplit/labels.hpp"

namespace lpsplit {

/** Vertex count per community label; indexed by label, length N. */
using CommunitySizes = std::vector<std::size_t>;
/** 1 for each internally-disconnected community; indexed by label, length N. */
using DisconnectedFlags = std::vector<std::uint8_t>;

CommunitySizes community_sizes(const Graph& g, std::span<const Label> labels);

/**
 * Flag communities whose induced subgraph is not connected.
 *
 * One community-restricted BFS per community, from its first vertex in
 * ascending order, run by the worker whose WorkList owns the label. A
 * community is disconnected when the BFS reaches fewer than all its vertices.
 */
DisconnectedFlags disconnected_communities(const Graph& g, std::span<const Label> labels, int worker_count = 1,
                                           std::size_t chunk_size = 1024);

/** Flagged communities over non-empty communities; 0 when there are none. */
double fraction_disconnected(std::span<const std::uint8_t> flags, std::span<const std::size_t> sizes);

/**
 * Reference splitter: union-find over same-community edges. Each vertex gets
 * the smallest vertex id of its component within its community.
 */
Labels oracle_components(const Graph& g, std::span<const Label> labels);

}  // namespace lpsplit
