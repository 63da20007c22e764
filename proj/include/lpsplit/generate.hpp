#pragma once
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "lpsplit/graph.hpp"

namespace lpsplit {

struct PlantedPartitionParams {
  std::size_t n = 0;
  std::size_t communities = 1;
  double p_in = 0;
  double p_out = 0;
  std::uint64_t seed = 0;
};

/**
 * Planted-partition graph: vertices are split into contiguous blocks of
 * near-equal size; each intra-block pair is an edge with probability p_in,
 * each inter-block pair with probability p_out. Deterministic for a seed.
 * Throws std::invalid_argument on bad parameters.
 */
std::vector<Edge> planted_partition_edges(const PlantedPartitionParams& params);

/** Block of vertex i in the planted partition on n vertices. */
std::size_t planted_block(std::size_t i, std::size_t n, std::size_t communities);

/**
 * K cliques of near-equal size on n vertices, joined in a ring by single
 * bridge edges (last vertex of clique k to first vertex of clique k+1).
 */
std::vector<Edge> cliques_bridges_edges(std::size_t n, std::size_t communities);

/** Write "u v" lines (0-based), or "u v w" when any weight differs from 1. */
void write_edgelist(std::ostream& out, const std::vector<Edge>& edges, const std::string& comment = {});

}  // namespace lpsplit
