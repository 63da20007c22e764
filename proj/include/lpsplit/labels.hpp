#pragma once
#include <span>
#include <vector>

#include "lpsplit/graph.hpp"

namespace lpsplit {

/** Community label of a vertex. Labels live in the vertex-id domain [0, N). */
using Label  = VertexId;
using Labels = std::vector<Label>;

/** Labels [0, 1, ..., n-1]: every vertex in its own community. */
Labels identity_labels(std::size_t n);

/** Throws std::invalid_argument unless labels has one entry per vertex, each < N. */
void validate_labels(const Graph& g, std::span<const Label> labels);

/** True when two labelings induce the same partition, regardless of label names. */
bool same_partition(std::span<const Label> a, std::span<const Label> b);

}  // namespace lpsplit
