#pragma once
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace lpsplit {

using VertexId = std::uint32_t;
using ArcIndex = std::uint64_t;
using Weight   = double;

/** An undirected edge (u, v) with weight w, as given to build_graph(). */
struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  Weight   w = 1.0;

  bool operator==(const Edge&) const = default;
};


/** Raised on invalid graph input, with the offending edge or file location in what(). */
class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};


/**
 * Immutable weighted undirected graph in CSR form.
 *
 * Each undirected edge {i, j} is stored as the two arcs i->j and j->i with
 * equal weight. Neighbors of each vertex are sorted ascending, there are no
 * self-loops, and parallel edges have been merged by summing their weights.
 * Safe to share across threads once built.
 */
class Graph {
 public:
  Graph() : offsets_(1, 0) {}

  std::size_t num_vertices() const { return offsets_.size() - 1; }
  /** Number of stored directed arcs (twice the undirected edge count). */
  std::size_t num_arcs() const { return targets_.size(); }
  /** Sum of undirected edge weights, i.e. half the sum over all stored arcs. */
  Weight total_weight_half() const { return total_weight_half_; }

  std::span<const VertexId> neighbors(VertexId i) const {
    return {targets_.data() + offsets_[i], targets_.data() + offsets_[i + 1]};
  }
  std::span<const Weight> neighbor_weights(VertexId i) const {
    return {weights_.data() + offsets_[i], weights_.data() + offsets_[i + 1]};
  }
  std::size_t degree(VertexId i) const { return offsets_[i + 1] - offsets_[i]; }
  Weight weighted_degree(VertexId i) const { return weighted_degrees_[i]; }

  /** Call f(j, w) for every arc i->j with weight w, in ascending j. */
  template <class F>
  void for_each_arc(VertexId i, F&& f) const {
    for (ArcIndex k = offsets_[i]; k < offsets_[i + 1]; ++k) f(targets_[k], weights_[k]);
  }

  std::span<const ArcIndex> offsets() const { return offsets_; }
  std::span<const VertexId> targets() const { return targets_; }
  std::span<const Weight>   weights() const { return weights_; }
  std::span<const Weight>   weighted_degrees() const { return weighted_degrees_; }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend Graph build_graph(std::size_t n, std::span<const Edge> edges);

  std::vector<ArcIndex> offsets_;
  std::vector<VertexId> targets_;
  std::vector<Weight>   weights_;
  std::vector<Weight>   weighted_degrees_;
  Weight total_weight_half_ = 0;
};


/**
 * Build a graph on vertices [0, n) from undirected edges.
 * Self-loops are dropped and duplicate pairs merged by weight sum.
 * Throws GraphError on an out-of-range vertex or a non-positive weight.
 */
Graph build_graph(std::size_t n, std::span<const Edge> edges);

/** Each undirected edge once, as (u, v, w) with u < v, in CSR order. */
std::vector<Edge> undirected_edges(const Graph& g);


enum class Indexing { zero, one };

struct EdgeListSpec {
  std::filesystem::path path;
  Indexing indexing = Indexing::zero;
  Weight default_weight = 1.0;
};

/** Parse "u v [w]" lines; '#' and '%' lines are comments. */
Graph read_edgelist(std::istream& in, Indexing indexing = Indexing::zero, Weight default_weight = 1.0,
                    const std::string& source = "<stream>");
Graph load_edgelist(const EdgeListSpec& spec);

/** Parse a Matrix Market coordinate file (pattern/real/integer, general/symmetric). */
Graph read_mtx(std::istream& in, const std::string& source = "<stream>");
Graph load_mtx(const std::filesystem::path& path);

}  // namespace lpsplit
