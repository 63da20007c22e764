#include "lpsplit/generate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <iomanip>
#include <ostream>
#include <random>
#include <stdexcept>

namespace lpsplit {

namespace {

/** Draws the gap to the next success in a Bernoulli(p) sequence, p in (0, 1]. */
class GeometricSkipper {
 public:
  GeometricSkipper(double p, std::mt19937_64& rng) : log_q_(std::log1p(-p)), rng_(rng) {}

  std::uint64_t next() {
    // Uniform in [0, 1) from the top 53 bits, independent of the standard library's distributions.
    double r = static_cast<double>(rng_() >> 11) * 0x1.0p-53;
    double skip = std::floor(std::log1p(-r) / log_q_);
    if (!(skip < 1e18)) return static_cast<std::uint64_t>(1e18);
    return static_cast<std::uint64_t>(skip);
  }

 private:
  double log_q_;
  std::mt19937_64& rng_;
};

}  // namespace


std::size_t planted_block(std::size_t i, std::size_t n, std::size_t communities) {
  return static_cast<std::size_t>((static_cast<unsigned __int128>(i) * communities) / n);
}


std::vector<Edge> planted_partition_edges(const PlantedPartitionParams& params) {
  const auto [n, k, p_in, p_out, seed] = params;
  if (!(p_in >= 0 && p_in <= 1) || !(p_out >= 0 && p_out <= 1))
    throw std::invalid_argument("probabilities must lie in [0, 1]");
  if (k < 1 || k > std::max<std::size_t>(n, 1)) throw std::invalid_argument("communities must lie in [1, n]");
  if (n >= std::numeric_limits<VertexId>::max()) throw std::invalid_argument("too many vertices");

  // Block b spans [start[b], start[b+1]).
  std::vector<std::size_t> start(k + 1, n);
  for (std::size_t i = n; i-- > 0;) start[planted_block(i, n, k)] = i;
  for (std::size_t b = k; b-- > 0;) start[b] = std::min(start[b], start[b + 1]);

  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  if (p_in > 0) {
    GeometricSkipper skipper(p_in, rng);
    for (std::size_t b = 0; b < k; ++b) {
      // Pairs (v, w) with w < v < size, enumerated row by row.
      const std::uint64_t size = start[b + 1] - start[b];
      std::uint64_t v = 1, w = 0;
      bool first = true;
      while (v < size) {
        std::uint64_t step = skipper.next() + (first ? 0 : 1);
        first = false;
        w += step;
        while (v < size && w >= v) {
          w -= v;
          ++v;
        }
        if (v < size) edges.push_back({static_cast<VertexId>(start[b] + w), static_cast<VertexId>(start[b] + v)});
      }
    }
  }
  if (p_out > 0) {
    GeometricSkipper skipper(p_out, rng);
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = a + 1; b < k; ++b) {
        const std::uint64_t rows = start[a + 1] - start[a];
        const std::uint64_t cols = start[b + 1] - start[b];
        const std::uint64_t total = rows * cols;
        for (std::uint64_t idx = skipper.next(); idx < total; idx += 1 + skipper.next()) {
          edges.push_back({static_cast<VertexId>(start[a] + idx / cols), static_cast<VertexId>(start[b] + idx % cols)});
        }
      }
    }
  }
  return edges;
}


std::vector<Edge> cliques_bridges_edges(std::size_t n, std::size_t communities) {
  if (communities < 1 || communities > n) throw std::invalid_argument("communities must lie in [1, n]");
  std::vector<std::size_t> start(communities + 1);
  for (std::size_t c = 0; c <= communities; ++c) start[c] = c * n / communities;
  std::vector<Edge> edges;
  for (std::size_t c = 0; c < communities; ++c) {
    for (std::size_t i = start[c]; i < start[c + 1]; ++i)
      for (std::size_t j = i + 1; j < start[c + 1]; ++j)
        edges.push_back({static_cast<VertexId>(i), static_cast<VertexId>(j)});
  }
  if (communities >= 2) {
    for (std::size_t c = 0; c < communities; ++c) {
      std::size_t next = (c + 1) % communities;
      edges.push_back({static_cast<VertexId>(start[c + 1] - 1), static_cast<VertexId>(start[next])});
    }
  }
  return edges;
}


void write_edgelist(std::ostream& out, const std::vector<Edge>& edges, const std::string& comment) {
  if (!comment.empty()) out << "# " << comment << '\n';
  bool weighted = false;
  for (const Edge& e : edges) weighted = weighted || e.w != 1.0;
  for (const Edge& e : edges) {
    out << e.u << ' ' << e.v;
    if (weighted) out << ' ' << std::setprecision(17) << e.w;
    out << '\n';
  }
}

}  // namespace lpsplit
