#pragma once
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "lpsplit/graph.hpp"
#include "lpsplit/labels.hpp"

namespace lpsplit {

/** How internally-disconnected communities are split after propagation. */
enum class SplitStrategy { none, lp, lpp, bfs };

std::string_view to_string(SplitStrategy s);
std::optional<SplitStrategy> parse_split_strategy(std::string_view name);

/** Number of workers used when none is given: the OpenMP default team size. */
int default_worker_count();


/**
 * Options for label propagation.
 */
struct LpaParams {
  /** Converged once at most this fraction of vertices change label in an iteration [0.05]. */
  double tolerance = 0.05;
  /** Upper bound on propagation iterations [20]. */
  int max_iterations = 20;
  /** Post-processing splitter [bfs]. */
  SplitStrategy split = SplitStrategy::bfs;
  /** Worker threads [1]. */
  int worker_count = 1;
  /** Community labels per work-list chunk in the BFS splitter [1024]. */
  std::size_t chunk_size = 1024;

  /** Throws std::invalid_argument on an out-of-range field. */
  void validate() const;
};


/**
 * Per-worker map from community label to accumulated edge weight.
 *
 * Dense over the label domain with a list of touched keys, so lookups never
 * collide and clearing costs only the number of touched labels.
 */
class LabelAccumulator {
 public:
  LabelAccumulator() = default;
  explicit LabelAccumulator(std::size_t label_capacity) : weights_(label_capacity, 0) {}

  void add(Label c, Weight w) {
    if (weights_[c] == 0) keys_.push_back(c);
    weights_[c] += w;
  }
  Weight get(Label c) const { return weights_[c]; }
  /** Labels with a nonzero entry, in insertion order. */
  std::span<const Label> labels() const { return keys_; }
  bool empty() const { return keys_.empty(); }
  std::size_t size() const { return keys_.size(); }
  std::size_t capacity() const { return weights_.size(); }

  void clear() {
    for (Label c : keys_) weights_[c] = 0;
    keys_.clear();
  }

 private:
  std::vector<Label>  keys_;
  std::vector<Weight> weights_;
};


struct PhaseTimes {
  double propagation_s = 0;
  double splitting_s = 0;
  double total_s = 0;
};

/** Outcome of lpa(). */
struct RunReport {
  int iterations = 0;
  /** Labels changed in each propagation iteration. */
  std::vector<std::size_t> delta_n_history;
  PhaseTimes phase_times;
  Labels final_labels;
};


/**
 * Add the weight of every arc i->j (j != i) to acc[labels[j]].
 * acc must be empty on entry.
 */
void scan_communities(LabelAccumulator& acc, const Graph& g, std::span<const Label> labels, VertexId i);

/**
 * Label with the largest accumulated weight. Ties keep current when it is
 * among the maxima, else go to the smallest tied label. Empty acc keeps current.
 */
Label best_label(const LabelAccumulator& acc, Label current);

/**
 * One asynchronous propagation sweep over unprocessed vertices.
 *
 * Each visited vertex is marked processed; a vertex that changes label
 * marks all of its neighbors unprocessed. Runs one worker per accumulator.
 * processed[i] != 0 means vertex i is pruned.
 * @returns number of vertices whose label changed
 */
std::size_t lpa_move(const Graph& g, Labels& labels, std::vector<std::uint8_t>& processed,
                     std::span<LabelAccumulator> accumulators);

/**
 * Label propagation from singleton labels until at most tolerance * N
 * vertices change in an iteration (or max_iterations), followed by the
 * configured splitter.
 */
RunReport lpa(const Graph& g, const LpaParams& params);

}  // namespace lpsplit
