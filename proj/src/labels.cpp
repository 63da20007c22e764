#include "lpsplit/labels.hpp"

#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace lpsplit {

Labels identity_labels(std::size_t n) {
  Labels labels(n);
  std::iota(labels.begin(), labels.end(), Label{0});
  return labels;
}


void validate_labels(const Graph& g, std::span<const Label> labels) {
  const std::size_t n = g.num_vertices();
  if (labels.size() != n)
    throw std::invalid_argument("expected " + std::to_string(n) + " labels, got " + std::to_string(labels.size()));
  for (std::size_t i = 0; i < n; ++i) {
    if (labels[i] >= n)
      throw std::invalid_argument("label " + std::to_string(labels[i]) + " of vertex " + std::to_string(i) +
                                  " is not a vertex id");
  }
}


bool same_partition(std::span<const Label> a, std::span<const Label> b) {
  if (a.size() != b.size()) return false;
  std::unordered_map<Label, Label> forward, backward;
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto [f, fnew] = forward.try_emplace(a[i], b[i]);
    auto [r, rnew] = backward.try_emplace(b[i], a[i]);
    if (f->second != b[i] || r->second != a[i]) return false;
  }
  return true;
}

}  // namespace lpsplit
