#pragma once
#include <cstddef>

#include "lpsplit/labels.hpp"

namespace lpsplit {

/**
 * Static assignment of community labels to workers: labels are grouped into
 * chunks of chunk_size, and chunks are dealt round-robin to the workers.
 * Worker t owns [t*chunk, (t+1)*chunk) ∪ [(T+t)*chunk, (T+t+1)*chunk) ∪ ...
 */
class WorkList {
 public:
  WorkList(std::size_t worker_id, std::size_t worker_count, std::size_t chunk_size)
      : worker_id_(worker_id), worker_count_(worker_count), chunk_size_(chunk_size) {}

  bool contains(Label c) const { return (c / chunk_size_) % worker_count_ == worker_id_; }

  std::size_t worker_id() const { return worker_id_; }
  std::size_t worker_count() const { return worker_count_; }
  std::size_t chunk_size() const { return chunk_size_; }

 private:
  std::size_t worker_id_;
  std::size_t worker_count_;
  std::size_t chunk_size_;
};

}  // namespace lpsplit
