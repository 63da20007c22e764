#pragma once
#include <atomic>

// Cell-granular access to arrays shared between OpenMP workers. Stale values
// are fine for callers; torn ones are not.

namespace lpsplit::detail {

template <class T>
inline T load_relaxed(const T& cell) {
  return std::atomic_ref<T>(const_cast<T&>(cell)).load(std::memory_order_relaxed);
}

template <class T>
inline void store_relaxed(T& cell, T value) {
  std::atomic_ref<T>(cell).store(value, std::memory_order_relaxed);
}

template <class T>
inline T load_sc(const T& cell) {
  return std::atomic_ref<T>(const_cast<T&>(cell)).load();
}

template <class T>
inline void store_sc(T& cell, T value) {
  std::atomic_ref<T>(cell).store(value);
}

}  // namespace lpsplit::detail
