#pragma once

#include <atomic>
#include <cstdint>
#include <memory>

namespace fslab {

// Lock-free disjoint sets over 0..size-1. Roots always link beneath the
// smaller index, so every set's root is its minimum element regardless of
// the order in which concurrent unions land.
class ConcurrentUnionFind {
 public:
  explicit ConcurrentUnionFind(std::uint64_t size)
      : size_(size), parent_(std::make_unique<std::atomic<std::uint32_t>[]>(size)) {
    for (std::uint64_t i = 0; i < size; ++i) {
      parent_[i].store(static_cast<std::uint32_t>(i), std::memory_order_relaxed);
    }
  }

  std::uint64_t size() const { return size_; }

  std::uint32_t find(std::uint32_t x) {
    while (true) {
      std::uint32_t p = parent_[x].load(std::memory_order_relaxed);
      if (p == x) return x;
      std::uint32_t gp = parent_[p].load(std::memory_order_relaxed);
      if (p != gp) {
        // path halving; losing the race is harmless
        parent_[x].compare_exchange_weak(p, gp, std::memory_order_relaxed);
      }
      x = gp;
    }
  }

  void unite(std::uint32_t a, std::uint32_t b) {
    while (true) {
      a = find(a);
      b = find(b);
      if (a == b) return;
      if (a < b) std::swap(a, b);
      std::uint32_t expected = a;
      if (parent_[a].compare_exchange_strong(expected, b, std::memory_order_acq_rel)) return;
    }
  }

 private:
  std::uint64_t size_;
  std::unique_ptr<std::atomic<std::uint32_t>[]> parent_;
};

}  // namespace fslab
