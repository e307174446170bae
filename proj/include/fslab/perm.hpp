#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace fslab {

// Rank arithmetic stays inside 64 bits up to 20! (about 2.4e18).
inline constexpr int kMaxPermSize = 20;

std::uint64_t factorial(int n);

// A bijection V(X) -> V(Y) stored as map[x] = y: position x of X is occupied
// by person y of Y.
class Bijection {
 public:
  Bijection() = default;

  static Bijection identity(int n);
  // Throws std::invalid_argument unless `map` is a permutation of 0..n-1.
  static Bijection from(std::span<const int> map);
  // No validation; `map` must already hold a permutation of 0..n-1.
  static Bijection from_raw(const std::uint8_t *map, int n);

  int size() const { return n_; }
  int operator[](int x) const { return map_[x]; }
  // Position currently holding person y. Linear scan; see inverse() for bulk use.
  int preimage(int y) const;
  Bijection inverse() const;
  std::vector<int> to_vector() const;
  const std::uint8_t *data() const { return map_.data(); }

  // Exchanges the occupants of positions a and b in place.
  void swap_positions(int a, int b) { std::swap(map_[a], map_[b]); }

  bool operator==(const Bijection &o) const;

 private:
  std::array<std::uint8_t, kMaxPermSize> map_{};
  int n_ = 0;
};

struct PermRank {
  std::uint64_t index = 0;
  int n = 0;
  bool operator==(const PermRank &) const = default;
};

// Lehmer code read in factorial base; identity maps to 0, reversal to n!-1.
PermRank rank(const Bijection &b);
// Throws std::out_of_range when index >= n!.
Bijection unrank(PermRank r);

// Raw-array forms used by the exploration engine.
std::uint64_t rank_of(const std::uint8_t *map, int n);
void unrank_into(std::uint64_t index, int n, std::uint8_t *map);

// 0 for even, 1 for odd.
int sign(const Bijection &b);

// (u, v) o b: the positions holding u and v exchange occupants.
// Throws std::invalid_argument when u == v.
Bijection apply_value_swap(const Bijection &b, int u, int v);

// A swap of two Y-vertices, kept canonical with u < v.
struct Swap {
  int u = 0;
  int v = 0;

  static Swap of(int a, int b) { return a < b ? Swap{a, b} : Swap{b, a}; }
  bool operator==(const Swap &) const = default;
  auto operator<=>(const Swap &) const = default;
};

using SwapSequence = std::vector<Swap>;

SwapSequence reverse_sequence(const SwapSequence &s);

// Applies each value swap without any legality check.
Bijection apply_value_swaps(Bijection b, const SwapSequence &s);

}  // namespace fslab
