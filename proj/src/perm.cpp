#include "fslab/perm.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace fslab {

namespace {

constexpr std::array<std::uint64_t, kMaxPermSize + 1> kFactorials = [] {
  std::array<std::uint64_t, kMaxPermSize + 1> f{};
  f[0] = 1;
  for (int i = 1; i <= kMaxPermSize; ++i) f[i] = f[i - 1] * static_cast<std::uint64_t>(i);
  return f;
}();

void check_size(int n) {
  if (n < 0 || n > kMaxPermSize) {
    throw std::invalid_argument("permutation size must be in [0, 20], got " + std::to_string(n));
  }
}

}  // namespace

std::uint64_t factorial(int n) {
  check_size(n);
  return kFactorials[n];
}

Bijection Bijection::identity(int n) {
  check_size(n);
  Bijection b;
  b.n_ = n;
  for (int i = 0; i < n; ++i) b.map_[i] = static_cast<std::uint8_t>(i);
  return b;
}

Bijection Bijection::from(std::span<const int> map) {
  const int n = static_cast<int>(map.size());
  check_size(n);
  Bijection b;
  b.n_ = n;
  std::uint32_t seen = 0;
  for (int i = 0; i < n; ++i) {
    const int y = map[i];
    if (y < 0 || y >= n || ((seen >> y) & 1u)) {
      throw std::invalid_argument("not a permutation of 0.." + std::to_string(n - 1));
    }
    seen |= 1u << y;
    b.map_[i] = static_cast<std::uint8_t>(y);
  }
  return b;
}

Bijection Bijection::from_raw(const std::uint8_t *map, int n) {
  Bijection b;
  b.n_ = n;
  std::copy(map, map + n, b.map_.begin());
  return b;
}

int Bijection::preimage(int y) const {
  for (int x = 0; x < n_; ++x) {
    if (map_[x] == y) return x;
  }
  throw std::out_of_range("value " + std::to_string(y) + " not in bijection range");
}

Bijection Bijection::inverse() const {
  Bijection inv;
  inv.n_ = n_;
  for (int x = 0; x < n_; ++x) inv.map_[map_[x]] = static_cast<std::uint8_t>(x);
  return inv;
}

std::vector<int> Bijection::to_vector() const { return {map_.begin(), map_.begin() + n_}; }

bool Bijection::operator==(const Bijection &o) const {
  return n_ == o.n_ && std::equal(map_.begin(), map_.begin() + n_, o.map_.begin());
}

std::uint64_t rank_of(const std::uint8_t *map, int n) {
  std::uint32_t unused = static_cast<std::uint32_t>((std::uint64_t{1} << n) - 1);
  std::uint64_t r = 0;
  for (int i = 0; i < n; ++i) {
    const std::uint32_t below = unused & ((1u << map[i]) - 1u);
    r += static_cast<std::uint64_t>(std::popcount(below)) * kFactorials[n - 1 - i];
    unused &= ~(1u << map[i]);
  }
  return r;
}

void unrank_into(std::uint64_t index, int n, std::uint8_t *map) {
  std::uint32_t unused = static_cast<std::uint32_t>((std::uint64_t{1} << n) - 1);
  for (int i = 0; i < n; ++i) {
    const std::uint64_t f = kFactorials[n - 1 - i];
    auto digit = static_cast<int>(index / f);
    index %= f;
    // digit-th smallest unused value
    std::uint32_t bits = unused;
    for (int k = 0; k < digit; ++k) bits &= bits - 1;
    const int value = std::countr_zero(bits);
    map[i] = static_cast<std::uint8_t>(value);
    unused &= ~(1u << value);
  }
}

PermRank rank(const Bijection &b) { return {rank_of(b.data(), b.size()), b.size()}; }

Bijection unrank(PermRank r) {
  check_size(r.n);
  if (r.index >= kFactorials[r.n]) {
    throw std::out_of_range("rank " + std::to_string(r.index) + " outside [0, " +
                            std::to_string(kFactorials[r.n]) + ")");
  }
  std::array<std::uint8_t, kMaxPermSize> raw{};
  unrank_into(r.index, r.n, raw.data());
  return Bijection::from_raw(raw.data(), r.n);
}

int sign(const Bijection &b) {
  const int n = b.size();
  std::uint32_t visited = 0;
  int cycles = 0;
  for (int s = 0; s < n; ++s) {
    if ((visited >> s) & 1u) continue;
    ++cycles;
    for (int x = s; !((visited >> x) & 1u); x = b[x]) visited |= 1u << x;
  }
  return (n - cycles) & 1;
}

Bijection apply_value_swap(const Bijection &b, int u, int v) {
  if (u == v) throw std::invalid_argument("value swap needs two distinct vertices");
  Bijection out = b;
  out.swap_positions(b.preimage(u), b.preimage(v));
  return out;
}

SwapSequence reverse_sequence(const SwapSequence &s) { return {s.rbegin(), s.rend()}; }

Bijection apply_value_swaps(Bijection b, const SwapSequence &s) {
  for (const Swap &sw : s) b = apply_value_swap(b, sw.u, sw.v);
  return b;
}

}  // namespace fslab
