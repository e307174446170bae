#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fslab/graph.hpp"
#include "fslab/perm.hpp"

namespace fslab {

// The census refuses larger instances unless the caller raises the cap.
inline constexpr int kDefaultEngineCap = 10;
// Ranks are stored in 32-bit union-find slots; 12! < 2^32 < 13!.
inline constexpr int kHardEngineCap = 12;

// Two graphs on the same vertex count: X holds positions, Y holds people.
class FsInstance {
 public:
  // Throws std::invalid_argument when the vertex counts differ or exceed kMaxPermSize.
  FsInstance(Graph x, Graph y);

  const Graph &x() const { return x_; }
  const Graph &y() const { return y_; }
  int size() const { return x_.size(); }
  // X edges (a, b), a < b, in lexicographic order.
  const std::vector<std::pair<int, int>> &x_edges() const { return x_edges_; }

 private:
  Graph x_;
  Graph y_;
  std::vector<std::pair<int, int>> x_edges_;
};

// Y-vertices that no swap may involve.
struct SwapFilter {
  VertexSet forbidden;

  bool allows(int u, int v) const { return !forbidden.contains(u) && !forbidden.contains(v); }
};

bool is_friendly(const FsInstance &inst, const Bijection &b, Swap s);

// Friendly swaps from b, one per unordered pair, sorted by (u, v).
std::vector<Swap> friendly_swaps(const FsInstance &inst, const Bijection &b,
                                 const SwapFilter *filter = nullptr);

class IllegalSwapError : public std::runtime_error {
 public:
  IllegalSwapError(std::size_t step, Swap swap);
  std::size_t step() const { return step_; }
  Swap swap() const { return swap_; }

 private:
  std::size_t step_;
  Swap swap_;
};

// Replays s from b, throwing IllegalSwapError at the first unfriendly swap.
Bijection apply_sequence(const FsInstance &inst, const Bijection &b, const SwapSequence &s);

std::uint64_t census_memory_bytes(int n);

class EngineCapError : public std::runtime_error {
 public:
  EngineCapError(int n, int cap);
  int n() const { return n_; }
  int cap() const { return cap_; }
  std::uint64_t required_bytes() const { return census_memory_bytes(n_); }

 private:
  int n_;
  int cap_;
};

// Components ordered by (size, representative); representatives[i] is the
// smallest rank inside the component whose size is sizes[i].
struct ComponentCensus {
  int n = 0;
  std::vector<std::uint64_t> sizes;
  std::vector<std::uint64_t> representatives;
  std::uint64_t total = 0;

  std::size_t num_components() const { return sizes.size(); }
  // Sizes only, ascending.
  std::vector<std::uint64_t> size_multiset() const { return sizes; }
};

// Called once per directed FS edge discovered (each undirected edge twice),
// possibly from several threads at once.
using EdgeVisitor = std::function<void(const Bijection &from, const Bijection &to)>;

struct CensusOptions {
  int cap = kDefaultEngineCap;
  // 0 picks std::thread::hardware_concurrency().
  int threads = 0;
  std::optional<SwapFilter> filter;
  EdgeVisitor on_edge;
};

// Full component labelling of FS(X, Y) (or of its filtered subgraph).
// Answers membership queries; it does not keep paths.
class ComponentIndex {
 public:
  // Throws EngineCapError when n exceeds options.cap or kHardEngineCap.
  static ComponentIndex build(const FsInstance &inst, const CensusOptions &options = {});

  int n() const { return census_.n; }
  std::uint64_t root(std::uint64_t rank_index) const { return roots_[rank_index]; }
  std::uint64_t root(const Bijection &b) const { return roots_[rank(b).index]; }
  bool same(const Bijection &a, const Bijection &b) const { return root(a) == root(b); }
  const ComponentCensus &census() const { return census_; }
  // Every rank whose component root equals `root_rank`, ascending.
  std::vector<std::uint64_t> members(std::uint64_t root_rank) const;

 private:
  std::vector<std::uint32_t> roots_;
  ComponentCensus census_;
};

ComponentCensus component_census(const FsInstance &inst, const CensusOptions &options = {});

struct SearchOptions {
  std::optional<SwapFilter> filter;
  // Once both search sides hold this many states the query falls back to a
  // census (membership only, no path).
  std::uint64_t frontier_budget = 2'000'000;
  int census_cap = kDefaultEngineCap;
  int threads = 0;
};

struct PathResult {
  bool connected = false;
  // Present whenever connected, except after a census fallback.
  std::optional<SwapSequence> sequence;
  bool via_census = false;
};

class SearchBudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bidirectional breadth-first search between a and b.
PathResult same_component(const FsInstance &inst, const Bijection &a, const Bijection &b,
                          const SearchOptions &options = {});

// Whether b and (u, v) o b share a component. Throws std::invalid_argument when u == v.
PathResult exchangeable(const FsInstance &inst, const Bijection &b, int u, int v,
                        const SearchOptions &options = {});

struct Reached {
  Bijection target;
  SwapSequence sequence;
};

// Breadth-first search from `start` for the nearest bijection satisfying
// `goal`. Returns nullopt once the (filtered) component is exhausted; throws
// SearchBudgetError after visiting options.frontier_budget states.
std::optional<Reached> find_reachable(const FsInstance &inst, const Bijection &start,
                                      const std::function<bool(const Bijection &)> &goal,
                                      const SearchOptions &options = {});

}  // namespace fslab
