#include "fslab/fs_engine.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <numeric>
#include <string>
#include <thread>
#include <unordered_map>

#include "fslab/union_find.hpp"

namespace fslab {

FsInstance::FsInstance(Graph x, Graph y) : x_(std::move(x)), y_(std::move(y)) {
  if (x_.size() != y_.size()) {
    throw std::invalid_argument("X has " + std::to_string(x_.size()) + " vertices but Y has " +
                                std::to_string(y_.size()));
  }
  if (x_.size() > kMaxPermSize) {
    throw std::invalid_argument("instances are limited to " + std::to_string(kMaxPermSize) +
                                " vertices");
  }
  x_edges_ = x_.edges();
}

bool is_friendly(const FsInstance &inst, const Bijection &b, Swap s) {
  if (s.u == s.v || !inst.y().adjacent(s.u, s.v)) return false;
  return inst.x().adjacent(b.preimage(s.u), b.preimage(s.v));
}

std::vector<Swap> friendly_swaps(const FsInstance &inst, const Bijection &b,
                                 const SwapFilter *filter) {
  std::vector<Swap> out;
  for (auto [a, c] : inst.x_edges()) {
    const int u = b[a], v = b[c];
    if (!inst.y().adjacent(u, v)) continue;
    if (filter != nullptr && !filter->allows(u, v)) continue;
    out.push_back(Swap::of(u, v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

IllegalSwapError::IllegalSwapError(std::size_t step, Swap swap)
    : std::runtime_error("swap (" + std::to_string(swap.u) + "," + std::to_string(swap.v) +
                         ") at step " + std::to_string(step) + " is not friendly"),
      step_(step),
      swap_(swap) {}

Bijection apply_sequence(const FsInstance &inst, const Bijection &b, const SwapSequence &s) {
  Bijection cur = b;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const Swap sw = s[i];
    const bool in_range = sw.u >= 0 && sw.v >= 0 && sw.u < inst.size() && sw.v < inst.size();
    if (!in_range || !is_friendly(inst, cur, sw)) throw IllegalSwapError(i, sw);
    cur.swap_positions(cur.preimage(sw.u), cur.preimage(sw.v));
  }
  return cur;
}

std::uint64_t census_memory_bytes(int n) {
  // one 32-bit union-find slot plus one 32-bit tally slot per state
  return 8 * factorial(n);
}

EngineCapError::EngineCapError(int n, int cap)
    : std::runtime_error("n = " + std::to_string(n) + " exceeds the census cap of " +
                         std::to_string(cap) + "; an exact census needs about " +
                         std::to_string(census_memory_bytes(n) >> 20) + " MiB"),
      n_(n),
      cap_(cap) {}

namespace {

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

void explore_chunk(const FsInstance &inst, const CensusOptions &options, ConcurrentUnionFind &uf,
                   std::uint64_t begin, std::uint64_t end) {
  const int n = inst.size();
  const auto &edges = inst.x_edges();
  const Graph &y = inst.y();
  std::array<std::uint8_t, kMaxPermSize> map{};
  for (std::uint64_t r = begin; r < end; ++r) {
    unrank_into(r, n, map.data());
    for (auto [a, b] : edges) {
      const int u = map[a], v = map[b];
      if (!y.adjacent(u, v)) continue;
      if (options.filter && !options.filter->allows(u, v)) continue;
      std::swap(map[a], map[b]);
      const std::uint64_t next = rank_of(map.data(), n);
      if (options.on_edge) {
        std::array<std::uint8_t, kMaxPermSize> from = map;
        std::swap(from[a], from[b]);
        options.on_edge(Bijection::from_raw(from.data(), n), Bijection::from_raw(map.data(), n));
      }
      std::swap(map[a], map[b]);
      if (next > r) uf.unite(static_cast<std::uint32_t>(r), static_cast<std::uint32_t>(next));
    }
  }
}

}  // namespace

ComponentIndex ComponentIndex::build(const FsInstance &inst, const CensusOptions &options) {
  const int n = inst.size();
  const int cap = std::min(options.cap, kHardEngineCap);
  if (n > cap) throw EngineCapError(n, cap);

  const std::uint64_t total = factorial(n);
  ComponentIndex index;
  {
    ConcurrentUnionFind uf(total);
    const int threads = static_cast<int>(
        std::min<std::uint64_t>(static_cast<std::uint64_t>(resolve_threads(options.threads)),
                                std::max<std::uint64_t>(1, total / 64)));
    if (threads == 1) {
      explore_chunk(inst, options, uf, 0, total);
    } else {
      const std::uint64_t chunk = std::max<std::uint64_t>(1024, total / (16 * threads));
      std::atomic<std::uint64_t> next{0};
      std::vector<std::jthread> workers;
      for (int t = 0; t < threads; ++t) {
        workers.emplace_back([&] {
          while (true) {
            const std::uint64_t begin = next.fetch_add(chunk);
            if (begin >= total) return;
            explore_chunk(inst, options, uf, begin, std::min(total, begin + chunk));
          }
        });
      }
    }
    index.roots_.resize(total);
    for (std::uint64_t r = 0; r < total; ++r) {
      index.roots_[r] = uf.find(static_cast<std::uint32_t>(r));
    }
  }

  std::vector<std::uint32_t> tally(total, 0);
  for (std::uint64_t r = 0; r < total; ++r) ++tally[index.roots_[r]];
  std::vector<std::pair<std::uint64_t, std::uint64_t>> comps;  // (size, root)
  for (std::uint64_t r = 0; r < total; ++r) {
    if (index.roots_[r] == r) comps.emplace_back(tally[r], r);
  }
  std::sort(comps.begin(), comps.end());

  ComponentCensus &c = index.census_;
  c.n = n;
  c.total = total;
  for (auto [size, root] : comps) {
    c.sizes.push_back(size);
    c.representatives.push_back(root);
  }
  return index;
}

std::vector<std::uint64_t> ComponentIndex::members(std::uint64_t root_rank) const {
  std::vector<std::uint64_t> out;
  for (std::uint64_t r = root_rank; r < roots_.size(); ++r) {
    if (roots_[r] == root_rank) out.push_back(r);
  }
  return out;
}

ComponentCensus component_census(const FsInstance &inst, const CensusOptions &options) {
  return ComponentIndex::build(inst, options).census();
}

namespace {

struct Visit {
  std::uint64_t parent;
  Swap via;
};

using VisitMap = std::unordered_map<std::uint64_t, Visit>;

// Swaps leading from the side's start to `node`, in application order.
SwapSequence path_from_start(const VisitMap &seen, std::uint64_t node) {
  SwapSequence out;
  for (auto it = seen.find(node); it->second.parent != node; it = seen.find(node)) {
    out.push_back(it->second.via);
    node = it->second.parent;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

template <class Fn>
void for_each_neighbor(const FsInstance &inst, const SearchOptions &options, std::uint64_t r,
                       Fn &&fn) {
  const int n = inst.size();
  std::array<std::uint8_t, kMaxPermSize> map{};
  unrank_into(r, n, map.data());
  for (auto [a, b] : inst.x_edges()) {
    const int u = map[a], v = map[b];
    if (!inst.y().adjacent(u, v)) continue;
    if (options.filter && !options.filter->allows(u, v)) continue;
    std::swap(map[a], map[b]);
    const std::uint64_t next = rank_of(map.data(), n);
    std::swap(map[a], map[b]);
    fn(next, Swap::of(u, v));
  }
}

PathResult census_fallback(const FsInstance &inst, const Bijection &a, const Bijection &b,
                           const SearchOptions &options) {
  if (inst.size() > std::min(options.census_cap, kHardEngineCap)) {
    throw SearchBudgetError("search budget exhausted and n = " + std::to_string(inst.size()) +
                            " is above the census cap");
  }
  CensusOptions co;
  co.cap = options.census_cap;
  co.threads = options.threads;
  co.filter = options.filter;
  const auto index = ComponentIndex::build(inst, co);
  return {index.same(a, b), std::nullopt, true};
}

}  // namespace

PathResult same_component(const FsInstance &inst, const Bijection &a, const Bijection &b,
                          const SearchOptions &options) {
  if (a.size() != inst.size() || b.size() != inst.size()) {
    throw std::invalid_argument("bijection size does not match the instance");
  }
  const std::uint64_t ra = rank(a).index, rb = rank(b).index;
  if (ra == rb) return {true, SwapSequence{}, false};

  VisitMap seen_a{{ra, {ra, {}}}}, seen_b{{rb, {rb, {}}}};
  std::vector<std::uint64_t> frontier_a{ra}, frontier_b{rb};

  while (!frontier_a.empty() && !frontier_b.empty()) {
    if (seen_a.size() > options.frontier_budget && seen_b.size() > options.frontier_budget) {
      return census_fallback(inst, a, b, options);
    }
    const bool grow_a = frontier_a.size() <= frontier_b.size();
    VisitMap &mine = grow_a ? seen_a : seen_b;
    const VisitMap &theirs = grow_a ? seen_b : seen_a;
    std::vector<std::uint64_t> &frontier = grow_a ? frontier_a : frontier_b;

    std::vector<std::uint64_t> next_frontier;
    std::optional<std::uint64_t> meet;
    for (std::uint64_t r : frontier) {
      for_each_neighbor(inst, options, r, [&](std::uint64_t next, Swap via) {
        if (meet || mine.contains(next)) return;
        mine.emplace(next, Visit{r, via});
        if (theirs.contains(next)) {
          meet = next;
          return;
        }
        next_frontier.push_back(next);
      });
      if (meet) break;
    }
    if (meet) {
      SwapSequence seq = path_from_start(seen_a, *meet);
      // Swaps are involutions, so walking b's tree back from the meeting
      // point replays in reverse.
      SwapSequence tail = reverse_sequence(path_from_start(seen_b, *meet));
      seq.insert(seq.end(), tail.begin(), tail.end());
      return {true, std::move(seq), false};
    }
    frontier = std::move(next_frontier);
  }
  return {false, std::nullopt, false};
}

PathResult exchangeable(const FsInstance &inst, const Bijection &b, int u, int v,
                        const SearchOptions &options) {
  if (u == v) throw std::invalid_argument("exchangeability needs two distinct vertices");
  const Swap direct = Swap::of(u, v);
  if ((!options.filter || options.filter->allows(u, v)) && is_friendly(inst, b, direct)) {
    return {true, SwapSequence{direct}, false};
  }
  return same_component(inst, b, apply_value_swap(b, u, v), options);
}

std::optional<Reached> find_reachable(const FsInstance &inst, const Bijection &start,
                                      const std::function<bool(const Bijection &)> &goal,
                                      const SearchOptions &options) {
  const int n = inst.size();
  if (start.size() != n) throw std::invalid_argument("bijection size does not match the instance");
  if (goal(start)) return Reached{start, {}};

  const std::uint64_t r0 = rank(start).index;
  VisitMap seen{{r0, {r0, {}}}};
  std::vector<std::uint64_t> frontier{r0};
  while (!frontier.empty()) {
    std::vector<std::uint64_t> next_frontier;
    std::optional<std::uint64_t> hit;
    for (std::uint64_t r : frontier) {
      for_each_neighbor(inst, options, r, [&](std::uint64_t next, Swap via) {
        if (hit || seen.contains(next)) return;
        seen.emplace(next, Visit{r, via});
        if (goal(unrank({next, n}))) {
          hit = next;
          return;
        }
        next_frontier.push_back(next);
      });
      if (hit) return Reached{unrank({*hit, n}), path_from_start(seen, *hit)};
      if (seen.size() > options.frontier_budget) {
        throw SearchBudgetError("reachability search visited more than " +
                                std::to_string(options.frontier_budget) + " states");
      }
    }
    frontier = std::move(next_frontier);
  }
  return std::nullopt;
}

}  // namespace fslab
