#include <doctest.h>

#include <algorithm>
#include <atomic>
#include <random>
#include <mutex>
#include <set>

#include "fslab/constructions.hpp"
#include "fslab/fs_engine.hpp"
#include "oracles.hpp"

using namespace fslab;

namespace {

ComponentCensus census(const Graph &x, const Graph &y, int threads = 1) {
  CensusOptions o;
  o.threads = threads;
  return component_census(FsInstance(x, y), o);
}

Graph theta0_minus_vertex() { return induced_subgraph(theta0(), VertexSet::full(6)).graph; }

// Zoo graphs on exactly n vertices.
std::vector<NamedGraph> zoo_n(int n) { return fixture_zoo(n, n); }

}  // namespace

TEST_CASE("friendly_swaps examples") {
  const FsInstance p3k3(path(3), complete(3));
  CHECK(friendly_swaps(p3k3, Bijection::identity(3)) == std::vector<Swap>{Swap::of(0, 1), Swap::of(1, 2)});

  const FsInstance kk(complete(5), complete(5));
  CHECK(friendly_swaps(kk, unrank({77, 5})).size() == 10);

  for (int r = 2; r <= 4; ++r) {
    const int total = 3 * r / 2;
    for (int d1 = 0; d1 <= r; ++d1) {
      const int d2 = total - d1;
      if (d2 < 0 || d2 > r) continue;
      const auto p = thm_1_11_pair(r, d1, d2);
      CHECK(friendly_swaps(FsInstance(p.x, p.y), p.sigma).empty());
    }
  }
}

TEST_CASE("swap filter") {
  const FsInstance kk(complete(4), complete(4));
  const SwapFilter f{VertexSet::of({0})};
  const auto swaps = friendly_swaps(kk, Bijection::identity(4), &f);
  CHECK(swaps.size() == 3);
  for (const Swap &s : swaps) CHECK((s.u != 0 && s.v != 0));
}

TEST_CASE("instance validation") {
  CHECK_THROWS_AS(FsInstance(complete(3), complete(4)), std::invalid_argument);
  CHECK_THROWS_AS(FsInstance(complete(21), complete(21)), std::invalid_argument);
}

TEST_CASE("apply_sequence") {
  const FsInstance inst(path(4), path(4));
  const auto id = Bijection::identity(4);
  CHECK(apply_sequence(inst, id, {}) == id);

  const SwapSequence s{Swap::of(0, 1), Swap::of(2, 3)};
  const auto b = apply_sequence(inst, id, s);
  CHECK(apply_sequence(inst, b, reverse_sequence(s)) == id);

  try {
    apply_sequence(inst, id, {Swap::of(0, 1), Swap::of(0, 2)});
    FAIL("expected IllegalSwapError");
  } catch (const IllegalSwapError &e) {
    CHECK(e.step() == 1);
    CHECK(e.swap() == Swap::of(0, 2));
  }
}

TEST_CASE("three-swap exchange through a common neighbour") {
  // w = 0 adjacent to u = 1 and v = 2 in Y, u and v not adjacent; X is a triangle.
  const Graph y = Graph::from_edges(3, {{0, 1}, {0, 2}});
  const FsInstance inst(Graph::from_edges(3, {{0, 1}, {0, 2}, {1, 2}}), y);
  const auto id = Bijection::identity(3);
  const SwapSequence s{Swap::of(0, 1), Swap::of(0, 2), Swap::of(0, 1)};
  CHECK(apply_sequence(inst, id, s) == apply_value_swap(id, 1, 2));
}

TEST_CASE("census examples") {
  const auto k22 = census(complete_bipartite(2, 2), complete_bipartite(2, 2));
  CHECK(k22.sizes == std::vector<std::uint64_t>{12, 12});
  CHECK(k22.total == 24);

  const auto sc = census(star(4), cycle(4));
  CHECK(sc.sizes == std::vector<std::uint64_t>{12, 12});
  CHECK(oracle::census_sizes(star(4), cycle(4)) == sc.sizes);

  CHECK(census(complete(3), complete(3)).sizes == std::vector<std::uint64_t>{6});
}

TEST_CASE("census representatives") {
  const FsInstance inst(star(5), cycle(5));
  const auto index = ComponentIndex::build(inst, {});
  const auto &c = index.census();
  std::set<std::uint64_t> roots;
  for (std::size_t i = 0; i < c.num_components(); ++i) {
    roots.insert(index.root(c.representatives[i]));
    CHECK(index.members(index.root(c.representatives[i])).size() == c.sizes[i]);
    // representative is the smallest member
    CHECK(index.members(index.root(c.representatives[i])).front() == c.representatives[i]);
  }
  CHECK(roots.size() == c.num_components());
}

TEST_CASE("census matches plain BFS oracle on the zoo, n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    const auto zoo = zoo_n(n);
    for (const auto &a : zoo) {
      for (const auto &b : zoo) {
        CAPTURE(a.name);
        CAPTURE(b.name);
        const auto c = census(a.graph, b.graph);
        CHECK(c.total == factorial(n));
        CHECK(c.sizes == oracle::census_sizes(a.graph, b.graph));
      }
    }
  }
}

TEST_CASE("census is symmetric in X and Y on the zoo") {
  for (int n = 1; n <= 6; ++n) {
    const auto zoo = zoo_n(n);
    for (const auto &a : zoo) {
      for (const auto &b : zoo) {
        CHECK(census(a.graph, b.graph).sizes == census(b.graph, a.graph).sizes);
      }
    }
  }
}

TEST_CASE("census does not depend on thread count") {
  const auto p = prop_1_6_pair(7, 5);
  const auto one = census(p.x, p.y, 1);
  for (int t : {2, 3, 8}) {
    const auto many = census(p.x, p.y, t);
    CHECK(many.sizes == one.sizes);
    CHECK(many.representatives == one.representatives);
  }
}

TEST_CASE("census cap") {
  CHECK_THROWS_AS(census(complete(11), complete(11)), EngineCapError);
  try {
    census(complete(11), complete(11));
  } catch (const EngineCapError &e) {
    CHECK(std::string(e.what()).find("MiB") != std::string::npos);
    CHECK(e.required_bytes() == 8ull * factorial(11));
  }
  CensusOptions o;
  o.cap = 13;
  CHECK_THROWS_AS(component_census(FsInstance(complete(13), complete(13)), o), EngineCapError);
}

TEST_CASE("FS neighbour relation is symmetric, n <= 6") {
  for (const auto &[x, y] : std::vector<std::pair<Graph, Graph>>{
           {star(6), cycle(6)}, {path(6), complete(6)}, {theta0_minus_vertex(), cycle(6)}}) {
    const FsInstance inst(x, y);
    const int n = x.size();
    for (std::uint64_t i = 0; i < factorial(n); ++i) {
      const auto b = unrank({i, n});
      for (const Swap &s : friendly_swaps(inst, b)) {
        const auto c = apply_value_swap(b, s.u, s.v);
        const auto back = friendly_swaps(inst, c);
        CHECK(std::find(back.begin(), back.end(), s) != back.end());
      }
    }
  }
}

TEST_CASE("edge visitor reports symmetric FS edges") {
  for (const auto &[x, y] : std::vector<std::pair<Graph, Graph>>{
           {star(5), cycle(5)}, {path(6), star_plus(6)}, {complete_bipartite(3, 3), cycle(6)}}) {
    const int n = x.size();
    std::set<std::pair<std::uint64_t, std::uint64_t>> seen;
    std::mutex m;
    CensusOptions o;
    o.threads = 1;
    o.on_edge = [&](const Bijection &a, const Bijection &b) {
      std::lock_guard lock(m);
      seen.emplace(rank(a).index, rank(b).index);
    };
    component_census(FsInstance(x, y), o);
    for (auto [a, b] : seen) CHECK(seen.count({b, a}) == 1);
    // each directed edge comes from one friendly swap
    const FsInstance inst(x, y);
    std::size_t expected = 0;
    for (std::uint64_t i = 0; i < factorial(n); ++i) expected += friendly_swaps(inst, unrank({i, n})).size();
    CHECK(seen.size() == expected);
  }
}

TEST_CASE("bipartite parity is preserved by every friendly swap") {
  const Graph x = complete_bipartite(3, 3);
  const Graph y = Graph::from_edges(6, {{0, 3}, {0, 4}, {1, 4}, {1, 5}, {2, 5}, {2, 3}});
  Graph yb = y;
  yb.set_bipartition(VertexSet::of({0, 1, 2}), VertexSet::of({3, 4, 5}));
  const VertexSet ax = x.bipartition()->first, ay = yb.bipartition()->first;
  auto phi = [&](const Bijection &b) {
    int c = sign(b);
    for (int a : ax.members()) c += ay.contains(b[a]);
    return c & 1;
  };
  const FsInstance inst(x, yb);
  for (std::uint64_t i = 0; i < factorial(6); ++i) {
    const auto b = unrank({i, 6});
    for (const Swap &s : friendly_swaps(inst, b)) CHECK(phi(apply_value_swap(b, s.u, s.v)) == phi(b));
  }
}

TEST_CASE("same_component") {
  const FsInstance inst(complete_bipartite(3, 3), complete_bipartite(3, 3));
  const auto index = ComponentIndex::build(inst, {});
  const auto id = Bijection::identity(6);

  const auto self = same_component(inst, id, id);
  CHECK(self.connected);
  REQUIRE(self.sequence);
  CHECK(self.sequence->empty());

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const auto a = unrank({rng() % 720, 6});
    const auto b = unrank({rng() % 720, 6});
    const auto res = same_component(inst, a, b);
    CHECK(res.connected == index.same(a, b));
    if (res.connected) {
      REQUIRE(res.sequence);
      CHECK(apply_sequence(inst, a, *res.sequence) == b);
    }
  }
  // transposition inside a partite set
  const auto t = apply_value_swap(id, 0, 1);
  CHECK(same_component(inst, id, t).connected == index.same(id, t));
}

TEST_CASE("same_component with a filter stays off forbidden vertices") {
  const FsInstance inst(complete(5), complete(5));
  SearchOptions so;
  so.filter = SwapFilter{VertexSet::of({0, 1})};
  const auto id = Bijection::identity(5);
  const auto target = apply_value_swap(apply_value_swap(id, 2, 3), 3, 4);
  const auto res = same_component(inst, id, target, so);
  CHECK(res.connected);
  REQUIRE(res.sequence);
  for (const Swap &s : *res.sequence) CHECK((s.u > 1 && s.v > 1));
  // 0 and 1 can never move
  CHECK_FALSE(same_component(inst, id, apply_value_swap(id, 0, 2), so).connected);
}

TEST_CASE("same_component falls back to census") {
  const FsInstance inst(complete(7), path(7));
  SearchOptions so;
  so.frontier_budget = 10;
  const auto a = Bijection::identity(7);
  const auto b = unrank({5039, 7});
  const auto res = same_component(inst, a, b, so);
  CHECK(res.via_census);
  CHECK(res.connected);
  CHECK_FALSE(res.sequence);
}

TEST_CASE("exchangeable") {
  const auto id = Bijection::identity(4);
  const FsInstance kk(complete(4), complete(4));
  const auto direct = exchangeable(kk, id, 1, 2);
  CHECK(direct.connected);
  REQUIRE(direct.sequence);
  CHECK(*direct.sequence == SwapSequence{Swap::of(1, 2)});
  CHECK_THROWS_AS(exchangeable(kk, id, 1, 1), std::invalid_argument);

  const FsInstance sc(star(4), cycle(4));
  const auto index = ComponentIndex::build(sc, {});
  for (int u = 0; u < 4; ++u) {
    for (int v = u + 1; v < 4; ++v) {
      const auto res = exchangeable(sc, id, u, v);
      CHECK(res.connected == index.same(id, apply_value_swap(id, u, v)));
      if (res.sequence) CHECK(apply_sequence(sc, id, *res.sequence) == apply_value_swap(id, u, v));
    }
  }
}

TEST_CASE("find_reachable") {
  const FsInstance inst(path(4), complete(4));
  const auto id = Bijection::identity(4);
  const auto found = find_reachable(inst, id, [](const Bijection &b) { return b[0] == 3; });
  REQUIRE(found);
  CHECK(found->target[0] == 3);
  CHECK(apply_sequence(inst, id, found->sequence) == found->target);
  CHECK(found->sequence.size() == 3);

  SearchOptions so;
  so.filter = SwapFilter{VertexSet::of({3})};
  CHECK_FALSE(find_reachable(inst, id, [](const Bijection &b) { return b[0] == 3; }, so));
}
