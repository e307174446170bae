#include <doctest.h>

#include <algorithm>
#include <set>

#include "fslab/constructions.hpp"
#include "fslab/fs_engine.hpp"

using namespace fslab;

namespace {

std::vector<int> degrees(const Graph &g) {
  std::vector<int> d;
  for (int v = 0; v < g.size(); ++v) d.push_back(g.degree(v));
  return d;
}

std::size_t fs_components(const Graph &x, const Graph &y) {
  CensusOptions o;
  o.threads = 1;
  return component_census(FsInstance(x, y), o).num_components();
}

bool edges_cross(const Graph &g) {
  const auto &bp = *g.bipartition();
  for (auto [u, v] : g.edges()) {
    if (bp.first.contains(u) == bp.first.contains(v)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("named families") {
  CHECK(degrees(star(4)) == std::vector<int>{3, 1, 1, 1});
  CHECK(star(4).bipartition().has_value());
  CHECK(star_plus(5).adjacent(1, 2));
  CHECK(star_plus(5).edge_count() == 5);
  CHECK_THROWS_AS(star_plus(2), std::invalid_argument);
  CHECK_THROWS_AS(cycle(2), std::invalid_argument);
  CHECK(cycle(6).bipartition().has_value());
  CHECK_FALSE(cycle(5).bipartition().has_value());
  CHECK(path(5).edge_count() == 4);
  CHECK(complete(6).edge_count() == 15);
  const Graph k33 = complete_bipartite(3, 3);
  CHECK(min_degree(k33) == 3);
  CHECK(is_bipartite(k33));
  CHECK(k33.bipartition()->first == VertexSet::of({0, 1, 2}));
  auto t = degrees(theta0());
  std::sort(t.begin(), t.end());
  CHECK(t == std::vector<int>{2, 2, 2, 2, 2, 3, 3});
}

TEST_CASE("zoo is ordered and in range") {
  const auto zoo = fixture_zoo(4, 6);
  std::set<std::string> names;
  for (std::size_t i = 0; i < zoo.size(); ++i) {
    CHECK(zoo[i].graph.size() >= 4);
    CHECK(zoo[i].graph.size() <= 6);
    CHECK(names.insert(zoo[i].name).second);
    if (i > 0) CHECK(zoo[i - 1].graph.size() <= zoo[i].graph.size());
  }
}

TEST_CASE("prop_1_6_pair at n = k = 5 is two 5-cycles") {
  const auto p = prop_1_6_pair(5, 5);
  CHECK(p.x.same_edges(cycle(5)));
  // Y joins i and i +- 2: the pentagram, itself a 5-cycle
  CHECK(p.y.edge_count() == 5);
  CHECK(is_cycle_graph(p.y));
  for (int i = 0; i < 5; ++i) CHECK(p.y.adjacent(i, (i + 2) % 5));
  CHECK(fs_components(p.x, p.y) > 1);
}

TEST_CASE("prop_1_6_pair sweep") {
  for (int k = 5; k <= 12; ++k) {
    for (int n = k; n <= 12; ++n) {
      CAPTURE(n);
      CAPTURE(k);
      const auto p = prop_1_6_pair(n, k);
      // k delta >= 3n - 4k and k delta >= (k-2) n - 3k, in integers
      CHECK(k * min_degree(p.x) >= 3 * n - 4 * k);
      CHECK(k * min_degree(p.y) >= (k - 2) * n - 3 * k);
      CHECK(is_connected(p.x));
      CHECK(is_connected(p.y));
      CHECK(p.param("n") == n);
      CHECK(p.param("k") == k);
      CHECK(p.param("t") * k + p.param("r") == n);
    }
  }
  CHECK_THROWS_AS(prop_1_6_pair(4, 5), std::invalid_argument);
  CHECK_THROWS_AS(prop_1_6_pair(6, 4), std::invalid_argument);
}

TEST_CASE("thm_1_11_pair sweep") {
  for (int r = 2; r <= 4; ++r) {
    for (int d1 = 0; d1 <= r; ++d1) {
      const int d2 = 3 * r / 2 - d1;
      if (d2 < 0 || d2 > r) continue;
      CAPTURE(r);
      CAPTURE(d1);
      const auto p = thm_1_11_pair(r, d1, d2);
      CHECK(min_degree(p.x) == d1);
      CHECK(min_degree(p.y) >= d2);
      CHECK(p.param("delta_y") == min_degree(p.y));
      REQUIRE(p.x.bipartition());
      REQUIRE(p.y.bipartition());
      CHECK(edges_cross(p.x));
      CHECK(edges_cross(p.y));
      CHECK(friendly_swaps(FsInstance(p.x, p.y), p.sigma).empty());
      CHECK(fs_components(p.x, p.y) >= 3);
    }
  }
  CHECK_THROWS_AS(thm_1_11_pair(4, 2, 3), std::invalid_argument);
  CHECK_THROWS_AS(thm_1_11_pair(4, 1, 5), std::invalid_argument);
}

TEST_CASE("thm_1_11_pair at r = 2 is a matching against C4") {
  const auto p = thm_1_11_pair(2, 1, 2);
  CHECK(p.x.edge_count() == 2);
  CHECK(min_degree(p.x) == 1);
  CHECK(is_cycle_graph(p.y));
  CHECK(p.y.edge_count() == 4);
}

TEST_CASE("random_graph_min_degree") {
  CHECK(random_graph_min_degree(6, 5, false, 1).same_edges(complete(6)));
  const Graph a = random_graph_min_degree(6, 4, false, 9);
  const Graph b = random_graph_min_degree(6, 4, false, 9);
  CHECK(a.same_edges(b));
  CHECK(min_degree(a) >= 4);
  for (std::uint64_t s = 0; s < 100; ++s) {
    const Graph g = random_graph_min_degree(8, 4, true, s);
    CHECK(min_degree(g) >= 4);
    CHECK(is_connected(g));
    for (int u = 0; u < 8; ++u) {
      CHECK_FALSE(g.adjacent(u, u));
      for (int v = 0; v < 8; ++v) CHECK(g.adjacent(u, v) == g.adjacent(v, u));
    }
  }
  for (std::uint64_t s = 0; s < 50; ++s) CHECK(is_connected(random_graph_min_degree(9, 1, true, s)));
  CHECK_THROWS_AS(random_graph_min_degree(5, 5, false, 1), std::invalid_argument);
  CHECK_THROWS_AS(random_graph_min_degree(5, -1, false, 1), std::invalid_argument);
}

TEST_CASE("random_graph_exact_min_degree") {
  for (std::uint64_t s = 0; s < 50; ++s) {
    const Graph g = random_graph_exact_min_degree(7, 3, true, s);
    CHECK(min_degree(g) == 3);
    CHECK(is_connected(g));
  }
}

TEST_CASE("random_bipartite_subgraph") {
  CHECK(random_bipartite_subgraph(3, 3, 4).same_edges(complete_bipartite(3, 3)));
  for (std::uint64_t s = 0; s < 50; ++s) {
    const Graph g = random_bipartite_subgraph(4, 3, s);
    REQUIRE(g.bipartition());
    CHECK(edges_cross(g));
    CHECK(min_degree(g) >= 3);
  }
  // r = 2, floor 1: only the 7 spanning subgraphs of K_{2,2} with no isolated vertex
  std::set<std::vector<std::pair<int, int>>> seen;
  for (std::uint64_t s = 0; s < 400; ++s) seen.insert(random_bipartite_subgraph(2, 1, s).edges());
  int legal = 0;
  for (std::uint32_t mask = 0; mask < 16; ++mask) {
    Graph g(4);
    const std::pair<int, int> slots[4] = {{0, 2}, {0, 3}, {1, 2}, {1, 3}};
    for (int i = 0; i < 4; ++i) {
      if ((mask >> i) & 1u) g.add_edge(slots[i].first, slots[i].second);
    }
    if (min_degree(g) >= 1) {
      ++legal;
      CHECK(seen.count(g.edges()) <= 1);
    }
  }
  CHECK(legal == 7);
  for (const auto &e : seen) {
    const Graph g = Graph::from_edges(4, e);
    CHECK(min_degree(g) >= 1);
  }
  CHECK_THROWS_AS(random_bipartite_subgraph(3, 4, 1), std::invalid_argument);
}

TEST_CASE("derive_seed spreads indices") {
  std::set<std::uint64_t> s;
  for (std::uint64_t i = 0; i < 1000; ++i) s.insert(derive_seed(42, i));
  CHECK(s.size() == 1000);
  CHECK(derive_seed(1, 0) != derive_seed(2, 0));
}
