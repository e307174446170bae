#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "fslab/constructions.hpp"
#include "fslab/graph.hpp"
#include "fslab/json_io.hpp"
#include "oracles.hpp"

using namespace fslab;

namespace {

Graph relabel(const Graph &g, const std::vector<int> &perm) {
  Graph out(g.size());
  for (auto [u, v] : g.edges()) out.add_edge(perm[u], perm[v]);
  return out;
}

std::vector<Graph> random_graphs(int n, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Graph> out;
  for (int i = 0; i < count; ++i) {
    const double p = std::uniform_real_distribution<double>(0.1, 0.9)(rng);
    std::bernoulli_distribution coin(p);
    Graph g(n);
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (coin(rng)) g.add_edge(u, v);
      }
    }
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace

TEST_CASE("min_degree") {
  CHECK(min_degree(complete(4)) == 3);
  CHECK(min_degree(Graph(3)) == 0);
  CHECK(min_degree(star(5)) == 1);
}

TEST_CASE("graph rejects bad input") {
  CHECK_THROWS_AS(Graph(0), std::invalid_argument);
  CHECK_THROWS_AS(Graph(33), std::invalid_argument);
  Graph g(3);
  CHECK_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(0, 3), std::invalid_argument);
  g.add_edge(0, 1);
  CHECK_THROWS_AS(g.set_bipartition(VertexSet::of({0, 1}), VertexSet::of({2})), std::invalid_argument);
  CHECK_THROWS_AS(g.set_bipartition(VertexSet::of({0}), VertexSet::of({1})), std::invalid_argument);
  CHECK_NOTHROW(g.set_bipartition(VertexSet::of({0, 2}), VertexSet::of({1})));
}

TEST_CASE("induced_subgraph") {
  const auto k3 = induced_subgraph(complete(4), VertexSet::of({0, 2, 3}));
  CHECK(k3.graph.same_edges(complete(3)));
  CHECK(k3.original_vertex == std::vector<int>{0, 2, 3});

  const auto p3 = induced_subgraph(cycle(5), VertexSet::of({1, 2, 3}));
  CHECK(p3.graph.same_edges(path(3)));

  const auto two = induced_subgraph(cycle(5), VertexSet::of({0, 2}));
  CHECK(two.graph.size() == 2);
  CHECK(two.graph.edge_count() == 0);

  CHECK_THROWS_AS(induced_subgraph(cycle(5), VertexSet{}), std::invalid_argument);
}

TEST_CASE("connected_components") {
  auto c6 = connected_components(cycle(6));
  REQUIRE(c6.size() == 1);
  CHECK(c6[0].size() == 6);

  const Graph two_k2 = Graph::from_edges(4, {{0, 1}, {2, 3}});
  const auto c = connected_components(two_k2);
  REQUIRE(c.size() == 2);
  CHECK(c[0] == VertexSet::of({0, 1}));
  CHECK(c[1] == VertexSet::of({2, 3}));

  CHECK(connected_components(Graph(3)).size() == 3);
}

TEST_CASE("components partition the vertex set") {
  for (int n = 1; n <= 8; ++n) {
    for (const auto &g : random_graphs(n, 30, 100 + n)) {
      const auto comps = connected_components(g);
      VertexSet all;
      for (VertexSet c : comps) {
        CHECK((all & c).empty());
        all = all | c;
      }
      CHECK(all == VertexSet::full(n));
      for (auto [u, v] : g.edges()) {
        const auto it = std::find_if(comps.begin(), comps.end(), [&](VertexSet c) { return c.contains(u); });
        CHECK(it->contains(v));
      }
      CHECK(static_cast<int>(comps.size()) == oracle::count_components(oracle::matrix_of(g)));
    }
  }
}

TEST_CASE("adjacency stays symmetric") {
  for (const auto &ng : fixture_zoo(1, 8)) {
    const Graph &g = ng.graph;
    for (int u = 0; u < g.size(); ++u) {
      CHECK_FALSE(g.adjacent(u, u));
      for (int v = 0; v < g.size(); ++v) CHECK(g.adjacent(u, v) == g.adjacent(v, u));
    }
  }
}

TEST_CASE("cut_vertices examples") {
  CHECK(cut_vertices(path(4)) == VertexSet::of({1, 2}));
  CHECK(cut_vertices(cycle(5)).empty());
  CHECK(cut_vertices(star(5)) == VertexSet::of({0}));
}

TEST_CASE("cut_vertices agree with delete-and-recount") {
  for (const auto &ng : fixture_zoo(1, 8)) {
    CAPTURE(ng.name);
    CHECK(cut_vertices(ng.graph).members() == oracle::cut_vertices(ng.graph));
  }
  for (int n = 1; n <= 8; ++n) {
    for (const auto &g : random_graphs(n, 60, 200 + n)) {
      CHECK(cut_vertices(g).members() == oracle::cut_vertices(g));
    }
  }
}

TEST_CASE("biconnectivity at tiny sizes") {
  CHECK_FALSE(is_biconnected(Graph(1)));
  CHECK(is_biconnected(complete(2)));
  CHECK_FALSE(is_biconnected(Graph(2)));
  CHECK(is_biconnected(cycle(3)));
  CHECK_FALSE(is_biconnected(path(3)));
}

TEST_CASE("is_bipartite examples") {
  CHECK(is_bipartite(complete_bipartite(3, 3)));
  CHECK_FALSE(is_bipartite(complete(3)));
  CHECK_FALSE(is_bipartite(theta0()));
  CHECK_FALSE(oracle::two_colourable(theta0()));
}

TEST_CASE("bipartite check agrees with brute 2-colouring") {
  auto check_one = [](const Graph &g) {
    const auto res = check_bipartite(g);
    CHECK(res.bipartite == oracle::two_colourable(g));
    if (res.bipartite) {
      REQUIRE(res.parts);
      Graph copy = g;
      CHECK_NOTHROW(copy.set_bipartition(res.parts->first, res.parts->second));
    } else {
      // odd closed walk through consecutive edges
      const auto &cyc = res.odd_cycle;
      REQUIRE(cyc.size() % 2 == 1);
      for (std::size_t i = 0; i < cyc.size(); ++i) {
        CHECK(g.adjacent(cyc[i], cyc[(i + 1) % cyc.size()]));
      }
    }
  };
  for (const auto &ng : fixture_zoo(1, 8)) check_one(ng.graph);
  for (int n = 1; n <= 8; ++n) {
    for (const auto &g : random_graphs(n, 60, 300 + n)) check_one(g);
  }
}

TEST_CASE("is_cycle_graph") {
  CHECK(is_cycle_graph(cycle(7)));
  CHECK_FALSE(is_cycle_graph(theta0()));
  CHECK_FALSE(is_cycle_graph(path(4)));
  CHECK_FALSE(is_cycle_graph(Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}})));
}

TEST_CASE("theta0 fixture") {
  const Graph t = theta0();
  CHECK(t.size() == 7);
  CHECK(t.edge_count() == 8);
  std::vector<int> deg;
  for (int v = 0; v < 7; ++v) deg.push_back(t.degree(v));
  std::sort(deg.begin(), deg.end());
  CHECK(deg == std::vector<int>{2, 2, 2, 2, 2, 3, 3});
  CHECK(t.same_edges(theta_zero_reference()));

  const Graph file = load_graph(FSLAB_FIXTURE_DIR "/theta0.json");
  CHECK(file.same_edges(t));
}

TEST_CASE("is_theta_zero over every relabeling") {
  const Graph t = theta0();
  std::vector<int> perm(7);
  std::iota(perm.begin(), perm.end(), 0);
  int count = 0;
  do {
    if (!is_theta_zero(relabel(t, perm))) {
      FAIL("relabeling rejected");
    }
    ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  CHECK(count == 5040);
  CHECK_FALSE(is_theta_zero(cycle(7)));
}

TEST_CASE("theta0 minus any edge is not theta0") {
  for (auto [u, v] : theta0().edges()) {
    Graph g = theta0();
    g.remove_edge(u, v);
    CHECK_FALSE(is_theta_zero(g));
    // independent count: theta0 has 8 edges, g has 7
    CHECK(g.edge_count() == 7);
  }
}
