#include "fslab/constructions.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "fslab/fs_engine.hpp"

namespace fslab {

namespace {

void require(bool ok, const std::string &msg) {
  if (!ok) throw std::invalid_argument(msg);
}

VertexSet range_set(int begin, int end) {
  VertexSet s;
  for (int v = begin; v < end; ++v) s.insert(v);
  return s;
}

int floor_div(int a, int b) { return a / b; }
int ceil_div(int a, int b) { return (a + b - 1) / b; }

}  // namespace

std::int64_t LowerBoundPair::param(const std::string &key) const {
  for (const auto &[k, v] : meta) {
    if (k == key) return v;
  }
  throw std::out_of_range("no parameter named " + key);
}

Graph star(int n) {
  require(n >= 1, "star needs n >= 1");
  Graph g(n);
  for (int v = 1; v < n; ++v) g.add_edge(0, v);
  g.set_bipartition(VertexSet::single(0), VertexSet::full(n).minus(VertexSet::single(0)));
  return g;
}

Graph star_plus(int n) {
  require(n >= 3, "star_plus needs n >= 3");
  Graph g(n);
  for (int v = 1; v < n; ++v) g.add_edge(0, v);
  g.add_edge(1, 2);
  return g;
}

Graph cycle(int n) {
  require(n >= 3, "cycle needs n >= 3");
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  if (n % 2 == 0) {
    VertexSet even;
    for (int v = 0; v < n; v += 2) even.insert(v);
    g.set_bipartition(even, VertexSet::full(n).minus(even));
  }
  return g;
}

Graph path(int n) {
  require(n >= 1, "path needs n >= 1");
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  VertexSet even;
  for (int v = 0; v < n; v += 2) even.insert(v);
  g.set_bipartition(even, VertexSet::full(n).minus(even));
  return g;
}

Graph complete(int n) {
  require(n >= 1, "complete graph needs n >= 1");
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph complete_bipartite(int a, int b) {
  require(a >= 1 && b >= 1, "complete_bipartite needs both parts nonempty");
  require(a + b <= kMaxGraphSize, "complete_bipartite exceeds 32 vertices");
  Graph g(a + b);
  for (int u = 0; u < a; ++u) {
    for (int v = a; v < a + b; ++v) g.add_edge(u, v);
  }
  g.set_bipartition(range_set(0, a), range_set(a, a + b));
  return g;
}

Graph theta0() { return theta_zero_reference(); }

namespace {

Graph with_edges(Graph g, const std::vector<std::pair<int, int>> &extra) {
  for (auto [u, v] : extra) g.add_edge(u, v);
  g.clear_bipartition();
  return g;
}

Graph without_edges(Graph g, const std::vector<std::pair<int, int>> &gone) {
  for (auto [u, v] : gone) g.remove_edge(u, v);
  return g;
}

Graph wheel(int n) {
  Graph g(n);
  for (int v = 1; v < n; ++v) {
    g.add_edge(0, v);
    g.add_edge(v, v + 1 < n ? v + 1 : 1);
  }
  return g;
}

Graph disjoint_union(const Graph &a, const Graph &b) {
  Graph g(a.size() + b.size());
  for (auto [u, v] : a.edges()) g.add_edge(u, v);
  for (auto [u, v] : b.edges()) g.add_edge(a.size() + u, a.size() + v);
  return g;
}

}  // namespace

std::vector<NamedGraph> fixture_zoo(int min_n, int max_n) {
  std::vector<NamedGraph> all;
  auto add = [&](std::string name, Graph g) { all.push_back({std::move(name), std::move(g)}); };
  for (int n = std::max(1, min_n); n <= std::min(max_n, 8); ++n) {
    const std::string s = std::to_string(n);
    add("K" + s, complete(n));
    add("P" + s, path(n));
    add("Star" + s, star(n));
    add("E" + s, Graph(n));
    if (n >= 3) add("C" + s, cycle(n));
    if (n >= 4) add("StarPlus" + s, star_plus(n));
    if (n >= 4) add("K" + s + "-e", without_edges(complete(n), {{0, 1}}));
    if (n >= 5) add("W" + s, wheel(n));
    if (n >= 4) add("C" + s + "+chord02", with_edges(cycle(n), {{0, 2}}));
    if (n >= 6) add("C" + s + "+chord03", with_edges(cycle(n), {{0, 3}}));
    for (int a = 1; a <= n / 2; ++a) {
      add("K" + std::to_string(a) + "," + std::to_string(n - a), complete_bipartite(a, n - a));
    }
  }
  auto in_range = [&](int n) { return n >= min_n && n <= max_n; };
  if (in_range(4)) add("2K2", disjoint_union(complete(2), complete(2)));
  if (in_range(5)) {
    add("bowtie", Graph::from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}}));
    add("house", with_edges(cycle(5), {{1, 4}}));
    add("K3+K2", disjoint_union(complete(3), complete(2)));
  }
  if (in_range(6)) {
    add("prism", Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5},
                                       {0, 3}, {1, 4}, {2, 5}}));
    add("octahedron", without_edges(complete(6), {{0, 1}, {2, 3}, {4, 5}}));
    add("2K3", disjoint_union(complete(3), complete(3)));
    add("K3,3-e", without_edges(complete_bipartite(3, 3), {{0, 3}}));
  }
  if (in_range(7)) {
    add("theta0", theta0());
    add("theta0-e01", without_edges(theta0(), {{0, 1}}));
    add("theta0+chord14", with_edges(theta0(), {{1, 4}}));
  }
  std::stable_sort(all.begin(), all.end(), [](const NamedGraph &a, const NamedGraph &b) {
    return a.graph.size() != b.graph.size() ? a.graph.size() < b.graph.size() : a.name < b.name;
  });
  return all;
}

LowerBoundPair prop_1_6_pair(int n, int k) {
  require(k >= 5, "prop_1_6_pair needs k >= 5");
  require(n >= k, "prop_1_6_pair needs n >= k");
  require(n <= kMaxPermSize, "prop_1_6_pair is limited to n <= 20");
  const int t = n / k, rem = n % k;

  std::vector<int> group(n);
  std::vector<VertexSet> blocks;
  for (int i = 0, v = 0; i < k; ++i) {
    const int size = i < rem ? t + 1 : t;
    blocks.push_back(range_set(v, v + size));
    for (int j = 0; j < size; ++j) group[v++] = i;
  }

  Graph x(n), y(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const int d = ((group[u] - group[v]) % k + k) % k;
      const bool near = d == 0 || d == 1 || d == k - 1;
      const bool adjacent_groups = d == 1 || d == k - 1;
      if (near) x.add_edge(u, v);
      if (!adjacent_groups) y.add_edge(u, v);
    }
  }

  const int dx = min_degree(x), dy = min_degree(y);
  // dx >= 3n/k - 4 and dy >= (k-2)n/k - 3, compared over the integers
  if (k * dx < 3 * n - 4 * k || k * dy < (k - 2) * n - 3 * k || !is_connected(x) ||
      !is_connected(y)) {
    throw std::logic_error("prop_1_6_pair post-condition failed");
  }

  LowerBoundPair out{std::move(x), std::move(y), Bijection::identity(n),
                     {{"n", n}, {"k", k}, {"t", t}, {"r", rem}, {"delta_x", dx}, {"delta_y", dy}},
                     blocks, blocks};
  return out;
}

LowerBoundPair thm_1_11_pair(int r, int d1, int d2) {
  require(r >= 2, "thm_1_11_pair needs r >= 2");
  require(2 * r <= kMaxPermSize, "thm_1_11_pair is limited to r <= 10");
  require(d1 >= 0 && d2 >= 0 && d1 <= r && d2 <= r, "thm_1_11_pair needs 0 <= d1, d2 <= r");
  require(d1 + d2 == 3 * r / 2, "thm_1_11_pair needs d1 + d2 = floor(3r/2)");

  const int big = ceil_div(r, 2), small = floor_div(r, 2);
  // Blocks laid out A, B, C, D with |A| = |D| = ceil(r/2), |B| = |C| = floor(r/2).
  const int a0 = 0, b0 = big, c0 = big + small, d0 = big + 2 * small;
  const int n = 2 * r;
  const VertexSet A = range_set(a0, b0), B = range_set(b0, c0), C = range_set(c0, d0),
                  D = range_set(d0, n);

  const int ad_degree = d1 - small;
  const int bc_degree = std::max(0, d1 - big);

  Graph x(n), y(n);
  for (int i = 0; i < big; ++i) {
    for (int j = 0; j < small; ++j) {
      x.add_edge(a0 + i, c0 + j);
      x.add_edge(b0 + j, d0 + i);
      y.add_edge(a0 + i, b0 + j);
      y.add_edge(c0 + j, d0 + i);
    }
  }
  // Circulant windows: A_i sees D_{i}, ..., D_{i+ad_degree-1} (indices mod |D|).
  for (int i = 0; i < big; ++i) {
    for (int j = 0; j < big; ++j) {
      const bool in_x = ((j - i) % big + big) % big < ad_degree;
      (in_x ? x : y).add_edge(a0 + i, d0 + j);
    }
  }
  for (int i = 0; i < small; ++i) {
    for (int j = 0; j < small; ++j) {
      const bool in_x = ((j - i) % small + small) % small < bc_degree;
      (in_x ? x : y).add_edge(b0 + i, c0 + j);
    }
  }
  x.set_bipartition(A | B, C | D);
  y.set_bipartition(A | C, B | D);

  Bijection sigma = Bijection::identity(n);
  const int dx = min_degree(x), dy = min_degree(y);
  if (dx != d1 || dy < d2 || !friendly_swaps(FsInstance(x, y), sigma).empty()) {
    throw std::logic_error("thm_1_11_pair post-condition failed");
  }
  return {std::move(x),
          std::move(y),
          sigma,
          {{"r", r}, {"d1", d1}, {"d2", d2}, {"delta_x", dx}, {"delta_y", dy}},
          {A, B, C, D},
          {A, B, C, D}};
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finalizer over the pair
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

using Rng = std::mt19937_64;

int pick(Rng &rng, int bound) { return std::uniform_int_distribution<int>(0, bound - 1)(rng); }

// Adds random allowed edges at every vertex below the floor.
template <class Allowed>
void top_up(Graph &g, int floor, Allowed &&allowed, Rng &rng) {
  std::vector<int> order(g.size());
  for (int v = 0; v < g.size(); ++v) order[v] = v;
  std::shuffle(order.begin(), order.end(), rng);
  for (int v : order) {
    while (g.degree(v) < floor) {
      const auto options = allowed(v).minus(g.neighbors(v)).minus(VertexSet::single(v)).members();
      if (options.empty()) throw std::invalid_argument("minimum degree is infeasible");
      g.add_edge(v, options[pick(rng, static_cast<int>(options.size()))]);
    }
  }
}

Graph sample_min_degree(int n, int floor, Rng &rng) {
  const double lo = n > 1 ? static_cast<double>(floor) / (n - 1) : 0.0;
  const double hi = n > 1 ? std::min(1.0, (floor + 1.5) / (n - 1)) : 0.0;
  const double p = std::uniform_real_distribution<double>(lo, std::max(lo, hi))(rng);
  std::bernoulli_distribution coin(std::clamp(p, 0.0, 1.0));
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) g.add_edge(u, v);
    }
  }
  top_up(g, floor, [&](int) { return VertexSet::full(n); }, rng);
  return g;
}

void join_components(Graph &g, Rng &rng) {
  auto comps = connected_components(g);
  for (std::size_t i = 1; i < comps.size(); ++i) {
    const auto left = comps[i - 1].members(), right = comps[i].members();
    g.add_edge(left[pick(rng, static_cast<int>(left.size()))],
               right[pick(rng, static_cast<int>(right.size()))]);
  }
}

constexpr int kConnectAttempts = 200;

}  // namespace

Graph random_graph_min_degree(int n, int min_deg, bool connected, std::uint64_t seed) {
  require(n >= 1 && n <= kMaxGraphSize, "random graph size must be in [1, 32]");
  require(min_deg >= 0 && min_deg <= n - 1, "min degree must be in [0, n-1]");
  Rng rng(seed);
  for (int attempt = 0; attempt < kConnectAttempts; ++attempt) {
    Graph g = sample_min_degree(n, min_deg, rng);
    if (!connected || is_connected(g)) return g;
  }
  Graph g = sample_min_degree(n, min_deg, rng);
  join_components(g, rng);
  return g;
}

Graph random_graph_exact_min_degree(int n, int degree, bool connected, std::uint64_t seed) {
  require(n >= 1 && n <= kMaxGraphSize, "random graph size must be in [1, 32]");
  require(degree >= 0 && degree <= n - 1, "min degree must be in [0, n-1]");
  require(!(connected && degree == 0 && n > 1), "a connected graph on n > 1 vertices has no isolated vertex");
  Rng rng(seed);
  for (int attempt = 0; attempt < kConnectAttempts; ++attempt) {
    Graph g = random_graph_min_degree(n, degree, connected, rng());
    if (min_degree(g) == degree) return g;
    // Pull one low-degree vertex down to the target by removing edges to
    // neighbors that can spare one.
    std::vector<int> order(n);
    for (int v = 0; v < n; ++v) order[v] = v;
    std::shuffle(order.begin(), order.end(), rng);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) < g.degree(b); });
    const int v = order.front();
    auto nbrs = g.neighbors(v).members();
    std::shuffle(nbrs.begin(), nbrs.end(), rng);
    for (int w : nbrs) {
      if (g.degree(v) == degree) break;
      if (g.degree(w) <= degree) continue;
      g.remove_edge(v, w);
      if (connected && !is_connected(g)) g.add_edge(v, w);
    }
    if (min_degree(g) == degree && (!connected || is_connected(g))) return g;
  }
  throw std::invalid_argument("could not sample a graph with minimum degree exactly " +
                              std::to_string(degree) + " on " + std::to_string(n) + " vertices");
}

Graph random_bipartite_subgraph(int r, int min_deg, std::uint64_t seed) {
  require(r >= 1 && 2 * r <= kMaxGraphSize, "random bipartite subgraph needs 1 <= r <= 16");
  require(min_deg >= 0 && min_deg <= r, "min degree must be in [0, r]");
  Rng rng(seed);
  const double lo = static_cast<double>(min_deg) / r;
  const double hi = std::min(1.0, (min_deg + 1.5) / r);
  const double p = std::uniform_real_distribution<double>(lo, std::max(lo, hi))(rng);
  std::bernoulli_distribution coin(std::clamp(p, 0.0, 1.0));
  Graph g(2 * r);
  for (int u = 0; u < r; ++u) {
    for (int v = r; v < 2 * r; ++v) {
      if (coin(rng)) g.add_edge(u, v);
    }
  }
  const VertexSet left = VertexSet::full(r), right = VertexSet::full(2 * r).minus(left);
  top_up(g, min_deg, [&](int v) { return v < r ? right : left; }, rng);
  g.set_bipartition(left, right);
  return g;
}

}  // namespace fslab
