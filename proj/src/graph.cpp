#include "fslab/graph.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

namespace fslab {

VertexSet VertexSet::of(const std::vector<int> &vertices) {
  VertexSet s;
  for (int v : vertices) {
    if (v < 0 || v >= kMaxGraphSize) throw std::invalid_argument("vertex out of range");
    s.insert(v);
  }
  return s;
}

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  out.reserve(size());
  for (std::uint32_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
  return out;
}

Graph::Graph(int n) : n_(n) {
  if (n < 1 || n > kMaxGraphSize) {
    throw std::invalid_argument("graph size must be in [1, 32], got " + std::to_string(n));
  }
  adj_.resize(n);
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>> &edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) {
    throw std::invalid_argument("vertex " + std::to_string(v) + " outside 0.." +
                                std::to_string(n_ - 1));
  }
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  adj_[u].insert(v);
  adj_[v].insert(u);
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  adj_[u].erase(v);
  adj_[v].erase(u);
}

int Graph::edge_count() const {
  int twice = 0;
  for (const auto &row : adj_) twice += row.size();
  return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u) {
    for (int v : adj_[u].members()) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

void Graph::set_bipartition(VertexSet a, VertexSet b) {
  if (!(a & b).empty()) throw std::invalid_argument("bipartition parts overlap");
  if ((a | b) != VertexSet::full(n_)) {
    throw std::invalid_argument("bipartition parts do not cover all vertices");
  }
  for (auto [u, v] : edges()) {
    if (a.contains(u) == a.contains(v)) {
      throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                  ") lies inside a bipartition part");
    }
  }
  bipartition_ = Bipartition{a, b};
}

void Graph::set_labels(std::vector<std::string> labels) {
  if (static_cast<int>(labels.size()) != n_) {
    throw std::invalid_argument("label count does not match vertex count");
  }
  labels_ = std::move(labels);
}

int min_degree(const Graph &g) {
  int best = g.size();
  for (int v = 0; v < g.size(); ++v) best = std::min(best, g.degree(v));
  return best;
}

InducedSubgraph induced_subgraph(const Graph &g, VertexSet s) {
  if (s.empty()) throw std::invalid_argument("induced subgraph on empty vertex set");
  if (!s.is_subset_of(VertexSet::full(g.size()))) {
    throw std::invalid_argument("induced subgraph vertex set leaves the vertex range");
  }
  std::vector<int> original = s.members();
  std::array<int, kMaxGraphSize> index{};
  for (int i = 0; i < static_cast<int>(original.size()); ++i) index[original[i]] = i;

  Graph sub(static_cast<int>(original.size()));
  for (int i = 0; i < static_cast<int>(original.size()); ++i) {
    for (int w : (g.neighbors(original[i]) & s).members()) {
      if (original[i] < w) sub.add_edge(i, index[w]);
    }
  }
  return {std::move(sub), std::move(original)};
}

namespace {

VertexSet component_of(const Graph &g, int start, VertexSet allowed) {
  VertexSet seen = VertexSet::single(start);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    for (int v : frontier.members()) next = next | g.neighbors(v);
    next = (next & allowed).minus(seen);
    seen = seen | next;
    frontier = next;
  }
  return seen;
}

struct LowpointState {
  const Graph &g;
  std::array<int, kMaxGraphSize> disc{};
  std::array<int, kMaxGraphSize> low{};
  int timer = 0;
  VertexSet cuts{};

  void dfs(int v, int parent) {
    disc[v] = low[v] = ++timer;
    int children = 0;
    for (int w : g.neighbors(v).members()) {
      if (w == parent) continue;
      if (disc[w] != 0) {
        low[v] = std::min(low[v], disc[w]);
        continue;
      }
      ++children;
      dfs(w, v);
      low[v] = std::min(low[v], low[w]);
      if (parent >= 0 && low[w] >= disc[v]) cuts.insert(v);
    }
    if (parent < 0 && children >= 2) cuts.insert(v);
  }
};

}  // namespace

std::vector<VertexSet> connected_components(const Graph &g) {
  std::vector<VertexSet> out;
  VertexSet remaining = VertexSet::full(g.size());
  while (!remaining.empty()) {
    VertexSet c = component_of(g, remaining.first(), remaining);
    out.push_back(c);
    remaining = remaining.minus(c);
  }
  return out;
}

bool is_connected(const Graph &g) {
  return component_of(g, 0, VertexSet::full(g.size())) == VertexSet::full(g.size());
}

VertexSet cut_vertices(const Graph &g) {
  LowpointState st{g, {}, {}, 0, {}};
  for (int v = 0; v < g.size(); ++v) {
    if (st.disc[v] == 0) st.dfs(v, -1);
  }
  return st.cuts;
}

bool is_biconnected(const Graph &g) {
  if (g.size() < 2) return false;
  return is_connected(g) && cut_vertices(g).empty();
}

BipartiteCheck check_bipartite(const Graph &g) {
  const int n = g.size();
  std::vector<int> color(n, -1), parent(n, -1), depth(n, 0);
  for (int s = 0; s < n; ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::vector<int> queue{s};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int v = queue[head];
      for (int w : g.neighbors(v).members()) {
        if (color[w] < 0) {
          color[w] = 1 - color[v];
          parent[w] = v;
          depth[w] = depth[v] + 1;
          queue.push_back(w);
        } else if (color[w] == color[v]) {
          // Climb both BFS branches to their meeting point.
          std::vector<int> left{v}, right{w};
          int a = v, b = w;
          while (a != b) {
            if (depth[a] >= depth[b]) {
              a = parent[a];
              left.push_back(a);
            } else {
              b = parent[b];
              right.push_back(b);
            }
          }
          // Both lists end at the common ancestor; join lca..v with w..(child of lca).
          right.pop_back();
          std::reverse(left.begin(), left.end());
          left.insert(left.end(), right.begin(), right.end());
          return {false, std::nullopt, left};
        }
      }
    }
  }
  VertexSet a, b;
  for (int v = 0; v < n; ++v) (color[v] == 0 ? a : b).insert(v);
  return {true, Bipartition{a, b}, {}};
}

bool is_cycle_graph(const Graph &g) {
  if (g.size() < 3) return false;
  for (int v = 0; v < g.size(); ++v) {
    if (g.degree(v) != 2) return false;
  }
  return is_connected(g);
}

Graph theta_zero_reference() {
  return Graph::from_edges(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}, {0, 6}, {3, 6}});
}

namespace {

std::vector<int> sorted_degrees(const Graph &g) {
  std::vector<int> d(g.size());
  for (int v = 0; v < g.size(); ++v) d[v] = g.degree(v);
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

bool is_theta_zero(const Graph &g) {
  static const Graph reference = theta_zero_reference();
  if (g.size() != reference.size() || g.edge_count() != reference.edge_count()) return false;
  if (sorted_degrees(g) != sorted_degrees(reference)) return false;

  std::array<int, 7> image{};
  std::iota(image.begin(), image.end(), 0);
  const auto ref_edges = reference.edges();
  do {
    bool ok = true;
    for (auto [u, v] : ref_edges) {
      if (!g.adjacent(image[u], image[v])) {
        ok = false;
        break;
      }
    }
    // Equal edge counts make an edge-preserving injection an isomorphism.
    if (ok) return true;
  } while (std::next_permutation(image.begin(), image.end()));
  return false;
}

}  // namespace fslab
