#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fslab {

inline constexpr int kMaxGraphSize = 32;

// Set of vertices of a graph with at most kMaxGraphSize vertices.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint32_t bits) : bits_(bits) {}

  static constexpr VertexSet full(int n) {
    return VertexSet(static_cast<std::uint32_t>((std::uint64_t{1} << n) - 1));
  }
  static constexpr VertexSet single(int v) { return VertexSet(std::uint32_t{1} << v); }
  static VertexSet of(const std::vector<int> &vertices);

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1u; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  // Smallest member; undefined on the empty set.
  constexpr int first() const { return std::countr_zero(bits_); }

  constexpr void insert(int v) { bits_ |= std::uint32_t{1} << v; }
  constexpr void erase(int v) { bits_ &= ~(std::uint32_t{1} << v); }

  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet minus(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  constexpr bool is_subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool operator==(const VertexSet &) const = default;

  std::vector<int> members() const;

 private:
  std::uint32_t bits_ = 0;
};

using Bipartition = std::pair<VertexSet, VertexSet>;

// Simple undirected graph on vertices 0..n-1 stored as adjacency bitrows.
class Graph {
 public:
  // Edgeless graph on n vertices; throws std::invalid_argument unless 1 <= n <= 32.
  explicit Graph(int n);

  static Graph from_edges(int n, const std::vector<std::pair<int, int>> &edges);

  int size() const { return n_; }
  bool adjacent(int u, int v) const { return adj_[u].contains(v); }
  VertexSet neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return adj_[v].size(); }
  int edge_count() const;
  // Edges (u, v) with u < v in lexicographic order.
  std::vector<std::pair<int, int>> edges() const;

  // Both throw std::invalid_argument on self-loops or out-of-range endpoints.
  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  const std::optional<Bipartition> &bipartition() const { return bipartition_; }
  // Throws std::invalid_argument if the parts overlap, miss a vertex, or an
  // edge lies inside a part.
  void set_bipartition(VertexSet a, VertexSet b);
  void clear_bipartition() { bipartition_.reset(); }

  const std::optional<std::vector<std::string>> &labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels);

  // Structural equality (adjacency only).
  bool same_edges(const Graph &o) const { return n_ == o.n_ && adj_ == o.adj_; }

 private:
  void check_vertex(int v) const;

  int n_;
  std::vector<VertexSet> adj_;
  std::optional<Bipartition> bipartition_;
  std::optional<std::vector<std::string>> labels_;
};

int min_degree(const Graph &g);

struct InducedSubgraph {
  Graph graph;
  // original_vertex[i] is the vertex of the host graph relabeled to i.
  std::vector<int> original_vertex;
};

// Throws std::invalid_argument if s is empty or leaves the vertex range.
InducedSubgraph induced_subgraph(const Graph &g, VertexSet s);

// Components sorted by smallest contained vertex.
std::vector<VertexSet> connected_components(const Graph &g);
bool is_connected(const Graph &g);

// Vertices whose removal increases the number of components.
VertexSet cut_vertices(const Graph &g);

// Connected with no cut vertex. K_1 is not biconnected; K_2 is.
bool is_biconnected(const Graph &g);

struct BipartiteCheck {
  bool bipartite = false;
  std::optional<Bipartition> parts;
  // Closed walk v0, v1, ..., vk (v0 adjacent to vk) of odd length when not bipartite.
  std::vector<int> odd_cycle;
};

BipartiteCheck check_bipartite(const Graph &g);
inline bool is_bipartite(const Graph &g) { return check_bipartite(g).bipartite; }

bool is_cycle_graph(const Graph &g);

// The exceptional 7-vertex graph of Wilson's theorem: the 6-cycle 0-1-2-3-4-5
// with a seventh vertex 6 adjacent to 0 and 3.
Graph theta_zero_reference();
bool is_theta_zero(const Graph &g);

}  // namespace fslab
