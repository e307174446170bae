#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fslab/graph.hpp"
#include "fslab/perm.hpp"

namespace fslab {

// Named families. Each throws std::invalid_argument on an illegal size.
// Labelings: star centers at 0; star_plus adds leaf edge (1, 2); cycle is
// 0-1-...-(n-1)-0; path is 0-1-...-(n-1); complete_bipartite puts 0..a-1 in
// the first part. Star, path, even cycle and complete bipartite graphs carry
// their bipartition.
Graph star(int n);
Graph star_plus(int n);
Graph cycle(int n);
Graph path(int n);
Graph complete(int n);
Graph complete_bipartite(int a, int b);
Graph theta0();

struct NamedGraph {
  std::string name;
  Graph graph;
};

// Small reference graphs (named families plus wheels, prisms, bowties, theta
// variants and disconnected examples) with min_n <= size <= max_n, ordered by
// size then name.
std::vector<NamedGraph> fixture_zoo(int min_n, int max_n);

// A pair of graphs with a witness bijection showing FS(x, y) is not (fully)
// connected.
struct LowerBoundPair {
  Graph x;
  Graph y;
  Bijection sigma;
  // Ordered parameter record, e.g. {"n", 7}, {"k", 5}, {"t", 1}.
  std::vector<std::pair<std::string, std::int64_t>> meta;
  // Vertex groups in construction order: A_1..A_k and B_1..B_k for the
  // cyclic-group pair; A, B, C, D blocks of X and of Y for the bipartite pair.
  std::vector<VertexSet> x_blocks;
  std::vector<VertexSet> y_blocks;

  std::int64_t param(const std::string &key) const;
};

// Cyclic groups A_1..A_k (sizes t+1 then t, where n = kt + r). X joins groups
// at cyclic distance <= 1, Y joins groups not at cyclic distance exactly 1,
// sigma maps A_i onto B_i. Requires n >= k >= 5 and n <= 20.
LowerBoundPair prop_1_6_pair(int n, int k);

// Bipartite pair on K_{r,r} whose sigma admits no friendly swap. Requires
// r >= 2, d1 + d2 = floor(3r/2), d1 <= r, d2 <= r and 2r <= 20.
LowerBoundPair thm_1_11_pair(int r, int d1, int d2);

// Heuristic sampler: G(n, p) with p near the target, vertices below
// min_degree topped up with random edges, rejection (then repair) for
// connectivity. Deterministic per seed; no uniformity claim.
Graph random_graph_min_degree(int n, int min_degree, bool connected, std::uint64_t seed);

// As above, then edges are trimmed until the minimum degree is exactly
// `degree`. Throws std::invalid_argument when no such graph is found.
Graph random_graph_exact_min_degree(int n, int degree, bool connected, std::uint64_t seed);

// Edge-subgraph of K_{r,r} (parts 0..r-1 and r..2r-1) with min degree >= min_degree.
Graph random_bipartite_subgraph(int r, int min_degree, std::uint64_t seed);

// Deterministic seed for the index-th sample of a seeded run.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace fslab
