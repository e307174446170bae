#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fslab/graph.hpp"

namespace fslab {

struct ClassificationReport {
  bool biconnected = false;
  bool bipartite = false;
  bool is_cycle = false;
  bool is_theta0 = false;
  // biconnected, not bipartite, not a cycle, not theta0
  bool wilsonian = false;
  // biconnected, not a cycle on four or more vertices, not theta0
  bool almost_wilsonian = false;
  // One tag per violated condition: "not_biconnected", "bipartite", "cycle",
  // "cycle_ge4", "theta0".
  std::vector<std::string> reasons;
};

ClassificationReport classify(const Graph &g);

// min degree strictly above n/2
bool check_half_degree_wilsonian(const Graph &g);

// Smallest vertex adjacent to every other vertex.
std::optional<int> spanning_star_center(const Graph &g);

struct StarPlus {
  int center;
  std::pair<int, int> extra_edge;
};

// Smallest spanning-star center together with the lexicographically first
// edge avoiding it.
std::optional<StarPlus> spanning_star_plus(const Graph &g);

}  // namespace fslab
