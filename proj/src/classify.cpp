#include "fslab/classify.hpp"

#include <cassert>

namespace fslab {

ClassificationReport classify(const Graph &g) {
  ClassificationReport r;
  r.biconnected = is_biconnected(g);
  r.bipartite = is_bipartite(g);
  r.is_cycle = is_cycle_graph(g);
  r.is_theta0 = is_theta_zero(g);
  const bool long_cycle = r.is_cycle && g.size() >= 4;

  r.wilsonian = r.biconnected && !r.bipartite && !r.is_cycle && !r.is_theta0;
  r.almost_wilsonian = r.biconnected && !long_cycle && !r.is_theta0;
  assert(!r.wilsonian || r.almost_wilsonian);

  if (!r.biconnected) r.reasons.emplace_back("not_biconnected");
  if (r.bipartite) r.reasons.emplace_back("bipartite");
  if (r.is_cycle) r.reasons.emplace_back("cycle");
  if (long_cycle) r.reasons.emplace_back("cycle_ge4");
  if (r.is_theta0) r.reasons.emplace_back("theta0");
  return r;
}

bool check_half_degree_wilsonian(const Graph &g) { return 2 * min_degree(g) > g.size(); }

std::optional<int> spanning_star_center(const Graph &g) {
  for (int v = 0; v < g.size(); ++v) {
    if (g.degree(v) == g.size() - 1) return v;
  }
  return std::nullopt;
}

std::optional<StarPlus> spanning_star_plus(const Graph &g) {
  const auto center = spanning_star_center(g);
  if (!center) return std::nullopt;
  for (auto [u, v] : g.edges()) {
    if (u != *center && v != *center) return StarPlus{*center, {u, v}};
  }
  return std::nullopt;
}

}  // namespace fslab
