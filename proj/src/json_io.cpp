#include "fslab/json_io.hpp"

#include <fstream>
#include <set>

namespace fslab {

namespace {

[[noreturn]] void fail(const std::string &msg) { throw FormatError(msg); }

int as_int(const json &j, const std::string &what) {
  if (!j.is_number_integer()) fail(what + " must be an integer");
  return j.get<int>();
}

json set_to_json(VertexSet s) { return s.members(); }

VertexSet set_from_json(const json &j, int n, const std::string &what) {
  if (!j.is_array()) fail(what + " must be an array");
  VertexSet s;
  for (const auto &e : j) {
    const int v = as_int(e, what + " entry");
    if (v < 0 || v >= n) fail(what + " entry " + std::to_string(v) + " out of range");
    if (s.contains(v)) fail(what + " repeats vertex " + std::to_string(v));
    s.insert(v);
  }
  return s;
}

}  // namespace

json graph_to_json(const Graph &g) {
  json j;
  j["n"] = g.size();
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  if (g.bipartition()) {
    j["bipartition"] = {set_to_json(g.bipartition()->first), set_to_json(g.bipartition()->second)};
  } else {
    j["bipartition"] = nullptr;
  }
  j["labels"] = g.labels() ? json(*g.labels()) : json(nullptr);
  return j;
}

Graph graph_from_json(const json &j) {
  if (!j.is_object()) fail("graph must be a JSON object");
  if (!j.contains("n")) fail("graph is missing \"n\"");
  const int n = as_int(j.at("n"), "n");
  if (n < 1 || n > kMaxGraphSize) fail("n must be in [1, 32]");
  Graph g(n);

  if (!j.contains("edges") || !j.at("edges").is_array()) fail("graph needs an \"edges\" array");
  std::set<std::pair<int, int>> seen;
  for (const auto &e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) fail("each edge must be a pair [u, v]");
    const int u = as_int(e[0], "edge endpoint"), v = as_int(e[1], "edge endpoint");
    if (u < 0 || v >= n || u >= n || v < 0) fail("edge endpoint out of range");
    if (u >= v) fail("edge [" + std::to_string(u) + "," + std::to_string(v) + "] must have u < v");
    if (!seen.emplace(u, v).second) {
      fail("duplicate edge [" + std::to_string(u) + "," + std::to_string(v) + "]");
    }
    g.add_edge(u, v);
  }

  if (j.contains("bipartition") && !j.at("bipartition").is_null()) {
    const auto &bp = j.at("bipartition");
    if (!bp.is_array() || bp.size() != 2) fail("bipartition must be two vertex lists");
    try {
      g.set_bipartition(set_from_json(bp[0], n, "bipartition"), set_from_json(bp[1], n, "bipartition"));
    } catch (const std::invalid_argument &e) {
      fail(e.what());
    }
  }
  if (j.contains("labels") && !j.at("labels").is_null()) {
    const auto &lj = j.at("labels");
    if (!lj.is_array()) fail("labels must be an array of strings");
    std::vector<std::string> labels;
    for (const auto &l : lj) {
      if (!l.is_string()) fail("labels must be an array of strings");
      labels.push_back(l.get<std::string>());
    }
    if (static_cast<int>(labels.size()) != n) fail("label count does not match n");
    g.set_labels(std::move(labels));
  }
  return g;
}

json bijection_to_json(const Bijection &b) { return b.to_vector(); }

Bijection bijection_from_json(const json &j) {
  if (!j.is_array()) fail("bijection must be an integer array");
  std::vector<int> map;
  for (const auto &e : j) map.push_back(as_int(e, "bijection entry"));
  try {
    return Bijection::from(map);
  } catch (const std::invalid_argument &e) {
    fail(e.what());
  }
}

json swaps_to_json(const SwapSequence &s) {
  json j = json::array();
  for (const Swap &sw : s) j.push_back({sw.u, sw.v});
  return j;
}

SwapSequence swaps_from_json(const json &j) {
  if (!j.is_array()) fail("swap sequence must be an array of pairs");
  SwapSequence out;
  for (const auto &e : j) {
    if (!e.is_array() || e.size() != 2) fail("each swap must be a pair [u, v]");
    const int u = as_int(e[0], "swap vertex"), v = as_int(e[1], "swap vertex");
    if (u == v) fail("swap needs two distinct vertices");
    out.push_back(Swap::of(u, v));
  }
  return out;
}

json census_to_json(const ComponentCensus &c) {
  json j;
  j["n"] = c.n;
  j["num_components"] = c.num_components();
  j["sizes"] = c.sizes;
  j["representatives"] = c.representatives;
  return j;
}

json classification_to_json(const ClassificationReport &r) {
  json j;
  j["biconnected"] = r.biconnected;
  j["bipartite"] = r.bipartite;
  j["is_cycle"] = r.is_cycle;
  j["is_theta0"] = r.is_theta0;
  j["wilsonian"] = r.wilsonian;
  j["almost_wilsonian"] = r.almost_wilsonian;
  j["reasons"] = r.reasons;
  return j;
}

json pair_sidecar_to_json(const LowerBoundPair &p) {
  json meta = json::object();
  for (const auto &[k, v] : p.meta) meta[k] = v;
  json j;
  j["sigma"] = bijection_to_json(p.sigma);
  j["meta"] = std::move(meta);
  return j;
}

json pair_to_json(const LowerBoundPair &p) {
  json side = pair_sidecar_to_json(p);
  json j;
  j["x"] = graph_to_json(p.x);
  j["y"] = graph_to_json(p.y);
  j["sigma"] = side["sigma"];
  j["meta"] = side["meta"];
  return j;
}

json read_json_file(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) fail("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error &e) {
    fail(path.string() + ": " + e.what());
  }
}

void write_json_file(const std::filesystem::path &path, const json &j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << j.dump(2) << '\n';
}

Graph load_graph(const std::filesystem::path &path) { return graph_from_json(read_json_file(path)); }

}  // namespace fslab
