#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "fslab/classify.hpp"
#include "fslab/constructions.hpp"
#include "fslab/fs_engine.hpp"
#include "fslab/graph.hpp"
#include "fslab/perm.hpp"

namespace fslab {

using json = nlohmann::ordered_json;

// Raised for any malformed document; the message names the offending field.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// {"n": int, "edges": [[u, v], ...], "bipartition": [[...], [...]] | null,
//  "labels": [string, ...] | null}, edges listed with u < v.
json graph_to_json(const Graph &g);
Graph graph_from_json(const json &j);

json bijection_to_json(const Bijection &b);
Bijection bijection_from_json(const json &j);

json swaps_to_json(const SwapSequence &s);
SwapSequence swaps_from_json(const json &j);

// {"n", "num_components", "sizes", "representatives"}
json census_to_json(const ComponentCensus &c);

json classification_to_json(const ClassificationReport &r);

// {"sigma": [...], "meta": {...}} accompanying the two graph files.
json pair_sidecar_to_json(const LowerBoundPair &p);
// {"x": graph, "y": graph, "sigma": [...], "meta": {...}}
json pair_to_json(const LowerBoundPair &p);

json read_json_file(const std::filesystem::path &path);
void write_json_file(const std::filesystem::path &path, const json &j);

Graph load_graph(const std::filesystem::path &path);

}  // namespace fslab
