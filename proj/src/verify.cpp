#include "fslab/verify.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <exception>
#include <map>
#include <mutex>
#include <random>
#include <stdexcept>
#include <thread>

#include "fslab/classify.hpp"
#include "fslab/constructions.hpp"

namespace fslab {

namespace {

constexpr std::array<std::pair<ClaimId, const char *>, 13> kClaimNames{{
    {ClaimId::THM_1_4, "THM_1_4"},
    {ClaimId::THM_1_5, "THM_1_5"},
    {ClaimId::THM_1_10, "THM_1_10"},
    {ClaimId::PROP_2_2, "PROP_2_2"},
    {ClaimId::PROP_2_3, "PROP_2_3"},
    {ClaimId::THM_2_6, "THM_2_6"},
    {ClaimId::THM_2_8, "THM_2_8"},
    {ClaimId::PROP_1_6, "PROP_1_6"},
    {ClaimId::THM_1_11, "THM_1_11"},
    {ClaimId::LEM_4_1, "LEM_4_1"},
    {ClaimId::LEM_6_2, "LEM_6_2"},
    {ClaimId::PROP_2_1, "PROP_2_1"},
    {ClaimId::COR_1_12, "COR_1_12"},
}};

constexpr const char *kConj81 = "CONJ_8_1";
constexpr const char *kConj82 = "CONJ_8_2";

using Clock = std::chrono::steady_clock;

[[noreturn]] void bad(const std::string &msg) { throw std::invalid_argument(msg); }

int resolve_threads(int t) {
  if (t > 0) return t;
  const unsigned h = std::thread::hardware_concurrency();
  return h == 0 ? 1 : static_cast<int>(h);
}

// Runs fn(i) for i < count over a small pool; results keep index order.
template <class Fn>
std::vector<VerificationReport> parallel_map(std::size_t count, int threads, Fn fn) {
  std::vector<VerificationReport> out(count);
  std::atomic<std::size_t> next{0};
  std::exception_ptr err;
  std::mutex m;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        out[i] = fn(i);
      } catch (...) {
        std::lock_guard lock(m);
        if (!err) err = std::current_exception();
        next.store(count);
        return;
      }
    }
  };
  const int t = static_cast<int>(std::min<std::size_t>(resolve_threads(threads), count));
  if (t <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int i = 0; i < t; ++i) pool.emplace_back(worker);
  }
  if (err) std::rethrow_exception(err);
  return out;
}

VerifyOptions inner_options(const VerifyOptions &o) {
  VerifyOptions inner = o;
  inner.threads = 1;
  return inner;
}

VerificationReport merge(std::string claim, std::optional<std::uint64_t> seed,
                         std::vector<VerificationReport> parts) {
  VerificationReport r;
  r.claim_id = std::move(claim);
  r.seed = seed;
  for (auto &p : parts) r.absorb(std::move(p));
  return r;
}

VerificationReport single(ClaimId id, InstanceResult res) {
  VerificationReport r;
  r.claim_id = to_string(id);
  r.instances.push_back(std::move(res));
  return r;
}

ComponentCensus run_census(const Graph &x, const Graph &y, const VerifyOptions &o) {
  CensusOptions c;
  c.cap = o.cap;
  c.threads = o.threads;
  return component_census(FsInstance(x, y), c);
}

json census_evidence(const ComponentCensus &c) {
  json j;
  j["num_components"] = c.num_components();
  if (c.num_components() <= 8) {
    j["sizes"] = c.sizes;
  } else {
    j["largest_component"] = *std::max_element(c.sizes.begin(), c.sizes.end());
  }
  return j;
}

void require_same_size(const Graph &x, const Graph &y) {
  if (x.size() != y.size()) {
    bad("graphs differ in size (" + std::to_string(x.size()) + " vs " + std::to_string(y.size()) +
        ")");
  }
}

json pair_instance(const Graph &x, const Graph &y) {
  json j;
  j["x"] = graph_to_json(x);
  j["y"] = graph_to_json(y);
  return j;
}

bool thm_1_4_hypothesis(int n, int dx, int dy) {
  const int lo = std::min(dx, dy), hi = std::max(dx, dy);
  return n >= 6 && 2 * dx > n && 2 * dy > n && 2 * lo + 3 * hi >= 3 * n;
}

bool thm_1_5_degrees(int n, int dx, int dy) {
  return std::min(dx, dy) + 2 * std::max(dx, dy) >= 2 * n;
}

// delta(X) + delta(Y) >= 3r/2 + 1, kept in integers.
bool thm_1_10_degrees(int r, int dx, int dy) { return 2 * (dx + dy) >= 3 * r + 2; }

int ceil_half(int a) { return (a + 1) / 2; }

const Bipartition &declared_bipartition(const Graph &g, const char *which) {
  if (!g.bipartition()) bad(std::string(which) + " has no declared bipartition");
  return *g.bipartition();
}

void require_rr_parts(const Graph &g, int r, const char *which) {
  const auto &bp = declared_bipartition(g, which);
  if (g.size() != 2 * r || bp.first.size() != r || bp.second.size() != r) {
    bad(std::string(which) + " must be a subgraph of K_{r,r} with parts of size " +
        std::to_string(r));
  }
}

// Parity of sign plus the number of A_X positions holding A_Y people.
int parity_phi(const Bijection &b, VertexSet ax, VertexSet ay) {
  int count = sign(b);
  for (int a : ax.members()) count += ay.contains(b[a]) ? 1 : 0;
  return count & 1;
}

// Components of g restricted to s, in g's labels.
std::vector<VertexSet> components_within(const Graph &g, VertexSet s) {
  auto sub = induced_subgraph(g, s);
  std::vector<VertexSet> out;
  for (VertexSet c : connected_components(sub.graph)) {
    VertexSet mapped;
    for (int v : c.members()) mapped.insert(sub.original_vertex[v]);
    out.push_back(mapped);
  }
  return out;
}

Graph restrict(const Graph &g, VertexSet s) { return induced_subgraph(g, s).graph; }

// Random bipartite graph with parts 0..a-1 and a..n-1.
Graph random_bipartite(int n, int a, double p, std::mt19937_64 &rng) {
  Graph g(n);
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < a; ++u) {
    for (int v = a; v < n; ++v) {
      if (coin(rng)) g.add_edge(u, v);
    }
  }
  VertexSet left, right;
  for (int v = 0; v < n; ++v) (v < a ? left : right).insert(v);
  g.set_bipartition(left, right);
  return g;
}

int uniform_int(std::mt19937_64 &rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Every edge-subgraph of K_{r,r} (parts 0..r-1, r..2r-1); only sensible for tiny r.
std::vector<Graph> all_rr_subgraphs(int r) {
  std::vector<std::pair<int, int>> slots;
  for (int a = 0; a < r; ++a) {
    for (int b = r; b < 2 * r; ++b) slots.emplace_back(a, b);
  }
  if (slots.size() > 16) bad("exhaustive K_{r,r} subgraph enumeration needs r <= 4");
  const Graph full = complete_bipartite(r, r);
  const Bipartition parts = *full.bipartition();
  std::vector<Graph> out;
  for (std::uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
    Graph g(2 * r);
    for (std::size_t i = 0; i < slots.size(); ++i) {
      if ((mask >> i) & 1u) g.add_edge(slots[i].first, slots[i].second);
    }
    g.set_bipartition(parts.first, parts.second);
    out.push_back(std::move(g));
  }
  return out;
}

// ----- params -----

int param_int(const json &p, const char *key, std::optional<int> fallback = std::nullopt) {
  if (!p.contains(key)) {
    if (fallback) return *fallback;
    bad(std::string("missing parameter \"") + key + "\"");
  }
  if (!p.at(key).is_number_integer()) bad(std::string("parameter \"") + key + "\" must be an integer");
  return p.at(key).get<int>();
}

std::uint64_t param_seed(const json &p) {
  if (!p.contains("seed")) return 1;
  if (!p.at("seed").is_number_unsigned() && !p.at("seed").is_number_integer()) {
    bad("parameter \"seed\" must be a non-negative integer");
  }
  return p.at("seed").get<std::uint64_t>();
}

Graph param_graph(const json &p, const char *key) {
  if (!p.contains(key)) bad(std::string("missing graph parameter \"") + key + "\"");
  try {
    return graph_from_json(p.at(key));
  } catch (const FormatError &e) {
    bad(std::string("parameter \"") + key + "\": " + e.what());
  }
}

VertexSet param_set(const json &p, const char *key, int n) {
  if (!p.contains(key) || !p.at(key).is_array()) bad(std::string("missing vertex list \"") + key + "\"");
  VertexSet s;
  for (const auto &e : p.at(key)) {
    if (!e.is_number_integer()) bad(std::string("\"") + key + "\" entries must be integers");
    const int v = e.get<int>();
    if (v < 0 || v >= n) bad(std::string("\"") + key + "\" entry out of range");
    s.insert(v);
  }
  return s;
}

}  // namespace

std::string to_string(ClaimId id) {
  for (const auto &[k, name] : kClaimNames) {
    if (k == id) return name;
  }
  return "?";
}

std::optional<ClaimId> parse_claim_id(std::string_view s) {
  for (const auto &[k, name] : kClaimNames) {
    if (s == name) return k;
  }
  return std::nullopt;
}

std::size_t VerificationReport::non_vacuous() const {
  return static_cast<std::size_t>(std::count_if(
      instances.begin(), instances.end(), [](const InstanceResult &r) { return r.hypothesis_holds; }));
}

std::size_t VerificationReport::counterexample_count() const {
  return static_cast<std::size_t>(std::count_if(
      instances.begin(), instances.end(), [](const InstanceResult &r) { return r.is_counterexample(); }));
}

void VerificationReport::absorb(VerificationReport other) {
  for (auto &i : other.instances) instances.push_back(std::move(i));
  for (auto &n : other.notes) notes.push_back(std::move(n));
  elapsed_seconds += other.elapsed_seconds;
}

json report_to_json(const VerificationReport &r, bool include_timing) {
  json j;
  j["claim_id"] = r.claim_id;
  j["seed"] = r.seed ? json(*r.seed) : json(nullptr);
  j["instances_checked"] = r.instances_checked();
  j["non_vacuous"] = r.non_vacuous();
  j["vacuous"] = r.vacuous();
  j["counterexample_count"] = r.counterexample_count();
  j["notes"] = r.notes;
  json rows = json::array();
  json counter = json::array();
  for (const auto &i : r.instances) {
    json row;
    row["hypothesis_holds"] = i.hypothesis_holds;
    row["conclusion_holds"] = i.conclusion_holds;
    row["evidence"] = i.evidence;
    rows.push_back(std::move(row));
    if (i.is_counterexample()) {
      json c;
      c["instance"] = i.instance;
      c["evidence"] = i.evidence;
      counter.push_back(std::move(c));
    }
  }
  j["instances"] = std::move(rows);
  j["counterexamples"] = std::move(counter);
  if (include_timing) j["elapsed_seconds"] = r.elapsed_seconds;
  return j;
}

// ----- single-instance checks -----

VerificationReport check_thm_1_4(const Graph &x, const Graph &y, const VerifyOptions &o) {
  require_same_size(x, y);
  const int n = x.size(), dx = min_degree(x), dy = min_degree(y);
  const auto c = run_census(x, y, o);
  InstanceResult res;
  res.hypothesis_holds = thm_1_4_hypothesis(n, dx, dy);
  res.conclusion_holds = c.num_components() == 1;
  res.instance = pair_instance(x, y);
  res.evidence = {{"n", n}, {"delta_x", dx}, {"delta_y", dy}};
  res.evidence.update(census_evidence(c));
  return single(ClaimId::THM_1_4, std::move(res));
}

VerificationReport check_thm_1_5(const Graph &x, const Graph &y, const VerifyOptions &o) {
  require_same_size(x, y);
  const int n = x.size(), dx = min_degree(x), dy = min_degree(y);
  const auto c = run_census(x, y, o);
  InstanceResult res;
  res.hypothesis_holds = is_connected(x) && is_connected(y) && thm_1_5_degrees(n, dx, dy);
  res.conclusion_holds = c.num_components() == 1;
  res.instance = pair_instance(x, y);
  res.evidence = {{"n", n}, {"delta_x", dx}, {"delta_y", dy}};
  res.evidence.update(census_evidence(c));
  return single(ClaimId::THM_1_5, std::move(res));
}

VerificationReport check_thm_1_10(const Graph &x, const Graph &y, int r, const VerifyOptions &o) {
  require_rr_parts(x, r, "x");
  require_rr_parts(y, r, "y");
  const int dx = min_degree(x), dy = min_degree(y);
  const auto c = run_census(x, y, o);
  InstanceResult res;
  res.hypothesis_holds = thm_1_10_degrees(r, dx, dy);
  res.conclusion_holds = c.num_components() == 2;
  res.instance = pair_instance(x, y);
  res.instance["r"] = r;
  res.evidence = {{"r", r}, {"delta_x", dx}, {"delta_y", dy}};
  res.evidence.update(census_evidence(c));
  return single(ClaimId::THM_1_10, std::move(res));
}

VerificationReport check_prop_2_2(const Graph &x, const Graph &y, const VerifyOptions &o) {
  require_same_size(x, y);
  if (x.size() < 3) bad("parity check needs n >= 3");
  const VertexSet ax = declared_bipartition(x, "x").first;
  const VertexSet ay = declared_bipartition(y, "y").first;

  std::atomic<bool> preserved{true};
  std::atomic<std::uint64_t> edges{0};
  CensusOptions c;
  c.cap = o.cap;
  c.threads = o.threads;
  c.on_edge = [&](const Bijection &from, const Bijection &to) {
    edges.fetch_add(1, std::memory_order_relaxed);
    if (parity_phi(from, ax, ay) != parity_phi(to, ax, ay)) preserved.store(false);
  };
  const auto census = component_census(FsInstance(x, y), c);

  InstanceResult res;
  res.hypothesis_holds = true;
  res.conclusion_holds = preserved.load() && census.num_components() >= 2;
  res.instance = pair_instance(x, y);
  res.evidence = {{"n", x.size()}, {"phi_preserved", preserved.load()}, {"directed_edges", edges.load()}};
  res.evidence.update(census_evidence(census));
  return single(ClaimId::PROP_2_2, std::move(res));
}

VerificationReport check_prop_2_3(int r, const VerifyOptions &o) {
  if (r < 1) bad("r must be positive");
  const Graph k = complete_bipartite(r, r);
  const auto c = run_census(k, k, o);
  InstanceResult res;
  res.hypothesis_holds = true;
  res.conclusion_holds = c.num_components() == 2;
  res.instance = {{"r", r}};
  res.evidence = {{"r", r}, {"states", c.total}};
  res.evidence.update(census_evidence(c));
  return single(ClaimId::PROP_2_3, std::move(res));
}

VerificationReport check_thm_2_6(const Graph &y, const VerifyOptions &o) {
  const auto cls = classify(y);
  const auto c = run_census(star(y.size()), y, o);
  InstanceResult res;
  res.hypothesis_holds = cls.wilsonian;
  res.conclusion_holds = c.num_components() == 1;
  res.instance = {{"y", graph_to_json(y)}};
  res.evidence = {{"n", y.size()}, {"reasons", cls.reasons}};
  res.evidence.update(census_evidence(c));
  return single(ClaimId::THM_2_6, std::move(res));
}

VerificationReport check_thm_2_8(const Graph &y, const VerifyOptions &o) {
  if (y.size() < 3) bad("+Star needs n >= 3");
  const auto cls = classify(y);
  const auto c = run_census(star_plus(y.size()), y, o);
  InstanceResult res;
  res.hypothesis_holds = cls.almost_wilsonian;
  res.conclusion_holds = c.num_components() == 1;
  res.instance = {{"y", graph_to_json(y)}};
  res.evidence = {{"n", y.size()}, {"reasons", cls.reasons}};
  res.evidence.update(census_evidence(c));
  return single(ClaimId::THM_2_8, std::move(res));
}

VerificationReport check_prop_1_6(int n, int k, const VerifyOptions &o) {
  const auto pair = prop_1_6_pair(n, k);
  CensusOptions c;
  c.cap = o.cap;
  c.threads = o.threads;
  const FsInstance inst(pair.x, pair.y);
  const auto index = ComponentIndex::build(inst, c);

  const auto members = index.members(index.root(pair.sigma));
  bool blocks_kept = true;
  std::vector<std::uint8_t> map(n);
  for (std::uint64_t m : members) {
    unrank_into(m, n, map.data());
    for (std::size_t i = 0; i < pair.x_blocks.size() && blocks_kept; ++i) {
      for (int a : pair.x_blocks[i].members()) {
        if (!pair.y_blocks[i].contains(map[a])) {
          blocks_kept = false;
          break;
        }
      }
    }
    if (!blocks_kept) break;
  }

  const int dx = min_degree(pair.x), dy = min_degree(pair.y);
  const bool t14 = thm_1_4_hypothesis(n, dx, dy);
  const bool t15 = is_connected(pair.x) && is_connected(pair.y) && thm_1_5_degrees(n, dx, dy);
  const auto &census = index.census();

  InstanceResult res;
  res.hypothesis_holds = true;
  res.conclusion_holds = census.num_components() >= 2 && blocks_kept && !t14 && !t15;
  res.instance = {{"n", n}, {"k", k}};
  res.evidence = {{"n", n},
                  {"k", k},
                  {"delta_x", dx},
                  {"delta_y", dy},
                  {"sigma_component_size", members.size()},
                  {"groups_preserved", blocks_kept},
                  {"thm_1_4_hypothesis", t14},
                  {"thm_1_5_hypothesis", t15}};
  res.evidence.update(census_evidence(census));
  return single(ClaimId::PROP_1_6, std::move(res));
}

VerificationReport check_thm_1_11(int r, int d1, int d2, const VerifyOptions &o) {
  const auto pair = thm_1_11_pair(r, d1, d2);
  const FsInstance inst(pair.x, pair.y);
  const auto c = run_census(pair.x, pair.y, o);
  const bool isolated = friendly_swaps(inst, pair.sigma).empty();
  const int dx = min_degree(pair.x), dy = min_degree(pair.y);
  const bool t110 = thm_1_10_degrees(r, dx, dy);

  InstanceResult res;
  res.hypothesis_holds = true;
  res.conclusion_holds = c.num_components() >= 3 && isolated && dx == d1 && dy >= d2 && !t110;
  res.instance = {{"r", r}, {"d1", d1}, {"d2", d2}};
  res.evidence = {{"r", r},
                  {"d1", d1},
                  {"d2", d2},
                  {"delta_x", dx},
                  {"delta_y", dy},
                  {"sigma_isolated", isolated},
                  {"thm_1_10_hypothesis", t110}};
  res.evidence.update(census_evidence(c));
  return single(ClaimId::THM_1_11, std::move(res));
}

VerificationReport check_lemma_4_1(const Graph &g, VertexSet q) {
  const int m = g.size(), qn = q.size(), dg = min_degree(g);
  if (!q.is_subset_of(VertexSet::full(m))) bad("Q contains vertices outside G");
  const int s = dg + qn - m;
  const int hi = m - dg - 1;

  InstanceResult res;
  res.hypothesis_holds = qn >= 5 && 2 * qn + 3 * dg >= 3 * m + 2;
  res.instance = {{"g", graph_to_json(g)}, {"q", q.members()}};

  // Work inside G|_Q; vertex sets below use its labels.
  const auto sub = induced_subgraph(g, q);
  const Graph &h = sub.graph;
  const auto comps = connected_components(h);
  std::string branch;
  bool ok = false;
  json detail = json::object();

  if (comps.size() > 2) {
    branch = "three_or_more";
  } else if (comps.size() == 2) {
    branch = "two_components";
    ok = true;
    for (VertexSet part : comps) {
      const Graph f = restrict(h, part);
      ok = ok && part.size() >= s + 1 && part.size() <= hi && min_degree(f) >= s &&
           classify(f).wilsonian;
    }
  } else if (comps.size() == 1) {
    if (classify(h).almost_wilsonian) {
      branch = "almost_wilsonian";
      ok = true;
    } else {
      branch = "cut_vertex";
      const VertexSet all = VertexSet::full(h.size());
      for (int v : cut_vertices(h).members()) {
        const auto parts = components_within(h, all.minus(VertexSet::single(v)));
        if (parts.size() != 2) continue;
        bool good = true;
        for (VertexSet part : parts) {
          const Graph f = restrict(h, part);
          good = good && part.size() >= s && part.size() <= hi && min_degree(f) >= s - 1 &&
                 classify(f).wilsonian;
          if (good && (h.neighbors(v) & part).size() >= 2) {
            good = classify(restrict(h, part | VertexSet::single(v))).wilsonian;
          }
        }
        if (good) {
          ok = true;
          detail["cut_vertex"] = sub.original_vertex[v];
          break;
        }
      }
    }
  } else {
    branch = "empty";
  }

  res.conclusion_holds = ok;
  std::vector<int> comp_sizes;
  for (VertexSet c : comps) comp_sizes.push_back(c.size());
  res.evidence = {{"m", m}, {"q_size", qn}, {"delta_g", dg}, {"branch", branch},
                  {"component_sizes", comp_sizes}};
  res.evidence.update(detail);
  return single(ClaimId::LEM_4_1, std::move(res));
}

VerificationReport check_lemma_6_2(const Graph &x, const Graph &y, const Bijection &sigma, int u,
                                   int v, const VerifyOptions &o) {
  require_same_size(x, y);
  if (x.size() % 2 != 0) bad("realignment check needs subgraphs of K_{r,r}");
  const int r = x.size() / 2;
  require_rr_parts(x, r, "x");
  require_rr_parts(y, r, "y");
  if (sigma.size() != x.size()) bad("sigma has the wrong size");
  if (u == v || u < 0 || v < 0 || u >= x.size() || v >= x.size()) bad("u and v must be distinct vertices");

  const auto &bx = *x.bipartition();
  const auto &by = *y.bipartition();
  const int dx = min_degree(x), dy = min_degree(y);
  const bool opposite = by.first.contains(u) != by.first.contains(v);

  InstanceResult res;
  res.hypothesis_holds = thm_1_10_degrees(r, dx, dy) && opposite &&
                         x.adjacent(sigma.preimage(u), sigma.preimage(v));
  res.instance = pair_instance(x, y);
  res.instance["sigma"] = bijection_to_json(sigma);
  res.instance["u"] = u;
  res.instance["v"] = v;
  res.evidence = {{"r", r}, {"delta_x", dx}, {"delta_y", dy}};
  if (!res.hypothesis_holds) return single(ClaimId::LEM_6_2, std::move(res));

  const VertexSet a_y = by.first.contains(u) ? by.first : by.second;
  auto x_part_of = [&](int a) { return bx.first.contains(a) ? bx.first : bx.second; };
  auto aligned_count = [&](const Bijection &b) {
    const int up = b.preimage(u);
    int count = 0;
    for (int a : x_part_of(up).members()) {
      if (a != up && b[a] != u && a_y.contains(b[a])) ++count;
    }
    return count;
  };

  Bijection start = sigma;
  bool switched = false;
  if (2 * aligned_count(start) < r - 1) {
    start = apply_value_swap(start, u, v);
    switched = true;
  }
  const int count = aligned_count(start);
  const VertexSet a_x = x_part_of(start.preimage(u));

  const FsInstance inst(x, y);
  SearchOptions so;
  so.filter = SwapFilter{VertexSet::single(u) | VertexSet::single(v)};
  so.census_cap = o.cap;
  so.threads = o.threads;
  const auto goal = [&](const Bijection &b) {
    for (int a : a_x.members()) {
      if (!a_y.contains(b[a])) return false;
    }
    return true;
  };
  const auto found = find_reachable(inst, start, goal, so);

  bool ok = false;
  if (found) {
    // Independent replay of the returned witness.
    const Bijection end = apply_sequence(inst, start, found->sequence);
    ok = goal(end) && end == found->target &&
         std::none_of(found->sequence.begin(), found->sequence.end(), [&](const Swap &s) {
           return s.u == u || s.v == u || s.u == v || s.v == v;
         });
  }
  res.conclusion_holds = ok;
  res.evidence["orientation_switched"] = switched;
  res.evidence["aligned_count"] = count;
  res.evidence["sequence"] = found ? swaps_to_json(found->sequence) : json(nullptr);
  return single(ClaimId::LEM_6_2, std::move(res));
}

VerificationReport check_census_symmetry(const Graph &x, const Graph &y, const VerifyOptions &o) {
  require_same_size(x, y);
  const auto a = run_census(x, y, o);
  const auto b = run_census(y, x, o);
  InstanceResult res;
  res.hypothesis_holds = true;
  res.conclusion_holds = a.size_multiset() == b.size_multiset();
  res.instance = pair_instance(x, y);
  res.evidence = {{"n", x.size()},
                  {"forward_components", a.num_components()},
                  {"backward_components", b.num_components()}};
  return single(ClaimId::PROP_2_1, std::move(res));
}

// ----- seeded suites -----

namespace {

template <class Check>
VerificationReport random_pair_suite(ClaimId id, int n, int d1, int d2, int trials,
                                     std::uint64_t seed, bool connected, const VerifyOptions &o,
                                     Check check) {
  if (n < 2 || d1 < 0 || d2 < 0 || d1 > n - 1 || d2 > n - 1) bad("infeasible degree floors");
  if (trials < 0) bad("trials must be non-negative");
  const auto inner = inner_options(o);
  auto parts = parallel_map(static_cast<std::size_t>(trials), o.threads, [&](std::size_t i) {
    const Graph x = random_graph_min_degree(n, d1, connected, derive_seed(seed, 2 * i));
    const Graph y = random_graph_min_degree(n, d2, connected, derive_seed(seed, 2 * i + 1));
    return check(x, y, inner);
  });
  auto r = merge(to_string(id), seed, std::move(parts));
  r.notes.push_back("n=" + std::to_string(n) + " floors=(" + std::to_string(d1) + "," +
                    std::to_string(d2) + ") trials=" + std::to_string(trials));
  return r;
}

}  // namespace

VerificationReport suite_thm_1_4(int n, int d1, int d2, int trials, std::uint64_t seed,
                                 const VerifyOptions &o) {
  return random_pair_suite(ClaimId::THM_1_4, n, d1, d2, trials, seed, false, o,
                           [](const Graph &x, const Graph &y, const VerifyOptions &io) {
                             return check_thm_1_4(x, y, io);
                           });
}

VerificationReport suite_thm_1_5(int n, int d1, int d2, int trials, std::uint64_t seed,
                                 const VerifyOptions &o) {
  return random_pair_suite(ClaimId::THM_1_5, n, d1, d2, trials, seed, true, o,
                           [](const Graph &x, const Graph &y, const VerifyOptions &io) {
                             return check_thm_1_5(x, y, io);
                           });
}

VerificationReport suite_thm_1_10(int r, int d1, int d2, int trials, std::uint64_t seed,
                                  const VerifyOptions &o) {
  if (r < 1 || d1 < 0 || d2 < 0 || d1 > r || d2 > r) bad("infeasible degree floors");
  const auto inner = inner_options(o);
  auto parts = parallel_map(static_cast<std::size_t>(std::max(trials, 0)), o.threads,
                            [&](std::size_t i) {
                              const Graph x = random_bipartite_subgraph(r, d1, derive_seed(seed, 2 * i));
                              const Graph y =
                                  random_bipartite_subgraph(r, d2, derive_seed(seed, 2 * i + 1));
                              return check_thm_1_10(x, y, r, inner);
                            });
  auto rep = merge(to_string(ClaimId::THM_1_10), seed, std::move(parts));
  rep.notes.push_back("r=" + std::to_string(r) + " floors=(" + std::to_string(d1) + "," +
                      std::to_string(d2) + ")");
  return rep;
}

VerificationReport suite_prop_2_2(int max_n, int trials, std::uint64_t seed, const VerifyOptions &o) {
  if (max_n < 3) bad("max_n must be at least 3");
  const auto inner = inner_options(o);
  auto parts = parallel_map(static_cast<std::size_t>(std::max(trials, 0)), o.threads,
                            [&](std::size_t i) {
                              std::mt19937_64 rng(derive_seed(seed, i));
                              const int n = uniform_int(rng, 3, max_n);
                              const double px = std::uniform_real_distribution<double>(0.3, 1.0)(rng);
                              const double py = std::uniform_real_distribution<double>(0.3, 1.0)(rng);
                              const Graph x = random_bipartite(n, uniform_int(rng, 1, n - 1), px, rng);
                              const Graph y = random_bipartite(n, uniform_int(rng, 1, n - 1), py, rng);
                              return check_prop_2_2(x, y, inner);
                            });
  return merge(to_string(ClaimId::PROP_2_2), seed, std::move(parts));
}

namespace {

template <class Check>
VerificationReport zoo_suite(ClaimId id, int min_n, int max_n, const VerifyOptions &o, Check check) {
  const auto zoo = fixture_zoo(min_n, max_n);
  const auto inner = inner_options(o);
  auto parts = parallel_map(zoo.size(), o.threads, [&](std::size_t i) {
    auto r = check(zoo[i].graph, inner);
    r.instances.front().evidence["fixture"] = zoo[i].name;
    return r;
  });
  auto rep = merge(to_string(id), std::nullopt, std::move(parts));
  std::size_t extra = 0;
  for (const auto &i : rep.instances) extra += (!i.hypothesis_holds && i.conclusion_holds) ? 1 : 0;
  rep.notes.push_back(std::to_string(extra) + " fixtures outside the class still give a connected FS");
  return rep;
}

}  // namespace

VerificationReport suite_thm_2_6(int min_n, int max_n, const VerifyOptions &o) {
  return zoo_suite(ClaimId::THM_2_6, std::max(min_n, 1), max_n, o,
                   [](const Graph &g, const VerifyOptions &io) { return check_thm_2_6(g, io); });
}

VerificationReport suite_thm_2_8(int min_n, int max_n, const VerifyOptions &o) {
  return zoo_suite(ClaimId::THM_2_8, std::max(min_n, 3), max_n, o,
                   [](const Graph &g, const VerifyOptions &io) { return check_thm_2_8(g, io); });
}

VerificationReport suite_thm_1_11(int r, const VerifyOptions &o) {
  VerificationReport rep;
  rep.claim_id = to_string(ClaimId::THM_1_11);
  const int total = 3 * r / 2;
  for (int d1 = 0; d1 <= r; ++d1) {
    const int d2 = total - d1;
    if (d2 < 0 || d2 > r) continue;
    rep.absorb(check_thm_1_11(r, d1, d2, o));
  }
  return rep;
}

namespace {

// Structured samplers: dense random graphs, two dense blocks with a few
// cross edges, and two blocks glued at one vertex.
Graph sample_lemma_graph(int m, std::mt19937_64 &rng) {
  const int mode = uniform_int(rng, 0, 2);
  if (mode == 0) {
    const int lo = std::max(0, (m + 2 + 2) / 3 - 2);
    return random_graph_min_degree(m, uniform_int(rng, lo, m - 1), false, rng());
  }
  // mode 1: disjoint blocks 0..split-1 and split..m-1; mode 2: the blocks share split-1
  const int split = mode == 1 ? uniform_int(rng, 2, m - 2) : uniform_int(rng, 2, m - 1);
  const int b_start = mode == 1 ? split : split - 1;
  Graph g(m);
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      if (b < split || a >= b_start) g.add_edge(a, b);
    }
  }
  const int cross = mode == 1 ? uniform_int(rng, 0, 3) : uniform_int(rng, 0, 1);
  for (int i = 0; i < cross; ++i) {
    const int a = uniform_int(rng, 0, m - 1), b = uniform_int(rng, 0, m - 1);
    if (a != b && !g.adjacent(a, b)) g.add_edge(a, b);
  }
  const int drops = uniform_int(rng, 0, 2);
  for (int i = 0; i < drops; ++i) {
    const auto edges = g.edges();
    if (edges.empty()) break;
    const auto [a, b] = edges[uniform_int(rng, 0, static_cast<int>(edges.size()) - 1)];
    g.remove_edge(a, b);
  }
  return g;
}

VertexSet sample_lemma_q(int m, std::mt19937_64 &rng) {
  if (m <= 5 || std::bernoulli_distribution(0.5)(rng)) return VertexSet::full(m);
  std::vector<int> order(m);
  for (int i = 0; i < m; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  const int size = uniform_int(rng, 5, m);
  return VertexSet::of(std::vector<int>(order.begin(), order.begin() + size));
}

}  // namespace

VerificationReport suite_lemma_4_1(int m, int hypothesis_true, std::uint64_t seed,
                                   const VerifyOptions &) {
  if (m < 5 || m > kMaxGraphSize) bad("m must be in [5, 32]");
  VerificationReport rep;
  rep.claim_id = to_string(ClaimId::LEM_4_1);
  rep.seed = seed;
  std::mt19937_64 rng(derive_seed(seed, static_cast<std::uint64_t>(m)));
  const std::uint64_t max_attempts = 1000 + 200ull * static_cast<std::uint64_t>(hypothesis_true);
  std::uint64_t attempts = 0;
  std::map<std::string, int> branches;
  while (static_cast<int>(rep.instances.size()) < hypothesis_true && attempts < max_attempts) {
    ++attempts;
    const Graph g = sample_lemma_graph(m, rng);
    const VertexSet q = sample_lemma_q(m, rng);
    const int dg = min_degree(g);
    if (!(q.size() >= 5 && 2 * q.size() + 3 * dg >= 3 * m + 2)) continue;
    auto r = check_lemma_4_1(g, q);
    ++branches[r.instances.front().evidence["branch"].get<std::string>()];
    rep.absorb(std::move(r));
  }
  rep.notes.push_back("m=" + std::to_string(m) + " samples=" + std::to_string(attempts) +
                      " hypothesis_true=" + std::to_string(rep.instances.size()));
  for (const auto &[name, count] : branches) {
    rep.notes.push_back("branch " + name + ": " + std::to_string(count));
  }
  return rep;
}

namespace {

struct SwapPair {
  int u, v;
};

// (u, v) with u < v on opposite sides of Y whose preimages are X-adjacent.
std::vector<SwapPair> lemma_6_2_pairs(const Graph &x, const Graph &y, const Bijection &sigma) {
  std::vector<SwapPair> out;
  const VertexSet ay = y.bipartition()->first;
  for (int u = 0; u < y.size(); ++u) {
    for (int v = u + 1; v < y.size(); ++v) {
      if (ay.contains(u) == ay.contains(v)) continue;
      if (x.adjacent(sigma.preimage(u), sigma.preimage(v))) out.push_back({u, v});
    }
  }
  return out;
}

}  // namespace

VerificationReport suite_lemma_6_2(int r, int trials, std::uint64_t seed, const VerifyOptions &o) {
  if (r < 2 || r > 4) bad("realignment suite needs 2 <= r <= 4");
  const int n = 2 * r;
  VerificationReport rep;
  rep.claim_id = to_string(ClaimId::LEM_6_2);
  const auto inner = inner_options(o);

  if (r == 2) {
    std::vector<std::pair<Graph, Graph>> pairs;
    const auto subs = all_rr_subgraphs(r);
    for (const auto &x : subs) {
      for (const auto &y : subs) {
        if (thm_1_10_degrees(r, min_degree(x), min_degree(y))) pairs.emplace_back(x, y);
      }
    }
    std::vector<std::uint8_t> map(n);
    for (const auto &[x, y] : pairs) {
      for (std::uint64_t idx = 0; idx < factorial(n); ++idx) {
        unrank_into(idx, n, map.data());
        const Bijection sigma = Bijection::from_raw(map.data(), n);
        for (const auto [u, v] : lemma_6_2_pairs(x, y, sigma)) {
          rep.absorb(check_lemma_6_2(x, y, sigma, u, v, inner));
        }
      }
    }
    rep.notes.push_back("exhaustive: " + std::to_string(pairs.size()) + " graph pairs qualify");
    return rep;
  }

  rep.seed = seed;
  const int need = ceil_half(3 * r + 2);
  auto parts = parallel_map(static_cast<std::size_t>(std::max(trials, 0)), o.threads,
                            [&](std::size_t i) {
                              std::mt19937_64 rng(derive_seed(seed, i));
                              const int dx = uniform_int(rng, std::max(0, need - r), r);
                              const Graph x = random_bipartite_subgraph(r, dx, rng());
                              const Graph y = random_bipartite_subgraph(r, need - dx, rng());
                              std::vector<int> map(n);
                              for (int j = 0; j < n; ++j) map[j] = j;
                              for (;;) {
                                std::shuffle(map.begin(), map.end(), rng);
                                const Bijection sigma = Bijection::from(map);
                                const auto cand = lemma_6_2_pairs(x, y, sigma);
                                if (cand.empty()) continue;
                                const auto pick =
                                    cand[uniform_int(rng, 0, static_cast<int>(cand.size()) - 1)];
                                return check_lemma_6_2(x, y, sigma, pick.u, pick.v, inner);
                              }
                            });
  for (auto &p : parts) rep.absorb(std::move(p));
  return rep;
}

VerificationReport suite_census_symmetry(int min_n, int max_n, const VerifyOptions &o) {
  const auto zoo = fixture_zoo(min_n, max_n);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < zoo.size(); ++i) {
    for (std::size_t j = i; j < zoo.size(); ++j) {
      if (zoo[i].graph.size() == zoo[j].graph.size()) pairs.emplace_back(i, j);
    }
  }
  const auto inner = inner_options(o);
  auto parts = parallel_map(pairs.size(), o.threads, [&](std::size_t k) {
    const auto [i, j] = pairs[k];
    auto r = check_census_symmetry(zoo[i].graph, zoo[j].graph, inner);
    r.instances.front().evidence["fixtures"] = {zoo[i].name, zoo[j].name};
    return r;
  });
  return merge(to_string(ClaimId::PROP_2_1), std::nullopt, std::move(parts));
}

VerificationReport check_cor_1_12(int r, int trials, std::uint64_t seed, const VerifyOptions &o) {
  if (r < 2 || r > 6) bad("threshold check needs 2 <= r <= 6");
  VerificationReport rep;
  rep.claim_id = to_string(ClaimId::COR_1_12);
  rep.seed = seed;
  const Graph full = complete_bipartite(r, r);
  // Upper direction: the floor at which two components are guaranteed.
  const int floor_up = r / 2 + 1 + (r % 2);

  auto upper_row = [&](const Graph &x, const VerifyOptions &io) {
    const auto c = run_census(x, full, io);
    InstanceResult res;
    res.hypothesis_holds = min_degree(x) >= floor_up;
    res.conclusion_holds = c.num_components() == 2;
    res.instance = {{"x", graph_to_json(x)}, {"r", r}};
    res.evidence = {{"direction", "upper"}, {"delta_x", min_degree(x)}};
    res.evidence.update(census_evidence(c));
    return single(ClaimId::COR_1_12, std::move(res));
  };

  if (r == 2) {
    for (const auto &x : all_rr_subgraphs(r)) {
      if (min_degree(x) >= floor_up) rep.absorb(upper_row(x, o));
    }
  } else {
    const auto inner = inner_options(o);
    auto parts = parallel_map(static_cast<std::size_t>(std::max(trials, 0)), o.threads,
                              [&](std::size_t i) {
                                return upper_row(random_bipartite_subgraph(r, floor_up, derive_seed(seed, i)),
                                                 inner);
                              });
    for (auto &p : parts) rep.absorb(std::move(p));
  }

  // Lower witness: delta(X) = floor(r/2) with more than two components.
  const int d_low = r / 2;
  const auto pair = thm_1_11_pair(r, d_low, 3 * r / 2 - d_low);
  const auto c = run_census(pair.x, full, o);
  InstanceResult low;
  low.hypothesis_holds = false;
  low.conclusion_holds = c.num_components() == 2;
  low.instance = {{"x", graph_to_json(pair.x)}, {"r", r}};
  low.evidence = {{"direction", "lower"}, {"delta_x", min_degree(pair.x)}};
  low.evidence.update(census_evidence(c));
  rep.instances.push_back(low);

  if (r % 2 == 0) {
    rep.notes.push_back("threshold r/2+1 = " + std::to_string(r / 2 + 1) + ": upper rows have delta(X) >= " +
                        std::to_string(floor_up) + ", lower witness has delta(X) = " +
                        std::to_string(min_degree(pair.x)) + " with " +
                        std::to_string(c.num_components()) + " components");
  } else {
    rep.notes.push_back("odd r: threshold lies in {" + std::to_string(ceil_half(r)) + ", " +
                        std::to_string(ceil_half(r) + 1) + "}; not adjudicated");
  }
  return rep;
}

VerificationReport search_conjecture_8_1(int n, int d1, int d2, int trials, std::uint64_t seed,
                                         const VerifyOptions &o) {
  if (n < 2 || d1 < 1 || d2 < 1 || d1 > n - 1 || d2 > n - 1) bad("infeasible degrees");
  const int lo = std::min(d1, d2), hi = std::max(d1, d2);
  if (2 * lo + 3 * hi < 3 * n) bad("degrees lie outside the region 2 min + 3 max >= 3n");
  const auto inner = inner_options(o);
  auto parts = parallel_map(static_cast<std::size_t>(std::max(trials, 0)), o.threads,
                            [&](std::size_t i) {
                              const Graph x = random_graph_min_degree(n, d1, true, derive_seed(seed, 2 * i));
                              const Graph y =
                                  random_graph_min_degree(n, d2, true, derive_seed(seed, 2 * i + 1));
                              const int dx = min_degree(x), dy = min_degree(y);
                              const auto c = run_census(x, y, inner);
                              InstanceResult res;
                              res.hypothesis_holds =
                                  is_connected(x) && is_connected(y) &&
                                  2 * std::min(dx, dy) + 3 * std::max(dx, dy) >= 3 * n;
                              res.conclusion_holds = c.num_components() == 1;
                              res.instance = pair_instance(x, y);
                              res.evidence = {{"n", n}, {"delta_x", dx}, {"delta_y", dy}};
                              res.evidence.update(census_evidence(c));
                              VerificationReport r;
                              r.instances.push_back(std::move(res));
                              return r;
                            });
  auto rep = merge(kConj81, seed, std::move(parts));
  rep.notes.push_back("search only; a recorded counterexample is a candidate, not a proof");
  return rep;
}

VerificationReport search_conjecture_8_2(int n, int d1, int d2, int trials, std::uint64_t seed,
                                         const VerifyOptions &o) {
  if (n < 2 || d1 < 1 || d2 < 1 || d1 > n - 1 || d2 > n - 1) bad("infeasible degrees");
  const auto inner = inner_options(o);
  auto parts = parallel_map(static_cast<std::size_t>(std::max(trials, 0)), o.threads,
                            [&](std::size_t i) {
                              VerificationReport r;
                              InstanceResult res;
                              try {
                                const Graph x =
                                    random_graph_exact_min_degree(n, d1, true, derive_seed(seed, 2 * i));
                                const Graph y =
                                    random_graph_exact_min_degree(n, d2, true, derive_seed(seed, 2 * i + 1));
                                const auto c = run_census(x, y, inner);
                                res.conclusion_holds = c.num_components() > 1;
                                res.instance = pair_instance(x, y);
                                res.evidence = {{"n", n}, {"delta_x", min_degree(x)}, {"delta_y", min_degree(y)}};
                                res.evidence.update(census_evidence(c));
                              } catch (const std::invalid_argument &e) {
                                res.evidence = {{"n", n}, {"sampler_failed", e.what()}};
                              }
                              r.instances.push_back(std::move(res));
                              return r;
                            });
  auto rep = merge(kConj82, seed, std::move(parts));
  std::size_t witnesses = 0;
  for (const auto &i : rep.instances) witnesses += i.conclusion_holds ? 1 : 0;
  const int lo = std::min(d1, d2), hi = std::max(d1, d2);
  rep.notes.push_back("disconnected witnesses: " + std::to_string(witnesses) + " of " +
                      std::to_string(rep.instances.size()) + " (2 min + 3 max = " +
                      std::to_string(2 * lo + 3 * hi) + ", 3n = " + std::to_string(3 * n) + ")");
  return rep;
}

// ----- dispatch -----

VerificationReport run_claim(const ClaimSpec &spec, const VerifyOptions &o) {
  const json &p = spec.params;
  const auto start = Clock::now();
  VerificationReport rep;
  const bool explicit_pair = p.contains("x") || p.contains("y");
  switch (spec.id) {
    case ClaimId::THM_1_4:
      rep = explicit_pair ? check_thm_1_4(param_graph(p, "x"), param_graph(p, "y"), o)
                          : suite_thm_1_4(param_int(p, "n", 6), param_int(p, "d1", 4),
                                          param_int(p, "d2", 4), param_int(p, "trials", 100),
                                          param_seed(p), o);
      break;
    case ClaimId::THM_1_5:
      rep = explicit_pair ? check_thm_1_5(param_graph(p, "x"), param_graph(p, "y"), o)
                          : suite_thm_1_5(param_int(p, "n", 7), param_int(p, "d1", 4),
                                          param_int(p, "d2", 5), param_int(p, "trials", 100),
                                          param_seed(p), o);
      break;
    case ClaimId::THM_1_10: {
      const int r = param_int(p, "r", 4);
      if (explicit_pair) {
        rep = check_thm_1_10(param_graph(p, "x"), param_graph(p, "y"), r, o);
      } else if (p.contains("d1") || p.contains("d2")) {
        rep = suite_thm_1_10(r, param_int(p, "d1"), param_int(p, "d2"), param_int(p, "trials", 100),
                             param_seed(p), o);
      } else {
        // Spread the trials over every split of the minimal degree sum.
        const int need = ceil_half(3 * r + 2);
        const int trials = param_int(p, "trials", 100);
        const std::uint64_t seed = param_seed(p);
        std::vector<std::pair<int, int>> splits;
        for (int d1 = std::max(0, need - r); d1 <= std::min(r, need); ++d1) splits.emplace_back(d1, need - d1);
        if (splits.empty()) bad("no legal degree split for this r");
        rep.claim_id = to_string(ClaimId::THM_1_10);
        rep.seed = seed;
        const int per = trials / static_cast<int>(splits.size());
        const int extra = trials % static_cast<int>(splits.size());
        for (std::size_t s = 0; s < splits.size(); ++s) {
          const int count = per + (static_cast<int>(s) < extra ? 1 : 0);
          auto part = suite_thm_1_10(r, splits[s].first, splits[s].second, count,
                                     derive_seed(seed, 1000 + s), o);
          part.seed.reset();
          rep.absorb(std::move(part));
        }
      }
      break;
    }
    case ClaimId::PROP_2_2:
      rep = explicit_pair ? check_prop_2_2(param_graph(p, "x"), param_graph(p, "y"), o)
                          : suite_prop_2_2(param_int(p, "max_n", 7), param_int(p, "trials", 50),
                                           param_seed(p), o);
      break;
    case ClaimId::PROP_2_3:
      rep = check_prop_2_3(param_int(p, "r"), o);
      break;
    case ClaimId::THM_2_6:
      rep = p.contains("y") ? check_thm_2_6(param_graph(p, "y"), o)
                            : suite_thm_2_6(param_int(p, "min_n", 3), param_int(p, "max_n", 6), o);
      break;
    case ClaimId::THM_2_8:
      rep = p.contains("y") ? check_thm_2_8(param_graph(p, "y"), o)
                            : suite_thm_2_8(param_int(p, "min_n", 3), param_int(p, "max_n", 6), o);
      break;
    case ClaimId::PROP_1_6:
      rep = check_prop_1_6(param_int(p, "n"), param_int(p, "k", 5), o);
      break;
    case ClaimId::THM_1_11:
      rep = (p.contains("d1") || p.contains("d2"))
                ? check_thm_1_11(param_int(p, "r"), param_int(p, "d1"), param_int(p, "d2"), o)
                : suite_thm_1_11(param_int(p, "r"), o);
      break;
    case ClaimId::LEM_4_1:
      if (p.contains("g")) {
        const Graph g = param_graph(p, "g");
        rep = check_lemma_4_1(g, p.contains("q") ? param_set(p, "q", g.size()) : VertexSet::full(g.size()));
      } else {
        rep = suite_lemma_4_1(param_int(p, "m"), param_int(p, "instances", 1000), param_seed(p), o);
      }
      break;
    case ClaimId::LEM_6_2:
      if (explicit_pair) {
        if (!p.contains("sigma")) bad("missing parameter \"sigma\"");
        Bijection sigma = Bijection::identity(1);
        try {
          sigma = bijection_from_json(p.at("sigma"));
        } catch (const FormatError &e) {
          bad(std::string("parameter \"sigma\": ") + e.what());
        }
        rep = check_lemma_6_2(param_graph(p, "x"), param_graph(p, "y"), sigma, param_int(p, "u"),
                              param_int(p, "v"), o);
      } else {
        rep = suite_lemma_6_2(param_int(p, "r"), param_int(p, "trials", 100), param_seed(p), o);
      }
      break;
    case ClaimId::PROP_2_1:
      rep = explicit_pair ? check_census_symmetry(param_graph(p, "x"), param_graph(p, "y"), o)
                          : suite_census_symmetry(param_int(p, "min_n", 1), param_int(p, "max_n", 6), o);
      break;
    case ClaimId::COR_1_12:
      rep = check_cor_1_12(param_int(p, "r"), param_int(p, "trials", 20), param_seed(p), o);
      break;
  }
  rep.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return rep;
}

VerificationReport replay_instance(const std::string &claim_id, const json &instance,
                                   const VerifyOptions &o) {
  if (claim_id == kConj81 || claim_id == kConj82) {
    const Graph x = param_graph(instance, "x"), y = param_graph(instance, "y");
    require_same_size(x, y);
    const auto c = run_census(x, y, o);
    const int n = x.size(), dx = min_degree(x), dy = min_degree(y);
    InstanceResult res;
    if (claim_id == kConj81) {
      res.hypothesis_holds = is_connected(x) && is_connected(y) &&
                             2 * std::min(dx, dy) + 3 * std::max(dx, dy) >= 3 * n;
      res.conclusion_holds = c.num_components() == 1;
    } else {
      res.conclusion_holds = c.num_components() > 1;
    }
    res.instance = instance;
    res.evidence = {{"n", n}, {"delta_x", dx}, {"delta_y", dy}};
    res.evidence.update(census_evidence(c));
    VerificationReport r;
    r.claim_id = claim_id;
    r.instances.push_back(std::move(res));
    return r;
  }
  const auto id = parse_claim_id(claim_id);
  if (!id) bad("unknown claim \"" + claim_id + "\"");
  ClaimSpec spec{*id, instance};
  // Cor 1.12 rows are single upper-direction censuses.
  if (*id == ClaimId::COR_1_12 && instance.contains("x")) {
    const int r = param_int(instance, "r");
    const Graph x = param_graph(instance, "x");
    const auto c = run_census(x, complete_bipartite(r, r), o);
    InstanceResult res;
    res.hypothesis_holds = min_degree(x) >= r / 2 + 1 + (r % 2) && x.size() == 2 * r;
    res.conclusion_holds = c.num_components() == 2;
    res.instance = instance;
    res.evidence = census_evidence(c);
    return single(ClaimId::COR_1_12, std::move(res));
  }
  return run_claim(spec, o);
}

}  // namespace fslab
