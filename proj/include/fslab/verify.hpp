#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fslab/fs_engine.hpp"
#include "fslab/graph.hpp"
#include "fslab/json_io.hpp"
#include "fslab/perm.hpp"

namespace fslab {

enum class ClaimId {
  THM_1_4,
  THM_1_5,
  THM_1_10,
  PROP_2_2,
  PROP_2_3,
  THM_2_6,
  THM_2_8,
  PROP_1_6,
  THM_1_11,
  LEM_4_1,
  LEM_6_2,
  PROP_2_1,
  COR_1_12,
};

std::string to_string(ClaimId id);
std::optional<ClaimId> parse_claim_id(std::string_view s);

// Outcome on one concrete instance. `instance` is self-contained: feeding it
// to replay_instance() reproduces the verdict.
struct InstanceResult {
  bool hypothesis_holds = false;
  bool conclusion_holds = false;
  json instance;
  json evidence;

  bool is_counterexample() const { return hypothesis_holds && !conclusion_holds; }
};

// Claim tag for reports: the ClaimId spelling, or CONJ_8_1 / CONJ_8_2 for
// conjecture searches.
struct VerificationReport {
  std::string claim_id;
  std::optional<std::uint64_t> seed;
  std::vector<InstanceResult> instances;
  // Free-form observations: branch tallies, boundary evidence, brackets.
  std::vector<std::string> notes;
  double elapsed_seconds = 0.0;

  std::size_t instances_checked() const { return instances.size(); }
  std::size_t non_vacuous() const;
  std::size_t vacuous() const { return instances_checked() - non_vacuous(); }
  std::size_t counterexample_count() const;
  bool has_counterexample() const { return counterexample_count() > 0; }
  // Appends another report's instances and notes (same claim).
  void absorb(VerificationReport other);
};

// Instances appear as compact {hypothesis_holds, conclusion_holds, evidence}
// rows; counterexamples are repeated in full. Timing is left out so that
// identical runs serialize identically.
json report_to_json(const VerificationReport &r, bool include_timing = false);

struct VerifyOptions {
  int cap = kDefaultEngineCap;
  // 0 picks std::thread::hardware_concurrency().
  int threads = 0;
};

// ----- single-instance checks -----

// Hypothesis: n >= 6, both minimum degrees above n/2 and
// 2 min + 3 max >= 3n. Conclusion: FS connected.
VerificationReport check_thm_1_4(const Graph &x, const Graph &y, const VerifyOptions &o = {});
// Hypothesis: both connected and min + 2 max >= 2n. Conclusion: FS connected.
VerificationReport check_thm_1_5(const Graph &x, const Graph &y, const VerifyOptions &o = {});
// Both graphs must carry bipartitions with two parts of size r.
// Hypothesis: delta(X) + delta(Y) >= 3r/2 + 1. Conclusion: exactly 2 components.
VerificationReport check_thm_1_10(const Graph &x, const Graph &y, int r,
                                  const VerifyOptions &o = {});
// Both graphs bipartite with declared bipartitions, n >= 3. Conclusion: at
// least two components and the parity (sign + |sigma(A_X) & A_Y|) mod 2 is
// preserved across every FS edge.
VerificationReport check_prop_2_2(const Graph &x, const Graph &y, const VerifyOptions &o = {});
// FS(K_{r,r}, K_{r,r}) has exactly two components.
VerificationReport check_prop_2_3(int r, const VerifyOptions &o = {});
// FS(Star_n, Y) connected when Y is Wilsonian.
VerificationReport check_thm_2_6(const Graph &y, const VerifyOptions &o = {});
// FS(+Star_n, Y) connected when Y is almost-Wilsonian (n >= 3).
VerificationReport check_thm_2_8(const Graph &y, const VerifyOptions &o = {});
// Cyclic-group construction: disconnected, sigma's component preserves the
// groups, degree bounds hold, and the upper-bound theorems do not apply.
VerificationReport check_prop_1_6(int n, int k, const VerifyOptions &o = {});
// Bipartite construction: at least three components, sigma isolated,
// delta(X) = d1, delta(Y) >= d2, and the two-component theorem does not apply.
VerificationReport check_thm_1_11(int r, int d1, int d2, const VerifyOptions &o = {});
// Component structure of G restricted to Q under |Q| >= 5 and
// 2|Q| + 3 delta(G) >= 3m + 2.
VerificationReport check_lemma_4_1(const Graph &g, VertexSet q);
// Realignment of partite sets by swaps avoiding u and v. Instance hypotheses:
// subgraphs of K_{r,r}, delta sum >= 3r/2 + 1, u and v on opposite sides of Y,
// preimages adjacent in X.
VerificationReport check_lemma_6_2(const Graph &x, const Graph &y, const Bijection &sigma, int u,
                                   int v, const VerifyOptions &o = {});
// Component size multisets of FS(X, Y) and FS(Y, X) agree.
VerificationReport check_census_symmetry(const Graph &x, const Graph &y,
                                         const VerifyOptions &o = {});

// ----- seeded suites -----

// Random pairs with minimum-degree floors (d1, d2).
VerificationReport suite_thm_1_4(int n, int d1, int d2, int trials, std::uint64_t seed,
                                 const VerifyOptions &o = {});
VerificationReport suite_thm_1_5(int n, int d1, int d2, int trials, std::uint64_t seed,
                                 const VerifyOptions &o = {});
// Random edge-subgraphs of K_{r,r} with floors (d1, d2).
VerificationReport suite_thm_1_10(int r, int d1, int d2, int trials, std::uint64_t seed,
                                  const VerifyOptions &o = {});
// Random bipartite pairs on 3..max_n vertices with random part sizes.
VerificationReport suite_prop_2_2(int max_n, int trials, std::uint64_t seed,
                                  const VerifyOptions &o = {});
// Every zoo graph on min_n..max_n vertices.
VerificationReport suite_thm_2_6(int min_n, int max_n, const VerifyOptions &o = {});
VerificationReport suite_thm_2_8(int min_n, int max_n, const VerifyOptions &o = {});
// Every legal (d1, d2) for the given r.
VerificationReport suite_thm_1_11(int r, const VerifyOptions &o = {});
// Samples until `hypothesis_true` instances satisfy the hypothesis.
VerificationReport suite_lemma_4_1(int m, int hypothesis_true, std::uint64_t seed,
                                   const VerifyOptions &o = {});
// r = 2: every qualifying instance. r >= 3: `trials` sampled instances.
VerificationReport suite_lemma_6_2(int r, int trials, std::uint64_t seed,
                                   const VerifyOptions &o = {});
// All same-size zoo pairs on min_n..max_n vertices.
VerificationReport suite_census_symmetry(int min_n, int max_n, const VerifyOptions &o = {});

// Even r: upper direction over X with delta(X) >= r/2 + 1 (exhaustive for
// r = 2, sampled otherwise) and the lower witness thm_1_11_pair(r, r/2, r).
// Odd r: evidence for the bracket {ceil(r/2), ceil(r/2) + 1} only.
VerificationReport check_cor_1_12(int r, int trials, std::uint64_t seed,
                                  const VerifyOptions &o = {});

// Connected pairs with floors (d1, d2); any disconnected FS is recorded as a
// potential counterexample. Requires 2 min + 3 max >= 3n.
VerificationReport search_conjecture_8_1(int n, int d1, int d2, int trials, std::uint64_t seed,
                                         const VerifyOptions &o = {});
// Connected pairs with minimum degrees exactly (d1, d2); reports how many
// sampled pairs have disconnected FS. Never produces counterexamples.
VerificationReport search_conjecture_8_2(int n, int d1, int d2, int trials, std::uint64_t seed,
                                         const VerifyOptions &o = {});

// A claim and its parameters, e.g. {THM_1_10, {"r": 4, "trials": 50, "seed": 1}}.
// Graph-valued parameters ("x", "y", "g") are Graph JSON objects.
struct ClaimSpec {
  ClaimId id;
  json params = json::object();
};

// Throws std::invalid_argument on missing or invalid parameters.
VerificationReport run_claim(const ClaimSpec &spec, const VerifyOptions &o = {});

// Re-runs a single recorded instance under the report's claim tag.
VerificationReport replay_instance(const std::string &claim_id, const json &instance,
                                   const VerifyOptions &o = {});

}  // namespace fslab
