#include <doctest.h>

#include "fslab/constructions.hpp"
#include "fslab/verify.hpp"

using namespace fslab;

namespace {

VerifyOptions one_thread() {
  VerifyOptions o;
  o.threads = 1;
  return o;
}

InstanceResult only(const VerificationReport &r) {
  REQUIRE(r.instances.size() == 1);
  return r.instances.front();
}

}  // namespace

TEST_CASE("claim ids round trip") {
  for (ClaimId id : {ClaimId::THM_1_4, ClaimId::LEM_6_2, ClaimId::COR_1_12}) {
    CHECK(parse_claim_id(to_string(id)) == id);
  }
  CHECK_FALSE(parse_claim_id("THM_9_9"));
}

TEST_CASE("dense pair examples") {
  const auto k6 = only(check_thm_1_4(complete(6), complete(6), one_thread()));
  CHECK(k6.hypothesis_holds);
  CHECK(k6.conclusion_holds);

  const auto c6 = only(check_thm_1_4(cycle(6), complete(6), one_thread()));
  CHECK_FALSE(c6.hypothesis_holds);

  const auto k4 = only(check_thm_1_5(complete(4), complete(4), one_thread()));
  CHECK(k4.hypothesis_holds);
  CHECK(k4.conclusion_holds);

  const auto s5 = only(check_thm_1_5(star(5), star(5), one_thread()));
  CHECK_FALSE(s5.hypothesis_holds);
  CHECK_FALSE(s5.conclusion_holds);
}

TEST_CASE("bipartite examples") {
  const Graph k22 = complete_bipartite(2, 2);
  const auto t = only(check_thm_1_10(k22, k22, 2, one_thread()));
  CHECK(t.hypothesis_holds);
  CHECK(t.conclusion_holds);
  CHECK(t.evidence["num_components"] == 2);

  // boundary: degree sum exactly 3r/2, hypothesis fails and >= 3 components
  const auto b = thm_1_11_pair(4, 2, 4);
  const auto bt = only(check_thm_1_10(b.x, b.y, 4, one_thread()));
  CHECK_FALSE(bt.hypothesis_holds);
  CHECK(bt.evidence["num_components"].get<int>() >= 3);

  CHECK_THROWS_AS(check_thm_1_10(complete(4), k22, 2), std::invalid_argument);
}

TEST_CASE("parity examples") {
  for (const auto &[x, y] : {std::pair{path(4), path(4)},
                             std::pair{complete_bipartite(3, 3), complete_bipartite(3, 3)}}) {
    const auto r = only(check_prop_2_2(x, y, one_thread()));
    CHECK(r.conclusion_holds);
    CHECK(r.evidence["phi_preserved"] == true);
  }
  Graph two_k2(4);
  two_k2.add_edge(0, 1);
  two_k2.add_edge(2, 3);
  two_k2.set_bipartition(VertexSet::of({0, 2}), VertexSet::of({1, 3}));
  const auto r = only(check_prop_2_2(two_k2, cycle(4), one_thread()));
  CHECK(r.conclusion_holds);
  CHECK(check_prop_2_3(2, one_thread()).instances.front().conclusion_holds);
  CHECK(check_prop_2_3(3, one_thread()).instances.front().conclusion_holds);
}

TEST_CASE("induced structure on a complete graph") {
  const auto r = only(check_lemma_4_1(complete(8), VertexSet::full(6)));
  CHECK(r.hypothesis_holds);
  CHECK(r.conclusion_holds);
  CHECK(r.evidence["branch"] == "almost_wilsonian");
}

TEST_CASE("induced structure fails on two K4 sharing a vertex") {
  Graph g(7);
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) g.add_edge(a, b);
  for (int a = 3; a < 7; ++a)
    for (int b = a + 1; b < 7; ++b) g.add_edge(a, b);
  const auto r = only(check_lemma_4_1(g, VertexSet::full(7)));
  CHECK(r.hypothesis_holds);
  CHECK(r.evidence["branch"] == "cut_vertex");
  // the two sides are triangles, and a triangle is a cycle
  CHECK_FALSE(r.conclusion_holds);
}

TEST_CASE("realignment: aligned sigma needs no swaps") {
  const Graph k22 = complete_bipartite(2, 2);
  const auto r = only(check_lemma_6_2(k22, k22, Bijection::identity(4), 0, 2, one_thread()));
  CHECK(r.hypothesis_holds);
  CHECK(r.conclusion_holds);
  CHECK(r.evidence["sequence"].empty());
}

TEST_CASE("realignment sequences replay") {
  const auto rep = suite_lemma_6_2(3, 20, 4, one_thread());
  CHECK(rep.counterexample_count() == 0);
  for (const auto &i : rep.instances) {
    if (!i.hypothesis_holds) continue;
    const Graph x = graph_from_json(i.instance["x"]);
    const Graph y = graph_from_json(i.instance["y"]);
    const int u = i.instance["u"], v = i.instance["v"];
    Bijection start = bijection_from_json(i.instance["sigma"]);
    if (i.evidence["orientation_switched"].get<bool>()) start = apply_value_swap(start, u, v);
    const auto seq = swaps_from_json(i.evidence["sequence"]);
    CHECK_NOTHROW(apply_sequence(FsInstance(x, y), start, seq));
  }
}

TEST_CASE("constructions verify") {
  CHECK(only(check_prop_1_6(7, 5, one_thread())).conclusion_holds);
  CHECK(only(check_thm_1_11(3, 2, 2, one_thread())).conclusion_holds);
  CHECK(only(check_thm_2_6(complete(5), one_thread())).conclusion_holds);
  CHECK(only(check_thm_2_8(complete_bipartite(2, 3), one_thread())).conclusion_holds);
  CHECK(only(check_census_symmetry(star(5), cycle(5), one_thread())).conclusion_holds);
}

TEST_CASE("suites are deterministic and thread independent") {
  ClaimSpec spec{ClaimId::THM_1_4, {{"n", 6}, {"d1", 4}, {"d2", 4}, {"trials", 10}, {"seed", 11}}};
  VerifyOptions a = one_thread(), b;
  b.threads = 3;
  const auto ra = report_to_json(run_claim(spec, a)).dump();
  const auto rb = report_to_json(run_claim(spec, b)).dump();
  CHECK(ra == rb);

  ClaimSpec lem{ClaimId::LEM_4_1, {{"m", 8}, {"instances", 50}, {"seed", 2}}};
  CHECK(report_to_json(run_claim(lem, a)).dump() == report_to_json(run_claim(lem, b)).dump());
}

TEST_CASE("replay reproduces recorded instances") {
  const auto rep = suite_thm_1_5(7, 4, 5, 5, 9, one_thread());
  for (const auto &i : rep.instances) {
    const auto again = replay_instance("THM_1_5", i.instance, one_thread());
    REQUIRE(again.instances.size() == 1);
    CHECK(again.instances.front().hypothesis_holds == i.hypothesis_holds);
    CHECK(again.instances.front().conclusion_holds == i.conclusion_holds);
    CHECK(again.instances.front().evidence == i.evidence);
  }
}

TEST_CASE("run_claim rejects bad parameters") {
  CHECK_THROWS_AS(run_claim({ClaimId::THM_1_4, {{"n", "six"}}}), std::invalid_argument);
  CHECK_THROWS_AS(run_claim({ClaimId::LEM_6_2, {{"r", 3}, {"x", 5}}}), std::invalid_argument);
}
