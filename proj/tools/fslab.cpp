#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "fslab/classify.hpp"
#include "fslab/constructions.hpp"
#include "fslab/fs_engine.hpp"
#include "fslab/json_io.hpp"
#include "fslab/verify.hpp"

using namespace fslab;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;

struct Globals {
  int threads = 0;
  int cap = kDefaultEngineCap;
  bool allow_large = false;
};

void log_run(const Globals &g, std::optional<std::uint64_t> seed) {
  std::cerr << "fslab: cap=" << g.cap << " seed=" << (seed ? std::to_string(*seed) : "none")
            << " threads=" << g.threads << '\n';
}

void emit(const json &j) { std::cout << j.dump(2) << '\n'; }

// Named integer flag that is only forwarded when given.
struct IntFlag {
  const char *key;
  int value = 0;
  CLI::Option *opt = nullptr;
};

Bijection read_sigma(const std::string &arg) {
  if (!arg.empty() && arg.front() == '[') {
    try {
      return bijection_from_json(json::parse(arg));
    } catch (const json::parse_error &e) {
      throw FormatError(std::string("sigma: ") + e.what());
    }
  }
  const json j = read_json_file(arg);
  // Accept either a bare array or a pair sidecar {"sigma": [...]}.
  return bijection_from_json(j.is_object() && j.contains("sigma") ? j.at("sigma") : j);
}

void write_pair(const LowerBoundPair &p, const std::string &base) {
  if (base.empty()) {
    emit(pair_to_json(p));
    return;
  }
  write_json_file(base + ".x.json", graph_to_json(p.x));
  write_json_file(base + ".y.json", graph_to_json(p.y));
  write_json_file(base + ".sigma.json", pair_sidecar_to_json(p));
  std::cerr << "wrote " << base << ".{x,y,sigma}.json\n";
}

void write_graph(const Graph &g, const std::string &out) {
  if (out.empty()) {
    emit(graph_to_json(g));
  } else {
    write_json_file(out, graph_to_json(g));
    std::cerr << "wrote " << out << '\n';
  }
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Friends-and-strangers graph laboratory"};
  app.require_subcommand(1);
  Globals g;
  auto *threads_opt = app.add_option("--threads", g.threads, "worker threads (default: all cores)")
                          ->check(CLI::NonNegativeNumber);
  app.add_option("--cap", g.cap, "largest n the census will enumerate")->check(CLI::Range(1, kHardEngineCap));
  app.add_flag("--allow-large", g.allow_large, "acknowledge the memory cost of --cap above 10");

  // construct
  auto *construct = app.add_subcommand("construct", "build a graph or lower-bound pair");
  std::string family, out;
  int n = 0, k = 5, r = 0, a = 0, b = 0, d1 = 0, d2 = 0, min_deg = 0;
  std::uint64_t seed = 1;
  bool connected = false;
  construct->add_option("family", family, "graph family")
      ->required()
      ->check(CLI::IsMember({"star", "star_plus", "cycle", "path", "complete", "complete_bipartite",
                             "theta0", "prop_1_6", "thm_1_11", "random", "random_bipartite"}));
  construct->add_option("--n", n, "vertex count");
  construct->add_option("--k", k, "group count for prop_1_6");
  construct->add_option("--r", r, "part size");
  construct->add_option("--a", a, "first part size for complete_bipartite");
  construct->add_option("--b", b, "second part size for complete_bipartite");
  construct->add_option("--d1", d1, "delta(X) for thm_1_11");
  construct->add_option("--d2", d2, "delta(Y) for thm_1_11");
  construct->add_option("--min-degree", min_deg, "minimum degree floor for random families");
  auto *construct_seed = construct->add_option("--seed", seed, "sampler seed");
  construct->add_flag("--connected", connected, "reject disconnected random samples");
  construct->add_option("-o,--out", out, "output file (graphs) or base path (pairs)");

  // components
  auto *components = app.add_subcommand("components", "component census of FS(X, Y)");
  std::string x_path, y_path;
  components->add_option("x", x_path, "X graph JSON")->required()->check(CLI::ExistingFile);
  components->add_option("y", y_path, "Y graph JSON")->required()->check(CLI::ExistingFile);

  // classify
  auto *classify_cmd = app.add_subcommand("classify", "Wilsonian / almost-Wilsonian classification");
  std::string g_path;
  classify_cmd->add_option("graph", g_path, "graph JSON")->required()->check(CLI::ExistingFile);

  // exchangeable
  auto *exch = app.add_subcommand("exchangeable", "are u and v exchangeable from sigma?");
  std::string sigma_arg;
  int u = -1, v = -1;
  std::vector<int> forbid;
  exch->add_option("x", x_path, "X graph JSON")->required()->check(CLI::ExistingFile);
  exch->add_option("y", y_path, "Y graph JSON")->required()->check(CLI::ExistingFile);
  exch->add_option("--sigma", sigma_arg, "bijection: JSON file or inline array")->required();
  exch->add_option("--u", u, "first Y vertex")->required();
  exch->add_option("--v", v, "second Y vertex")->required();
  exch->add_option("--forbid", forbid, "Y vertices no swap may touch")->delimiter(',');

  // verify
  auto *verify = app.add_subcommand("verify", "check a claim and report");
  std::string claim, replay_path, report_out;
  verify->add_option("claim", claim, "claim id, e.g. THM_1_10")->required();
  std::vector<IntFlag> ints{{"n"}, {"k"}, {"r"}, {"d1"}, {"d2"}, {"m"}, {"trials"}, {"instances"},
                            {"min_n"}, {"max_n"}, {"u"}, {"v"}};
  for (auto &f : ints) {
    std::string name = std::string("--") + f.key;
    for (auto &ch : name) ch = ch == '_' ? '-' : ch;
    f.opt = verify->add_option(name, f.value);
  }
  std::uint64_t verify_seed = 1;
  auto *verify_seed_opt = verify->add_option("--seed", verify_seed, "sampler seed");
  std::string vx, vy, vg, vsigma;
  std::vector<int> vq;
  verify->add_option("--x", vx, "X graph JSON")->check(CLI::ExistingFile);
  verify->add_option("--y", vy, "Y graph JSON")->check(CLI::ExistingFile);
  verify->add_option("--g", vg, "G graph JSON (lemma checks)")->check(CLI::ExistingFile);
  verify->add_option("--q", vq, "vertex subset Q")->delimiter(',');
  verify->add_option("--sigma", vsigma, "bijection: JSON file or inline array");
  verify->add_option("--replay", replay_path, "re-run the counterexamples of a saved report")
      ->check(CLI::ExistingFile);
  verify->add_option("-o,--out", report_out, "also write the report here");

  // search
  auto *search = app.add_subcommand("search", "counterexample hunt near a conjectured boundary");
  std::string conjecture = "8.1";
  int trials = 50;
  search->add_option("--conjecture", conjecture, "8.1 or 8.2")->check(CLI::IsMember({"8.1", "8.2"}));
  search->add_option("--n", n, "vertex count")->required();
  search->add_option("--d1", d1, "delta(X) floor")->required();
  search->add_option("--d2", d2, "delta(Y) floor")->required();
  search->add_option("--trials", trials, "sampled pairs")->check(CLI::NonNegativeNumber);
  search->add_option("--seed", seed, "sampler seed");
  search->add_option("-o,--out", report_out, "also write the report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (threads_opt->count() == 0) {
    if (const char *env = std::getenv("FS_LAB_THREADS")) {
      try {
        g.threads = std::stoi(env);
      } catch (const std::exception &) {
        std::cerr << "error: FS_LAB_THREADS must be an integer\n";
        return kExitUsage;
      }
      if (g.threads < 0) {
        std::cerr << "error: FS_LAB_THREADS must be non-negative\n";
        return kExitUsage;
      }
    }
  }
  if (g.cap > kDefaultEngineCap && !g.allow_large) {
    std::cerr << "error: --cap " << g.cap << " needs --allow-large (census memory "
              << census_memory_bytes(g.cap) / (1024 * 1024) << " MiB)\n";
    return kExitUsage;
  }
  if (g.threads == 0) g.threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  const VerifyOptions vo{g.cap, g.threads};

  try {
    if (*construct) {
      log_run(g, construct_seed->count() ? std::optional<std::uint64_t>(seed) : std::nullopt);
      if (family == "prop_1_6") {
        write_pair(prop_1_6_pair(n, k), out);
      } else if (family == "thm_1_11") {
        write_pair(thm_1_11_pair(r, d1, d2), out);
      } else {
        Graph gr(1);
        if (family == "star") gr = star(n);
        else if (family == "star_plus") gr = star_plus(n);
        else if (family == "cycle") gr = cycle(n);
        else if (family == "path") gr = path(n);
        else if (family == "complete") gr = complete(n);
        else if (family == "complete_bipartite") gr = complete_bipartite(a, b);
        else if (family == "theta0") gr = theta0();
        else if (family == "random") gr = random_graph_min_degree(n, min_deg, connected, seed);
        else gr = random_bipartite_subgraph(r, min_deg, seed);
        write_graph(gr, out);
      }
      return kExitOk;
    }

    if (*components) {
      log_run(g, std::nullopt);
      const Graph x = load_graph(x_path), y = load_graph(y_path);
      CensusOptions co;
      co.cap = g.cap;
      co.threads = g.threads;
      emit(census_to_json(component_census(FsInstance(x, y), co)));
      return kExitOk;
    }

    if (*classify_cmd) {
      log_run(g, std::nullopt);
      const Graph gr = load_graph(g_path);
      json j = classification_to_json(classify(gr));
      const auto center = spanning_star_center(gr);
      j["spanning_star_center"] = center ? json(*center) : json(nullptr);
      const auto plus = spanning_star_plus(gr);
      j["spanning_star_plus"] =
          plus ? json{{"center", plus->center}, {"extra_edge", {plus->extra_edge.first, plus->extra_edge.second}}}
               : json(nullptr);
      j["half_degree"] = check_half_degree_wilsonian(gr);
      emit(j);
      return kExitOk;
    }

    if (*exch) {
      log_run(g, std::nullopt);
      const Graph x = load_graph(x_path), y = load_graph(y_path);
      const FsInstance inst(x, y);
      const Bijection sigma = read_sigma(sigma_arg);
      if (sigma.size() != inst.size()) throw FormatError("sigma size does not match the graphs");
      if (u < 0 || v < 0 || u >= inst.size() || v >= inst.size()) {
        throw std::invalid_argument("u and v must be vertices of Y");
      }
      SearchOptions so;
      so.census_cap = g.cap;
      so.threads = g.threads;
      if (!forbid.empty()) so.filter = SwapFilter{VertexSet::of(forbid)};
      const auto res = exchangeable(inst, sigma, u, v, so);
      json j;
      j["exchangeable"] = res.connected;
      j["sequence"] = res.sequence ? swaps_to_json(*res.sequence) : json(nullptr);
      j["via_census"] = res.via_census;
      emit(j);
      return kExitOk;
    }

    const auto started = std::chrono::steady_clock::now();
    VerificationReport report;
    if (*verify) {
      if (!replay_path.empty()) {
        log_run(g, std::nullopt);
        const json saved = read_json_file(replay_path);
        const std::string id = saved.value("claim_id", claim);
        if (!saved.contains("counterexamples") || !saved.at("counterexamples").is_array()) {
          throw FormatError("replay file has no counterexamples array");
        }
        report.claim_id = id;
        for (const auto &c : saved.at("counterexamples")) {
          report.absorb(replay_instance(id, c.at("instance"), vo));
        }
      } else {
        const auto id = parse_claim_id(claim);
        if (!id) {
          std::cerr << "error: unknown claim \"" << claim << "\"\n";
          return kExitUsage;
        }
        ClaimSpec spec{*id, json::object()};
        for (const auto &f : ints) {
          if (f.opt->count()) spec.params[f.key] = f.value;
        }
        if (verify_seed_opt->count()) spec.params["seed"] = verify_seed;
        if (!vx.empty()) spec.params["x"] = graph_to_json(load_graph(vx));
        if (!vy.empty()) spec.params["y"] = graph_to_json(load_graph(vy));
        if (!vg.empty()) spec.params["g"] = graph_to_json(load_graph(vg));
        if (!vq.empty()) spec.params["q"] = vq;
        if (!vsigma.empty()) spec.params["sigma"] = bijection_to_json(read_sigma(vsigma));
        log_run(g, verify_seed_opt->count() ? std::optional<std::uint64_t>(verify_seed) : std::nullopt);
        report = run_claim(spec, vo);
      }
    } else {
      log_run(g, seed);
      report = conjecture == "8.1" ? search_conjecture_8_1(n, d1, d2, trials, seed, vo)
                                   : search_conjecture_8_2(n, d1, d2, trials, seed, vo);
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    std::cerr << "fslab: " << report.instances_checked() << " instances, "
              << report.counterexample_count() << " counterexamples, " << secs << " s\n";
    const json j = report_to_json(report);
    emit(j);
    if (!report_out.empty()) write_json_file(report_out, j);
    return report.has_counterexample() ? kExitCounterexample : kExitOk;
  } catch (const EngineCapError &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
