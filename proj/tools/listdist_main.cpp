// listdist: distinguishing edge colourings from per-edge colour lists.
//
// Subcommands: colour, verify, classify, oracle, dprime, probe, corpus.
// All output is JSON on stdout (or --out). Exit codes: 0 success,
// 1 input/parse error, 2 exceptional or unsupported graph, 3 infeasible or
// budget exhausted, 4 internal audit failure.

#include <atomic>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "listdist/dispatch.hpp"
#include "listdist/graph6.hpp"
#include "listdist/json_io.hpp"
#include "listdist/oracle.hpp"
#include "listdist/rng.hpp"

using namespace listdist;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::InvalidInput, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int exit_code_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::ExceptionalGraph:
    case ErrorCode::ExceptionalTree:
    case ErrorCode::Unsupported:
    case ErrorCode::NotConnected:
    case ErrorCode::Disconnected:
    case ErrorCode::ListTooShort:
    case ErrorCode::TooLarge:
      return 2;
    case ErrorCode::Infeasible:
    case ErrorCode::BudgetExceeded:
    case ErrorCode::NotFoundWithin:
      return 3;
    case ErrorCode::InternalAudit:
    case ErrorCode::SchemeStuck:
    case ErrorCode::ExtensionStuck:
      return 4;
    default:
      return 1;
  }
}

struct Io {
  std::string out_path;
  void emit(const json& j) const {
    if (out_path.empty()) {
      std::cout << j.dump(2) << "\n";
      return;
    }
    std::ofstream out(out_path);
    out << j.dump(2) << "\n";
  }
};

json classification_json(const GraphClass& cls) {
  json j{{"class", to_string(cls.tag)}, {"delta", cls.delta}, {"n", cls.n}};
  if (cls.tag == GraphClassTag::SymmetricTree || cls.tag == GraphClassTag::BisymmetricTree) {
    j["h"] = cls.h;
    j["d"] = cls.d;
  }
  try {
    auto req = required_list_size(cls);
    j["required_list_size"] = req.k;
    j["exceptional"] = req.exceptional;
  } catch (const Error& e) {
    j["required_list_size"] = nullptr;
    j["required_list_size_error"] = to_string(e.code());
    j["exceptional"] = true;
  }
  return j;
}

struct ListSource {
  std::string lists_path;
  int k = 0;
  int universe = 0;
  std::uint64_t seed = 0;
  std::string mode = "random";

  ListAssignment resolve(const Graph& g) const {
    if (!lists_path.empty()) return lists_from_json(g, json::parse(read_file(lists_path)));
    int delta = g.max_degree();
    int kk = k > 0 ? k : std::max(delta - 1, 1);
    int uu = universe > 0 ? universe : std::max(2 * delta, kk + 1);
    ListMode m = ListMode::Random;
    if (mode == "identical") m = ListMode::Identical;
    else if (mode == "one-off-identical") m = ListMode::OneOffIdentical;
    else if (mode != "random") fail(ErrorCode::InvalidInput, "unknown list mode " + mode);
    return generate_lists(g, kk, uu, seed, m);
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"distinguishing edge colourings from colour lists"};
  app.require_subcommand(1);

  std::string graph_path, out_path, colouring_path, dot_path, graphs_path;
  ListSource lists;
  std::uint64_t budget = kDefaultBudget;
  int aut_cap = kDefaultAutCap;
  bool debug_invariants = false, with_trace = false, induced_tests = false;
  int universe_opt = 3;
  int kmax = 0;
  int seeds = 20;
  int jobs = 0;

  auto add_common = [&](CLI::App* cmd, bool needs_graph = true) {
    if (needs_graph) cmd->add_option("--graph", graph_path, "graph file (edge list or graph6)")
        ->required();
    cmd->add_option("--out", out_path, "write the JSON report here instead of stdout");
    cmd->add_option("--budget", budget, "search-node budget for exhaustive passes");
    cmd->add_option("--aut-cap", aut_cap, "vertex cap for automorphism enumeration");
  };
  auto add_lists = [&](CLI::App* cmd) {
    cmd->add_option("--lists", lists.lists_path, "list-assignment JSON file");
    cmd->add_option("--k", lists.k, "generated list size (default max degree - 1)");
    cmd->add_option("--universe", lists.universe, "generated colour universe (default 2*delta)");
    cmd->add_option("--seed", lists.seed, "seed for generated lists");
    cmd->add_option("--list-mode", lists.mode, "random | identical | one-off-identical");
  };

  auto* c_colour = app.add_subcommand("colour", "construct a verified distinguishing colouring");
  add_common(c_colour);
  add_lists(c_colour);
  c_colour->add_flag("--debug-invariants", debug_invariants, "assert engine invariants per step");
  c_colour->add_flag("--trace", with_trace, "emit per-step records");
  c_colour->add_flag("--induced-cycle-tests", induced_tests,
                     "use induced cycles in the length-k frontier tests");
  c_colour->add_option("--dot", dot_path, "also write a DOT rendering here");

  auto* c_verify = app.add_subcommand("verify", "check a colouring against the automorphism group");
  add_common(c_verify);
  c_verify->add_option("--colouring", colouring_path, "colouring JSON file")->required();
  c_verify->add_option("--lists", lists.lists_path, "optional lists to check membership against");

  auto* c_classify = app.add_subcommand("classify", "recognize the graph family");
  add_common(c_classify);

  auto* c_oracle = app.add_subcommand("oracle", "exhaustive feasibility for the given lists");
  add_common(c_oracle);
  add_lists(c_oracle);

  auto* c_dprime = app.add_subcommand("dprime", "exact distinguishing index");
  add_common(c_dprime);
  c_dprime->add_option("--k-max", kmax, "largest colour count to try (default delta+1)");

  auto* c_probe = app.add_subcommand("probe", "list-feasibility probe at the distinguishing index");
  add_common(c_probe);
  c_probe->add_option("--universe", universe_opt, "colour universe for the probe");

  auto* c_corpus = app.add_subcommand("corpus", "run colour+verify over a graph6 stream");
  c_corpus->add_option("--graphs", graphs_path, "file with one graph6 line per graph")->required();
  add_common(c_corpus, /*needs_graph=*/false);
  add_lists(c_corpus);
  c_corpus->add_option("--seeds", seeds, "random list assignments per graph");
  c_corpus->add_option("--jobs", jobs, "worker threads (default hardware)");

  CLI11_PARSE(app, argc, argv);
  Io io{out_path};

  try {
    if (*c_classify) {
      Graph g = load_graph_text(read_file(graph_path));
      io.emit(classification_json(classify(g)));
      return 0;
    }
    if (*c_colour) {
      Graph g = load_graph_text(read_file(graph_path));
      ListAssignment L = lists.resolve(g);
      ColourOptions opt;
      opt.debug_invariants = debug_invariants;
      opt.with_trace = with_trace;
      opt.cycle_tests_induced = induced_tests;
      opt.aut_cap = aut_cap;
      opt.budget = budget;
      auto res = colour_auto(g, L, opt);
      json j{{"command", "colour"},
             {"classification", classification_json(res.cls)},
             {"engine", res.engine},
             {"verified", res.verified},
             {"lists", lists_to_json(L)},
             {"colouring", colouring_to_json(g, res.colouring)}};
      if (with_trace) j["trace"] = trace_to_json(res.trace);
      if (!dot_path.empty()) {
        std::ofstream dot(dot_path);
        dot << dot_export(g, res.colouring);
      }
      io.emit(j);
      return 0;
    }
    if (*c_verify) {
      Graph g = load_graph_text(read_file(graph_path));
      EdgeColouring c = colouring_from_json(g, json::parse(read_file(colouring_path)));
      std::optional<ListAssignment> L;
      if (!lists.lists_path.empty())
        L = lists_from_json(g, json::parse(read_file(lists.lists_path)));
      auto group = automorphisms(g, aut_cap);
      bool total = c.total() || g.edge_count() == 0;
      bool dist = total && is_distinguishing(g, group, c);
      bool in_lists = !L || respects_lists(c, *L);
      io.emit(json{{"command", "verify"},
                   {"total", total},
                   {"distinguishing", dist},
                   {"respects_lists", in_lists},
                   {"group_size", group.size()}});
      return dist && in_lists ? 0 : 3;
    }
    if (*c_oracle) {
      Graph g = load_graph_text(read_file(graph_path));
      ListAssignment L = lists.resolve(g);
      auto group = automorphisms(g, aut_cap);
      auto rep = exists_distinguishing_from_lists(g, group, L, budget);
      json j{{"command", "oracle"},
             {"feasible", rep.feasible},
             {"search_nodes", rep.colourings_examined},
             {"lists", lists_to_json(L)}};
      if (rep.witness) j["witness"] = colouring_to_json(g, *rep.witness);
      io.emit(j);
      return rep.feasible ? 0 : 3;
    }
    if (*c_dprime) {
      Graph g = load_graph_text(read_file(graph_path));
      auto group = automorphisms(g, aut_cap);
      int cap = kmax > 0 ? kmax : g.max_degree() + 1;
      int d = distinguishing_index(g, group, cap, budget);
      io.emit(json{{"command", "dprime"}, {"dprime", d}, {"group_size", group.size()}});
      return 0;
    }
    if (*c_probe) {
      Graph g = load_graph_text(read_file(graph_path));
      auto probe = probe_conjecture(g, universe_opt, budget);
      json cex = json::array();
      for (const auto& lists_found : probe.counterexample_lists) cex.push_back(lists_found);
      io.emit(json{{"command", "probe"},
                   {"dprime", probe.dprime},
                   {"universe", universe_opt},
                   {"list_feasible_at_dprime", probe.list_feasible_at_dprime},
                   {"known_exceptional", probe.known_exceptional},
                   {"assignments_tested", probe.assignments_tested},
                   {"counterexample_lists", cex}});
      return probe.list_feasible_at_dprime || probe.known_exceptional ? 0 : 3;
    }
    if (*c_corpus) {
      std::istringstream in(read_file(graphs_path));
      std::vector<std::string> lines;
      std::string line;
      while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (!line.empty()) lines.push_back(line);
      }
      int nworkers = jobs > 0 ? jobs : static_cast<int>(std::thread::hardware_concurrency());
      if (nworkers <= 0) nworkers = 1;
      std::vector<json> results(lines.size());
      std::atomic<std::size_t> cursor{0};
      std::atomic<long> failures{0};
      auto work = [&]() {
        for (;;) {
          std::size_t i = cursor.fetch_add(1);
          if (i >= lines.size()) return;
          json entry{{"graph6", lines[i]}};
          try {
            Graph g = parse_graph6(lines[i]);
            entry["n"] = g.vertex_count();
            entry["m"] = g.edge_count();
            auto cls = classify(g);
            entry["class"] = to_string(cls.tag);
            if (cls.is_exceptional() || cls.delta < 3) {
              entry["skipped"] = "exceptional";
              results[i] = std::move(entry);
              continue;
            }
            json runs = json::array();
            int delta = cls.delta;
            int kk = lists.k > 0 ? lists.k : delta - 1;
            int uu = lists.universe > 0 ? lists.universe : 2 * delta;
            long bad = 0;
            auto run_one = [&](std::uint64_t sd, ListMode mode, const char* name) {
              json r{{"seed", sd}, {"mode", name}};
              try {
                auto L = generate_lists(g, kk, uu, mix_seed(lists.seed, i, sd), mode);
                ColourOptions opt;
                opt.aut_cap = aut_cap;
                opt.budget = budget;
                auto res = colour_auto(g, L, opt);
                r["ok"] = res.verified;
                if (!res.verified) ++bad;
              } catch (const Error& e) {
                r["ok"] = false;
                r["error"] = to_string(e.code());
                ++bad;
              }
              runs.push_back(std::move(r));
            };
            for (int sdx = 0; sdx < seeds; ++sdx)
              run_one(sdx, ListMode::Random, "random");
            run_one(seeds, ListMode::OneOffIdentical, "one-off-identical");
            entry["runs"] = std::move(runs);
            entry["failures"] = bad;
            failures += bad;
          } catch (const Error& e) {
            entry["error"] = to_string(e.code());
            failures += 1;
          }
          results[i] = std::move(entry);
        }
      };
      std::vector<std::thread> pool;
      for (int w = 0; w < nworkers; ++w) pool.emplace_back(work);
      for (auto& t : pool) t.join();
      json j{{"command", "corpus"},
             {"graphs", lines.size()},
             {"failures", failures.load()},
             {"results", results}};
      io.emit(j);
      return failures.load() == 0 ? 0 : 3;
    }
  } catch (const Error& e) {
    io.emit(json{{"error", to_string(e.code())}, {"message", e.what()}});
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    io.emit(json{{"error", "Unhandled"}, {"message", e.what()}});
    return 1;
  }
  return 1;
}
