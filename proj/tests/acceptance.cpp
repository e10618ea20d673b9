// Acceptance suite: one pass/fail line per criterion.
//
//   1. constructive colouring over every connected non-tree graph with
//      4 <= n <= 8, max degree >= 3, excluding K4 and K33
//   2. the same over all trees with 4 <= n <= 10 and max degree 3 or 4
//   3. cycle feasibility tables for list size 2
//   4. K4 / K33 / star / double-star feasibility tables
//   5. exact distinguishing-index spot values
//   6. conjecture probe over all connected graphs with n <= 7
//   7. group sizes, engine/oracle consistency, per-step invariant checks
//
// --quick restricts the heavy corpora for development runs; the default is
// the full suite.

#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstring>
#include <mutex>
#include <sstream>
#include <thread>
#include <vector>

#include "listdist/dispatch.hpp"
#include "listdist/gen.hpp"
#include "listdist/graph6.hpp"
#include "listdist/json_io.hpp"
#include "listdist/oracle.hpp"
#include "listdist/rng.hpp"

using namespace listdist;
using Clock = std::chrono::steady_clock;

namespace {

bool g_quick = false;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

template <typename Fn>
void parallel_over(std::size_t count, Fn&& fn) {
  unsigned workers = std::thread::hardware_concurrency();
  if (workers == 0) workers = 1;
  std::atomic<std::size_t> cursor{0};
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&]() {
      for (;;) {
        std::size_t i = cursor.fetch_add(1);
        if (i >= count) return;
        fn(i);
      }
    });
  for (auto& t : pool) t.join();
}

struct SuiteStats {
  std::atomic<long> graphs{0};
  std::atomic<long> runs{0};
  std::atomic<long> failures{0};
  std::atomic<long> oracle_mismatches{0};
  std::atomic<long> oracle_budget{0};
  std::mutex log_mutex;
  std::vector<std::string> failure_log;

  void log_failure(const std::string& s) {
    std::lock_guard<std::mutex> lock(log_mutex);
    if (failure_log.size() < 25) failure_log.push_back(s);
  }
};

// one graph of the constructive suites: 20 random assignments plus the
// one-off-identical mode, engine + verifier + oracle cross-check
void run_suite_graph(const Graph& g, std::size_t gi, SuiteStats& stats) {
  auto cls = classify(g);
  auto group = automorphisms(g);
  int delta = cls.delta;
  int k = delta - 1;
  int universe = 2 * delta;
  stats.graphs += 1;
  auto run_one = [&](std::uint64_t seed, ListMode mode, const char* name) {
    stats.runs += 1;
    ListAssignment L = generate_lists(g, k, universe, mix_seed(0xACCE97ULL, gi, seed), mode);
    ColourOptions opt;
    opt.debug_invariants = true;
    opt.group = &group;
    try {
      auto res = colour_auto(g, L, opt);
      if (!res.verified) {
        stats.failures += 1;
        stats.log_failure(encode_graph6(g) + " seed=" + std::to_string(seed) + " " + name +
                          ": not verified");
        return;
      }
    } catch (const Error& e) {
      stats.failures += 1;
      stats.log_failure(encode_graph6(g) + " seed=" + std::to_string(seed) + " " + name + ": " +
                        e.what());
      return;
    }
    try {
      auto rep = exists_distinguishing_from_lists(g, group, L, 100000000ULL);
      if (!rep.feasible) stats.oracle_mismatches += 1;
    } catch (const Error& e) {
      if (e.code() == ErrorCode::BudgetExceeded)
        stats.oracle_budget += 1;
      else
        stats.oracle_mismatches += 1;
    }
  };
  for (std::uint64_t seed = 0; seed < 20; ++seed) run_one(seed, ListMode::Random, "random");
  run_one(20, ListMode::OneOffIdentical, "one-off-identical");
}

struct Criterion {
  std::string name;
  bool pass = false;
  std::string details;
};

Criterion criterion_cyclic_suite() {
  Criterion c;
  c.name = "1. constructive suite, cyclic graphs (4 <= n <= 8)";
  auto t0 = Clock::now();
  SuiteStats stats;
  int max_n = g_quick ? 6 : 8;
  std::vector<Graph> corpus;
  for (int n = 4; n <= max_n; ++n)
    for (Graph& g : connected_graphs(n)) {
      auto s = analyze(g);
      if (s.is_tree || s.max_degree < 3) continue;
      auto cls = classify(g);
      if (cls.tag == GraphClassTag::K4 || cls.tag == GraphClassTag::K33 ||
          cls.tag == GraphClassTag::Cycle)
        continue;
      corpus.push_back(std::move(g));
    }
  parallel_over(corpus.size(), [&](std::size_t i) { run_suite_graph(corpus[i], i, stats); });
  std::ostringstream d;
  d << stats.graphs << " graphs, " << stats.runs << " runs, " << stats.failures
    << " failures, oracle mismatches " << stats.oracle_mismatches << ", oracle budget-outs "
    << stats.oracle_budget << ", " << seconds_since(t0) << "s";
  for (const auto& f : stats.failure_log) d << "\n      " << f;
  c.details = d.str();
  c.pass = stats.failures == 0 && stats.oracle_mismatches == 0 && stats.oracle_budget == 0;
  return c;
}

Criterion criterion_tree_suite() {
  Criterion c;
  c.name = "2. constructive suite, trees (4 <= n <= 10, max degree 3 or 4)";
  auto t0 = Clock::now();
  SuiteStats stats;
  int max_n = g_quick ? 8 : 10;
  std::vector<Graph> corpus;
  for (int n = 4; n <= max_n; ++n)
    for (Graph& t : all_trees(n)) {
      auto cls = classify(t);
      if (cls.tag != GraphClassTag::GeneralTree) continue;
      if (cls.delta < 3 || cls.delta > 4) continue;
      corpus.push_back(std::move(t));
    }
  parallel_over(corpus.size(), [&](std::size_t i) { run_suite_graph(corpus[i], i, stats); });
  std::ostringstream d;
  d << stats.graphs << " trees, " << stats.runs << " runs, " << stats.failures
    << " failures, oracle mismatches " << stats.oracle_mismatches << ", "
    << seconds_since(t0) << "s";
  for (const auto& f : stats.failure_log) d << "\n      " << f;
  c.details = d.str();
  c.pass = stats.failures == 0 && stats.oracle_mismatches == 0 && stats.oracle_budget == 0;
  return c;
}

// raw exhaustive check used by criteria 3 and 4 at small scale: every
// assignment of k-subsets, tested directly, must match the predicate
template <typename Pred>
bool exhaustive_matches(const Graph& g, const AutomorphismGroup& group, int k, int universe,
                        Pred&& infeasible_expected, long* tested, std::string* complaint) {
  std::vector<std::vector<ColourId>> subsets;
  std::vector<ColourId> cur;
  std::function<void(int)> gen = [&](int start) {
    if (static_cast<int>(cur.size()) == k) {
      subsets.push_back(cur);
      return;
    }
    for (ColourId c = start; c < universe; ++c) {
      cur.push_back(c);
      gen(c + 1);
      cur.pop_back();
    }
  };
  gen(0);
  int m = g.edge_count();
  std::vector<int> idx(m, 0);
  *tested = 0;
  for (;;) {
    ListAssignment L{universe, {}};
    L.lists.resize(m);
    for (int e = 0; e < m; ++e) L.lists[e] = subsets[idx[e]];
    bool feasible = exists_distinguishing_from_lists(g, group, L).feasible;
    bool expect_infeasible = infeasible_expected(L);
    ++*tested;
    if (feasible == expect_infeasible) {
      std::ostringstream ss;
      ss << "assignment #" << *tested - 1 << " expected "
         << (expect_infeasible ? "infeasible" : "feasible") << " but oracle says "
         << (feasible ? "feasible" : "infeasible");
      *complaint = ss.str();
      return false;
    }
    int pos = m - 1;
    while (pos >= 0 && idx[pos] + 1 == static_cast<int>(subsets.size())) idx[pos--] = 0;
    if (pos < 0) break;
    ++idx[pos];
  }
  return true;
}

bool all_lists_identical(const ListAssignment& L) {
  for (const auto& l : L.lists)
    if (l != L.lists.front()) return false;
  return true;
}

Criterion criterion_cycles() {
  Criterion c;
  c.name = "3. cycle feasibility tables (k = 2, universes 3 and 4)";
  auto t0 = Clock::now();
  std::ostringstream d;
  bool ok = true;
  for (int n = 3; n <= 9 && ok; ++n) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.push_back(make_edge(i, (i + 1) % n));
    Graph g = Graph::from_edges(n, std::move(edges));
    auto group = automorphisms(g);
    for (int universe : {3, 4}) {
      auto rep = all_lists_feasibility(g, group, 2, universe, 4000000000ULL);
      bool expect_exceptions = n <= 5;
      if (expect_exceptions) {
        if (rep.all_feasible) {
          ok = false;
          d << "C" << n << " u" << universe << ": expected identical assignments infeasible; ";
          break;
        }
        for (const auto& lists : rep.infeasible_assignments) {
          for (const auto& l : lists)
            if (l != lists.front()) {
              ok = false;
              d << "C" << n << " u" << universe << ": non-identical infeasible assignment; ";
            }
        }
        if (rep.infeasible_assignments.size() != 1) {
          ok = false;
          d << "C" << n << " u" << universe << ": expected one orbit representative, got "
            << rep.infeasible_assignments.size() << "; ";
        }
      } else if (!rep.all_feasible) {
        ok = false;
        d << "C" << n << " u" << universe << ": unexpectedly infeasible; ";
      }
    }
  }
  d << seconds_since(t0) << "s";
  c.pass = ok;
  c.details = d.str();
  return c;
}

Criterion criterion_exceptional_tables() {
  Criterion c;
  c.name = "4. exceptional-family feasibility tables";
  auto t0 = Clock::now();
  std::ostringstream d;
  bool ok = true;
  long tested = 0;
  std::string complaint;

  // K4, universes 3 and 4: infeasible iff identical
  {
    std::vector<Edge> edges;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) edges.push_back({i, j});
    Graph k4 = Graph::from_edges(4, std::move(edges));
    auto group = automorphisms(k4);
    for (int universe : {3, 4}) {
      if (!exhaustive_matches(k4, group, 2, universe,
                              [](const ListAssignment& L) { return all_lists_identical(L); },
                              &tested, &complaint)) {
        ok = false;
        d << "K4 u" << universe << ": " << complaint << "; ";
      } else {
        d << "K4 u" << universe << ": " << tested << " assignments; ";
      }
    }
  }

  // the claw, universe 3
  {
    Graph star = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
    auto group = automorphisms(star);
    if (!exhaustive_matches(star, group, 2, 3,
                            [](const ListAssignment& L) { return all_lists_identical(L); },
                            &tested, &complaint)) {
      ok = false;
      d << "K13: " << complaint << "; ";
    } else {
      d << "K13: " << tested << " assignments; ";
    }
  }

  // double star: infeasible iff the four leaf edges carry identical lists
  {
    Graph ds = Graph::from_edges(6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}});
    EdgeId central = ds.edge_id(0, 1);
    auto group = automorphisms(ds);
    auto pred = [central](const ListAssignment& L) {
      const std::vector<ColourId>* leaf = nullptr;
      for (EdgeId e = 0; e < static_cast<EdgeId>(L.lists.size()); ++e) {
        if (e == central) continue;
        if (!leaf) leaf = &L.lists[e];
        else if (L.lists[e] != *leaf) return false;
      }
      return true;
    };
    if (!exhaustive_matches(ds, group, 2, 3, pred, &tested, &complaint)) {
      ok = false;
      d << "double star: " << complaint << "; ";
    } else {
      d << "double star: " << tested << " assignments; ";
    }
  }

  // K33: universe 3 exhaustively, universe 4 on sampled assignments
  {
    std::vector<Edge> edges;
    for (int a = 0; a < 3; ++a)
      for (int b = 3; b < 6; ++b) edges.push_back({a, b});
    Graph k33 = Graph::from_edges(6, std::move(edges));
    auto group = automorphisms(k33);
    if (!exhaustive_matches(k33, group, 2, 3,
                            [](const ListAssignment& L) { return all_lists_identical(L); },
                            &tested, &complaint)) {
      ok = false;
      d << "K33 u3: " << complaint << "; ";
    } else {
      d << "K33 u3: " << tested << " assignments; ";
    }
    long samples = g_quick ? 10000 : 100000;
    std::atomic<long> bad{0};
    parallel_over(static_cast<std::size_t>(samples), [&](std::size_t i) {
      auto L = generate_lists(k33, 2, 4, mix_seed(0x5A3317ULL, i, 1));
      if (all_lists_identical(L)) return;
      if (!exists_distinguishing_from_lists(k33, group, L).feasible) bad += 1;
    });
    if (bad != 0) {
      ok = false;
      d << "K33 u4: " << bad << " non-identical infeasible samples; ";
    } else {
      d << "K33 u4: " << samples << " samples clean; ";
    }
  }

  d << seconds_since(t0) << "s";
  c.pass = ok;
  c.details = d.str();
  return c;
}

Criterion criterion_dprime() {
  Criterion c;
  c.name = "5. distinguishing-index spot values";
  auto t0 = Clock::now();
  auto cyc = [](int n) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.push_back(make_edge(i, (i + 1) % n));
    return Graph::from_edges(n, std::move(edges));
  };
  std::vector<std::pair<Graph, int>> cases;
  cases.push_back({cyc(3), 3});
  cases.push_back({cyc(4), 3});
  cases.push_back({cyc(5), 3});
  cases.push_back({cyc(6), 2});
  {
    std::vector<Edge> edges;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) edges.push_back({i, j});
    cases.push_back({Graph::from_edges(4, std::move(edges)), 3});
  }
  cases.push_back({Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}}), 3});
  {
    std::vector<Edge> edges;
    for (int a = 0; a < 3; ++a)
      for (int b = 3; b < 6; ++b) edges.push_back({a, b});
    cases.push_back({Graph::from_edges(6, std::move(edges)), 3});
  }
  {
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i) {
      edges.push_back(make_edge(i, (i + 1) % 5));
      edges.push_back(make_edge(i, i + 5));
      edges.push_back(make_edge(i + 5, (i + 2) % 5 + 5));
    }
    cases.push_back({Graph::from_edges(10, std::move(edges)), 2});
  }
  bool ok = true;
  std::ostringstream d;
  for (auto& [g, want] : cases) {
    int got = distinguishing_index(g, automorphisms(g), g.max_degree() + 1);
    if (got != want) {
      ok = false;
      d << "graph " << encode_graph6(g) << ": expected " << want << " got " << got << "; ";
    }
  }
  d << cases.size() << " values, " << seconds_since(t0) << "s";
  c.pass = ok;
  c.details = d.str();
  return c;
}

Criterion criterion_probe() {
  Criterion c;
  c.name = "6. conjecture probe over connected graphs with n <= 7";
  auto t0 = Clock::now();
  int max_n = g_quick ? 6 : 7;
  std::vector<Graph> corpus;
  for (int n = 2; n <= max_n; ++n)
    for (Graph& g : connected_graphs(n)) corpus.push_back(std::move(g));
  std::atomic<long> complete{0}, sampled{0}, exceptional_hits{0}, counterexamples{0},
      skipped{0}, universe_limited{0};
  std::mutex log_mutex;
  std::vector<std::string> notes;
  parallel_over(corpus.size(), [&](std::size_t i) {
    const Graph& g = corpus[i];
    try {
      auto probe = probe_conjecture(g, 3, 400000000ULL);
      complete += 1;
      if (!probe.counterexample_lists.empty()) {
        if (probe.known_exceptional)
          exceptional_hits += 1;
        else {
          counterexamples += 1;
          std::lock_guard<std::mutex> lock(log_mutex);
          notes.push_back("counterexample candidate on " + encode_graph6(g));
        }
      }
    } catch (const Error& e) {
      if (e.code() == ErrorCode::NotFoundWithin) {
        // a single edge: no colouring can help; recognized exceptional
        skipped += 1;
        return;
      }
      if (e.code() == ErrorCode::InvalidInput) {
        // the distinguishing index exceeds the probe universe: the probe is
        // undefined at this universe (stars and near-stars)
        universe_limited += 1;
        return;
      }
      if (e.code() != ErrorCode::BudgetExceeded) {
        counterexamples += 1;
        std::lock_guard<std::mutex> lock(log_mutex);
        notes.push_back(std::string("probe error on ") + encode_graph6(g) + ": " + e.what());
        return;
      }
      // enumeration beyond budget: sampled fallback, identical lists decided
      // explicitly first
      sampled += 1;
      auto group = automorphisms(g);
      int dprime = distinguishing_index(g, group, g.max_degree() + 1);
      bool bad = false;
      {
        std::vector<ColourId> base(dprime);
        for (int x = 0; x < dprime; ++x) base[x] = x;
        ListAssignment L{3, std::vector<std::vector<ColourId>>(g.edge_count(), base)};
        if (!exists_distinguishing_from_lists(g, group, L, 2000000000ULL).feasible) bad = true;
      }
      for (std::uint64_t s = 0; s < 2000 && !bad; ++s) {
        auto L = generate_lists(g, dprime, 3, mix_seed(0x960BEULL, i, s));
        if (!exists_distinguishing_from_lists(g, group, L, 100000000ULL).feasible) bad = true;
      }
      if (bad) {
        if (classify(g).is_exceptional())
          exceptional_hits += 1;
        else {
          counterexamples += 1;
          std::lock_guard<std::mutex> lock(log_mutex);
          notes.push_back("sampled counterexample candidate on " + encode_graph6(g));
        }
      }
    }
  });
  std::ostringstream d;
  d << corpus.size() << " graphs: " << complete << " enumerated, " << sampled
    << " sampled beyond budget, " << skipped << " without any distinguishing colouring, "
    << universe_limited << " above the probe universe, " << exceptional_hits
    << " known-exceptional hits, " << counterexamples << " counterexamples, "
    << seconds_since(t0) << "s";
  for (const auto& s : notes) d << "\n      " << s;
  c.pass = counterexamples == 0;
  c.details = d.str();
  return c;
}

Criterion criterion_invariants() {
  Criterion c;
  c.name = "7. automorphism-group sizes (consistency checks ride on suites 1 and 2)";
  auto t0 = Clock::now();
  bool ok = true;
  std::ostringstream d;
  auto expect = [&](const Graph& g, std::size_t want, const char* name) {
    auto got = automorphisms(g).size();
    if (got != want) {
      ok = false;
      d << name << ": expected " << want << " got " << got << "; ";
    }
  };
  {
    std::vector<Edge> edges;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) edges.push_back({i, j});
    expect(Graph::from_edges(4, std::move(edges)), 24, "K4");
  }
  for (int n = 3; n <= 10; ++n) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.push_back(make_edge(i, (i + 1) % n));
    expect(Graph::from_edges(n, std::move(edges)), 2 * n, "cycle");
  }
  {
    std::vector<Edge> edges;
    for (int a = 0; a < 3; ++a)
      for (int b = 3; b < 6; ++b) edges.push_back({a, b});
    expect(Graph::from_edges(6, std::move(edges)), 72, "K33");
  }
  {
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i) {
      edges.push_back(make_edge(i, (i + 1) % 5));
      edges.push_back(make_edge(i, i + 5));
      edges.push_back(make_edge(i + 5, (i + 2) % 5 + 5));
    }
    expect(Graph::from_edges(10, std::move(edges)), 120, "Petersen");
  }
  d << "engine/oracle agreement and per-step invariant assertions are enforced inside "
       "suites 1 and 2 (debug mode on); "
    << seconds_since(t0) << "s";
  c.pass = ok;
  c.details = d.str();
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--quick") == 0) g_quick = true;
  if (g_quick) std::printf("(quick mode: reduced corpora)\n");

  std::vector<Criterion> results;
  results.push_back(criterion_cyclic_suite());
  results.push_back(criterion_tree_suite());
  results.push_back(criterion_cycles());
  results.push_back(criterion_exceptional_tables());
  results.push_back(criterion_dprime());
  results.push_back(criterion_probe());
  results.push_back(criterion_invariants());

  int failed = 0;
  for (const auto& r : results) {
    std::printf("[%s] %s\n      %s\n", r.pass ? "PASS" : "FAIL", r.name.c_str(),
                r.details.c_str());
    if (!r.pass) ++failed;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(results.size()) - failed,
              results.size());
  return failed == 0 ? 0 : 1;
}
