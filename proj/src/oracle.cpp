#include "listdist/oracle.hpp"

#include <algorithm>
#include <deque>

#include "listdist/recognizer.hpp"

namespace listdist {

namespace {

std::vector<std::vector<EdgeId>> edge_permutations(const Graph& g,
                                                   const AutomorphismGroup& group,
                                                   bool skip_identity) {
  std::vector<std::vector<EdgeId>> perms;
  for (const auto& a : group.elements) {
    bool identity = true;
    for (std::size_t v = 0; v < a.size(); ++v)
      if (a[v] != static_cast<VertexId>(v)) {
        identity = false;
        break;
      }
    if (identity && skip_identity) continue;
    std::vector<EdgeId> p(g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) p[e] = edge_image_id(g, a, e);
    perms.push_back(std::move(p));
  }
  return perms;
}

// DFS over edges in canonical order, colours ascending; keeps the set of
// automorphisms not yet broken and stops at the first witness.
struct WitnessSearch {
  const std::vector<std::vector<ColourId>>& lists;
  const std::vector<std::vector<EdgeId>>& perms;     // non-identity edge perms
  std::vector<std::vector<EdgeId>> inv;
  std::vector<int> alive;                            // indices into perms
  std::vector<EdgeId> horizon;  // last edge index that can still break the perm
  std::vector<ColourId> col;
  std::uint64_t nodes = 0;
  std::uint64_t budget;
  bool exceeded = false;

  WitnessSearch(const std::vector<std::vector<ColourId>>& L,
                const std::vector<std::vector<EdgeId>>& P, std::uint64_t b)
      : lists(L), perms(P), budget(b) {
    int m = static_cast<int>(L.size());
    col.assign(m, kUncoloured);
    alive.resize(P.size());
    inv.assign(P.size(), std::vector<EdgeId>(m));
    horizon.assign(P.size(), -1);
    for (std::size_t i = 0; i < P.size(); ++i) {
      alive[i] = static_cast<int>(i);
      for (EdgeId e = 0; e < m; ++e) {
        inv[i][P[i][e]] = e;
        if (P[i][e] != e) horizon[i] = std::max(horizon[i], std::max(e, P[i][e]));
      }
    }
  }

  // does assigning col[e] break perm p (comparing only already-set pairs)?
  bool breaks(int p, int e) const {
    EdgeId q = perms[p][e];
    if (q <= e && col[q] != col[e]) return true;
    EdgeId r = inv[p][e];
    return r < e && col[r] != col[e];
  }

  bool search(int e, int alive_count, std::vector<ColourId>* out) {
    int m = static_cast<int>(lists.size());
    if (alive_count == 0) {
      for (int r = e; r < m; ++r) col[r] = lists[r].front();
      *out = col;
      for (int r = e; r < m; ++r) col[r] = kUncoloured;
      return true;
    }
    if (e == m) return false;  // complete but some automorphism survived
    for (ColourId c : lists[e]) {
      if (++nodes > budget) {
        exceeded = true;
        return false;
      }
      col[e] = c;
      int kept = 0;
      bool doomed = false;
      for (int i = 0; i < alive_count; ++i)
        if (!breaks(alive[i], e)) {
          // a survivor whose every moved pair is already coloured can never
          // be broken by any completion
          if (horizon[alive[i]] <= e) doomed = true;
          std::swap(alive[kept++], alive[i]);
        }
      if (!doomed) {
        if (search(e + 1, kept, out)) return true;
        if (exceeded) break;
      }
    }
    col[e] = kUncoloured;
    return false;
  }
};

}  // namespace

FeasibilityReport exists_distinguishing_from_lists(const Graph& g, const AutomorphismGroup& group,
                                                   const ListAssignment& L, std::uint64_t budget) {
  if (static_cast<int>(L.lists.size()) != g.edge_count())
    fail(ErrorCode::InvalidInput, "list count does not match edge count");
  auto perms = edge_permutations(g, group, /*skip_identity=*/true);
  WitnessSearch s(L.lists, perms, budget);
  FeasibilityReport rep;
  std::vector<ColourId> witness;
  bool found = s.search(0, static_cast<int>(perms.size()), &witness);
  rep.colourings_examined = s.nodes;
  if (found) {
    rep.feasible = true;
    EdgeColouring c(g.edge_count());
    c.colour = witness;
    rep.witness = c;
    return rep;
  }
  if (s.exceeded) fail(ErrorCode::BudgetExceeded, "witness search budget exhausted");
  rep.feasible = false;
  return rep;
}

int distinguishing_index(const Graph& g, const AutomorphismGroup& group, int k_max,
                         std::uint64_t budget) {
  for (int k = 1; k <= k_max; ++k) {
    std::vector<ColourId> pal(k);
    for (int c = 0; c < k; ++c) pal[c] = c;
    ListAssignment L{k, std::vector<std::vector<ColourId>>(g.edge_count(), pal)};
    auto rep = exists_distinguishing_from_lists(g, group, L, budget);
    if (rep.feasible) return k;
  }
  fail(ErrorCode::NotFoundWithin,
       "no distinguishing colouring with up to " + std::to_string(k_max) + " colours");
}

namespace {

std::vector<std::vector<ColourId>> k_subsets(int universe, int k) {
  std::vector<std::vector<ColourId>> out;
  std::vector<ColourId> cur;
  // lexicographic subsets
  struct Rec {
    int universe, k;
    std::vector<std::vector<ColourId>>* out;
    std::vector<ColourId>* cur;
    void go(int start) {
      if (static_cast<int>(cur->size()) == k) {
        out->push_back(*cur);
        return;
      }
      for (int c = start; c < universe; ++c) {
        cur->push_back(c);
        go(c + 1);
        cur->pop_back();
      }
    }
  } rec{universe, k, &out, &cur};
  rec.go(0);
  return out;
}

std::vector<std::vector<int>> colour_perms(int universe) {
  std::vector<int> p(universe);
  for (int i = 0; i < universe; ++i) p[i] = i;
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Orderly enumeration of assignments (vectors of subset ids) that are
// lexicographically minimal under edge permutations combined with colour
// renamings.
struct OrderlyAssignments {
  int m;
  int subset_count;
  std::vector<std::vector<int>> pair_edge_perm;    // per pair: position map
  std::vector<std::vector<int>> pair_subset_map;   // per pair: subset relabeling
  std::vector<int> a;

  // per-pair comparison cursor, trail-restored on backtrack
  std::vector<int> cmp;
  std::vector<char> dead;

  template <typename Fn>
  void run(Fn&& on_complete) {
    a.assign(m, -1);
    cmp.assign(pair_edge_perm.size(), 0);
    dead.assign(pair_edge_perm.size(), 0);
    descend(0, std::forward<Fn>(on_complete));
  }

  template <typename Fn>
  bool descend(int depth, Fn&& on_complete) {  // returns false to abort everything
    if (depth == m) return on_complete(a);
    for (int s = 0; s < subset_count; ++s) {
      a[depth] = s;
      std::vector<std::pair<int, int>> cmp_trail;
      std::vector<int> dead_trail;
      bool prune = false;
      for (std::size_t p = 0; p < pair_edge_perm.size() && !prune; ++p) {
        if (dead[p]) continue;
        int c = cmp[p];
        while (c <= depth) {
          int src = pair_edge_perm[p][c];
          if (src > depth || a[src] < 0) break;
          int b = pair_subset_map[p][a[src]];
          if (b < a[c]) {
            prune = true;
            break;
          }
          if (b > a[c]) {
            dead_trail.push_back(static_cast<int>(p));
            dead[p] = 1;
            break;
          }
          ++c;
        }
        if (c != cmp[p]) {
          cmp_trail.push_back({static_cast<int>(p), cmp[p]});
          cmp[p] = c;
        }
      }
      if (!prune) {
        if (!descend(depth + 1, on_complete)) return false;
      }
      for (auto& [p, old] : cmp_trail) cmp[p] = old;
      for (int p : dead_trail) dead[p] = 0;
    }
    a[depth] = -1;
    return true;
  }
};

}  // namespace

AllListsReport all_lists_feasibility(const Graph& g, const AutomorphismGroup& group, int k,
                                     int universe, std::uint64_t budget) {
  if (k < 1 || k > universe) fail(ErrorCode::InvalidInput, "need 1 <= k <= universe");
  AllListsReport rep;
  int m = g.edge_count();
  if (m == 0) return rep;
  if (group.trivial()) return rep;  // every colouring distinguishes, nothing to test

  auto subsets = k_subsets(universe, k);
  int S = static_cast<int>(subsets.size());
  auto sigmas = colour_perms(universe);
  auto eperms = edge_permutations(g, group, /*skip_identity=*/false);
  auto breaking_perms = edge_permutations(g, group, /*skip_identity=*/true);

  // subset relabeling table per colour permutation
  std::vector<std::vector<int>> subset_map(sigmas.size(), std::vector<int>(S));
  for (std::size_t si = 0; si < sigmas.size(); ++si) {
    for (int s = 0; s < S; ++s) {
      std::vector<ColourId> img;
      for (ColourId c : subsets[s]) img.push_back(sigmas[si][c]);
      std::sort(img.begin(), img.end());
      subset_map[si][s] =
          static_cast<int>(std::lower_bound(subsets.begin(), subsets.end(), img) - subsets.begin());
    }
  }

  OrderlyAssignments gen;
  gen.m = m;
  gen.subset_count = S;
  for (const auto& ep : eperms)
    for (std::size_t si = 0; si < sigmas.size(); ++si) {
      bool id_pair = si == 0;
      if (id_pair) {
        bool idp = true;
        for (int e = 0; e < m; ++e)
          if (ep[e] != e) {
            idp = false;
            break;
          }
        if (idp) continue;  // identity pair never prunes
      }
      gen.pair_edge_perm.push_back(ep);
      gen.pair_subset_map.push_back(subset_map[si]);
    }

  std::deque<std::vector<ColourId>> pool;  // recent witnesses
  std::uint64_t spent = 0;
  bool out_of_budget = false;

  gen.run([&](const std::vector<int>& a) {
    ++rep.assignments_tested;
    // pool fast path
    for (const auto& w : pool) {
      bool ok = true;
      for (int e = 0; e < m && ok; ++e)
        if (!std::binary_search(subsets[a[e]].begin(), subsets[a[e]].end(), w[e])) ok = false;
      if (ok) return true;  // feasible
    }
    if (spent >= budget) {
      out_of_budget = true;
      return false;
    }
    std::vector<std::vector<ColourId>> lists(m);
    for (int e = 0; e < m; ++e) lists[e] = subsets[a[e]];
    WitnessSearch s(lists, breaking_perms, budget - spent);
    std::vector<ColourId> witness;
    bool found = s.search(0, static_cast<int>(breaking_perms.size()), &witness);
    spent += s.nodes;
    if (s.exceeded) {
      out_of_budget = true;
      return false;
    }
    if (found) {
      pool.push_front(witness);
      if (pool.size() > 64) pool.pop_back();
    } else {
      rep.all_feasible = false;
      rep.infeasible_assignments.push_back(lists);
    }
    return true;
  });

  if (out_of_budget) fail(ErrorCode::BudgetExceeded, "assignment enumeration budget exhausted");
  return rep;
}

ConjectureProbe probe_conjecture(const Graph& g, int universe, std::uint64_t budget) {
  ConjectureProbe probe;
  auto group = automorphisms(g);
  int delta = g.max_degree();
  probe.dprime = distinguishing_index(g, group, std::max(delta + 1, 1), budget);
  if (probe.dprime > universe)
    fail(ErrorCode::InvalidInput, "universe smaller than the distinguishing index");
  auto rep = all_lists_feasibility(g, group, probe.dprime, universe, budget);
  probe.list_feasible_at_dprime = rep.all_feasible;
  probe.counterexample_lists = rep.infeasible_assignments;
  probe.assignments_tested = rep.assignments_tested;
  if (!rep.all_feasible) probe.known_exceptional = classify(g).is_exceptional();
  return probe;
}

}  // namespace listdist
