#include "listdist/engine_cyclic.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>

#include "listdist/oracle.hpp"
#include "listdist/recognizer.hpp"

namespace listdist {

namespace {

// ---------------------------------------------------------------- utilities

struct CycleView {
  std::vector<VertexId> verts;
  std::vector<EdgeId> eids;  // eids[i] joins verts[i] and verts[(i+1) % k]
  int k() const { return static_cast<int>(verts.size()); }
  int pos_of(VertexId v) const {
    for (int i = 0; i < k(); ++i)
      if (verts[i] == v) return i;
    return -1;
  }
};

CycleView make_view(const Graph& g, const std::vector<VertexId>& cycle) {
  CycleView cv;
  cv.verts = cycle;
  int k = static_cast<int>(cycle.size());
  cv.eids.resize(k);
  for (int i = 0; i < k; ++i) {
    EdgeId e = g.edge_id(cycle[i], cycle[(i + 1) % k]);
    if (e < 0) fail(ErrorCode::InvalidInput, "vertex sequence is not a cycle");
    cv.eids[i] = e;
  }
  return cv;
}

// rotate/flip so that the walk starts at `start` and continues with `next`
std::vector<VertexId> orient_cycle(const std::vector<VertexId>& cycle, VertexId start,
                                   VertexId next) {
  int k = static_cast<int>(cycle.size());
  int s = -1;
  for (int i = 0; i < k; ++i)
    if (cycle[i] == start) s = i;
  if (s < 0) fail(ErrorCode::InvalidInput, "start not on cycle");
  std::vector<VertexId> out;
  if (cycle[(s + 1) % k] == next)
    for (int i = 0; i < k; ++i) out.push_back(cycle[(s + i) % k]);
  else if (cycle[(s + k - 1) % k] == next)
    for (int i = 0; i < k; ++i) out.push_back(cycle[(s + k - i) % k]);
  else
    fail(ErrorCode::InvalidInput, "next not adjacent to start on cycle");
  return out;
}

struct Run {
  int start = 0;  // edge index into the view
  int len = 0;
};

std::vector<Run> pink_runs(const CycleView& cv, const EdgeColouring& col, ColourId pink) {
  int k = cv.k();
  std::vector<char> is_pink(k, 0);
  int pinks = 0;
  for (int i = 0; i < k; ++i)
    if (col.coloured(cv.eids[i]) && col.colour[cv.eids[i]] == pink) {
      is_pink[i] = 1;
      ++pinks;
    }
  std::vector<Run> runs;
  if (pinks == 0) return runs;
  if (pinks == k) {
    runs.push_back({0, k});
    return runs;
  }
  for (int i = 0; i < k; ++i) {
    if (!is_pink[i] || is_pink[(i + k - 1) % k]) continue;
    int len = 0;
    while (is_pink[(i + len) % k]) ++len;
    runs.push_back({i, len});
  }
  return runs;
}

bool pink_off_cycle_at(const Graph& g, const EdgeColouring& col,
                       const std::vector<char>& on_cycle, VertexId v, ColourId pink) {
  for (EdgeId e : g.incident_edges(v))
    if (!on_cycle[e] && col.coloured(e) && col.colour[e] == pink) return true;
  return false;
}

struct PatternInstance {
  std::vector<EdgeId> run_edges;
  bool gadget = false;
};

// completed copies of the protected pattern on this view
std::vector<PatternInstance> patterns_on_view(const Graph& g, const EdgeColouring& col,
                                              const CycleView& cv, const PatternSignature& sig) {
  std::vector<PatternInstance> out;
  int k = cv.k();
  if (k != sig.cycle_len) return out;
  std::vector<char> on_cycle(g.edge_count(), 0);
  for (EdgeId e : cv.eids) on_cycle[e] = 1;
  if (sig.blue_only()) {
    int nonpink = 0, at = -1;
    for (int i = 0; i < k; ++i) {
      EdgeId e = cv.eids[i];
      if (!col.coloured(e)) return out;
      if (col.colour[e] != sig.pink) {
        ++nonpink;
        at = i;
      }
    }
    if (nonpink != 1 || col.colour[cv.eids[at]] != sig.blue) return out;
    PatternInstance inst;
    for (int i = 0; i < k; ++i)
      if (i != at) inst.run_edges.push_back(cv.eids[i]);
    VertexId a = cv.verts[at], b = cv.verts[(at + 1) % k];
    inst.gadget = pink_off_cycle_at(g, col, on_cycle, a, sig.pink) ||
                  pink_off_cycle_at(g, col, on_cycle, b, sig.pink);
    out.push_back(std::move(inst));
    return out;
  }
  for (const Run& r : pink_runs(cv, col, sig.pink)) {
    if (r.len != sig.pink_run_len || r.len >= k) continue;
    EdgeId before = cv.eids[(r.start + k - 1) % k];
    EdgeId after = cv.eids[(r.start + r.len) % k];
    if (!col.coloured(before) || !col.coloured(after)) continue;
    ColourId cb = col.colour[before], ca = col.colour[after];
    VertexId blue_end;
    if (cb == sig.blue && ca == *sig.green)
      blue_end = cv.verts[r.start];
    else if (cb == *sig.green && ca == sig.blue)
      blue_end = cv.verts[(r.start + r.len) % k];
    else
      continue;
    PatternInstance inst;
    for (int i = 0; i < r.len; ++i) inst.run_edges.push_back(cv.eids[(r.start + i) % k]);
    inst.gadget = pink_off_cycle_at(g, col, on_cycle, blue_end, sig.pink);
    out.push_back(std::move(inst));
  }
  return out;
}

bool same_edge_set(std::vector<EdgeId> a, std::vector<EdgeId> b) {
  if (a.size() != b.size()) return false;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

// first lexicographic pairwise-distinct assignment over per-slot candidates
std::optional<std::vector<ColourId>> distinct_assignment(
    const std::vector<std::vector<ColourId>>& options,
    const std::function<bool(const std::vector<ColourId>&)>& check = nullptr) {
  std::vector<ColourId> chosen(options.size(), kUncoloured);
  std::function<bool(std::size_t)> go = [&](std::size_t i) -> bool {
    if (i == options.size()) return !check || check(chosen);
    for (ColourId c : options[i]) {
      bool used = false;
      for (std::size_t j = 0; j < i; ++j)
        if (chosen[j] == c) used = true;
      if (used) continue;
      chosen[i] = c;
      if (go(i + 1)) return true;
      chosen[i] = kUncoloured;
    }
    return false;
  };
  if (go(0)) return chosen;
  return std::nullopt;
}

}  // namespace

// ------------------------------------------------------- the colouring scheme

namespace {

struct SchemeRun {
  const Graph& g;
  const ListAssignment& L;
  SchemeContext& ctx;
  EdgeColouring& col;
  CycleView cv;
  std::vector<std::vector<EdgeId>> protected_runs;
  std::vector<char> on_cycle;
  bool relax_pin;  // last-resort mode: incident edges may repeat the cycle colour

  SchemeRun(const Graph& g_, const ListAssignment& L_, SchemeContext& ctx_, EdgeColouring& col_,
            CycleView cv_, std::vector<std::vector<EdgeId>> prot, bool relax)
      : g(g_), L(L_), ctx(ctx_), col(col_), cv(std::move(cv_)), protected_runs(std::move(prot)),
        relax_pin(relax) {
    on_cycle.assign(g.edge_count(), 0);
    for (EdgeId e : cv.eids) on_cycle[e] = 1;
  }

  bool is_protected(const std::vector<EdgeId>& run) const {
    for (const auto& p : protected_runs)
      if (same_edge_set(run, p)) return true;
    return false;
  }

  ColourId pink() const { return ctx.sig.pink; }

  bool creates_forbidden_pattern(EdgeId e, ColourId c) {
    ColourId saved = col.colour[e];
    col.colour[e] = c;
    bool bad = false;
    for (const auto& inst : patterns_on_view(g, col, cv, ctx.sig)) {
      if (is_protected(inst.run_edges)) continue;
      if (inst.gadget == ctx.sig.gadget) {
        bad = true;
        break;
      }
    }
    col.colour[e] = saved;
    return bad;
  }

  bool two_runs_two_nonpink_if_pink(EdgeId e) {
    ColourId saved = col.colour[e];
    col.colour[e] = pink();
    auto runs = pink_runs(cv, col, pink());
    int nonpink = 0;
    bool complete = true;
    for (EdgeId id : cv.eids) {
      if (!col.coloured(id))
        complete = false;
      else if (col.colour[id] != pink())
        ++nonpink;
    }
    col.colour[e] = saved;
    return complete && nonpink == 2 && runs.size() == 2 &&
           runs[0].len == ctx.sig.pink_run_len && runs[1].len == ctx.sig.pink_run_len;
  }

  void assign(EdgeId e, ColourId c, const char* rule, VertexId v) {
    col.colour[e] = c;
    if (ctx.trace) ctx.trace->add(rule, v, {{e, c}});
  }

  void first_pass() {
    std::vector<int> todo;
    for (int i = 0; i < cv.k(); ++i)
      if (!col.coloured(cv.eids[i])) todo.push_back(i);
    for (std::size_t t = 0; t < todo.size(); ++t) {
      int i = todo[t];
      EdgeId e = cv.eids[i];
      bool last = t + 1 == todo.size();
      if (L.contains(e, pink()) && !(last && two_runs_two_nonpink_if_pink(e))) {
        assign(e, pink(), "scheme-first-pink", cv.verts[i]);
        continue;
      }
      ColourId pick = kUncoloured;
      for (ColourId c : L.lists[e]) {
        if (c == pink() || creates_forbidden_pattern(e, c)) continue;
        pick = c;
        break;
      }
      if (pick == kUncoloured)
        fail(ErrorCode::SchemeStuck, "no admissible colour for a cycle edge");
      assign(e, pick, "scheme-first-nonpink", cv.verts[i]);
    }
  }

  // flank colour that would finish the pattern beside the run arriving at
  // view position i, when the vertex there ends a run of protected length
  ColourId dangerous_flank(int i) const {
    if (ctx.sig.blue_only()) return kUncoloured;
    int k = cv.k();
    EdgeId prev = cv.eids[(i + k - 1) % k];
    if (!col.coloured(prev) || col.colour[prev] != pink()) return kUncoloured;
    int len = 0;
    while (len < k) {
      EdgeId e = cv.eids[(i + 2 * k - 1 - len) % k];
      if (!col.coloured(e) || col.colour[e] != pink()) break;
      ++len;
    }
    if (len != ctx.sig.pink_run_len) return kUncoloured;
    EdgeId far = cv.eids[(i + 2 * k - 1 - len) % k];
    if (!col.coloured(far)) return kUncoloured;
    ColourId f = col.colour[far];
    if (f == ctx.sig.blue) return *ctx.sig.green;
    if (f == *ctx.sig.green) return ctx.sig.blue;
    return kUncoloured;
  }

  std::vector<EdgeId> uncoloured_offs(VertexId u) const {
    std::vector<EdgeId> out;
    for (EdgeId e : g.incident_edges(u))
      if (!on_cycle[e] && !col.coloured(e)) out.push_back(e);
    return out;
  }

  std::optional<std::vector<ColourId>> try_offs(const std::vector<EdgeId>& offs,
                                                const std::vector<ColourId>& forbidden) {
    std::vector<std::vector<ColourId>> options;
    for (EdgeId e : offs) {
      std::vector<ColourId> opt;
      for (ColourId c : L.lists[e])
        if (std::find(forbidden.begin(), forbidden.end(), c) == forbidden.end())
          opt.push_back(c);
      options.push_back(std::move(opt));
    }
    return distinct_assignment(options);
  }

  void place(const std::vector<EdgeId>& offs, const std::vector<ColourId>& chosen,
             const char* rule, VertexId u) {
    std::vector<std::pair<EdgeId, int>> rec;
    for (std::size_t i = 0; i < offs.size(); ++i) {
      col.colour[offs[i]] = chosen[i];
      rec.push_back({offs[i], chosen[i]});
    }
    if (ctx.trace) ctx.trace->add(rule, u, std::move(rec));
  }

  void second_pass() {
    for (int i = 0; i < cv.k(); ++i) {
      VertexId u = cv.verts[i];
      EdgeId enext = cv.eids[i];
      auto offs = uncoloured_offs(u);
      if (offs.empty()) continue;
      ColourId cnext = col.colour[enext];
      if (cnext == pink()) {
        auto got = try_offs(offs, {pink()});
        if (!got) fail(ErrorCode::SchemeStuck, "no distinct colours beside a pink cycle edge");
        place(offs, *got, "scheme-second-pink-side", u);
        continue;
      }
      ColourId q = dangerous_flank(i);
      std::vector<ColourId> forb{pink(), cnext};
      if (q != kUncoloured) forb.push_back(q);
      if (auto got = try_offs(offs, forb)) {
        place(offs, *got, "scheme-second", u);
        continue;
      }
      // forced to use the dangerous colour: move it onto the cycle edge
      // instead (the copy this may complete carries no pink tail)
      if (q != kUncoloured && !ctx.locked[enext] && L.contains(enext, q) &&
          !creates_forbidden_pattern(enext, q)) {
        ColourId saved = col.colour[enext];
        col.colour[enext] = q;
        if (auto got = try_offs(offs, {pink(), q})) {
          if (ctx.trace) ctx.trace->add("scheme-second-shift-flank", u, {{enext, q}});
          place(offs, *got, "scheme-second", u);
          continue;
        }
        col.colour[enext] = saved;
      }
      // re-pick the cycle edge so the incident edges become colourable
      bool done = false;
      if (!ctx.locked[enext]) {
        for (ColourId c2 : L.lists[enext]) {
          if (c2 == pink() || c2 == cnext) continue;
          if (creates_forbidden_pattern(enext, c2)) continue;
          std::vector<ColourId> f2{pink(), c2};
          ColourId q2 = dangerous_flank(i);
          if (q2 != kUncoloured && q2 != c2) f2.push_back(q2);
          if (auto got = try_offs(offs, f2)) {
            assign(enext, c2, "scheme-second-recolour", u);
            place(offs, *got, "scheme-second", u);
            done = true;
            break;
          }
        }
      }
      if (done) continue;
      // last resort, only in relaxed mode: let an incident edge repeat the
      // cycle colour; the verifier still gates the run
      if (relax_pin) {
        std::vector<ColourId> f3{pink()};
        if (q != kUncoloured) f3.push_back(q);
        if (auto got = try_offs(offs, f3)) {
          if (ctx.trace) ctx.trace->add("scheme-second-relaxed", u);
          place(offs, *got, "scheme-second", u);
          continue;
        }
        if (auto got = try_offs(offs, {pink()})) {
          bool pattern_ok = true;
          for (std::size_t oi = 0; oi < offs.size(); ++oi)
            if (creates_forbidden_pattern(offs[oi], (*got)[oi])) pattern_ok = false;
          if (pattern_ok) {
            if (ctx.trace) ctx.trace->add("scheme-second-relaxed", u);
            place(offs, *got, "scheme-second", u);
            continue;
          }
        }
      }
      fail(ErrorCode::SchemeStuck, "incident edges admit no distinct colours");
    }
  }
};

void run_scheme(const Graph& g, const ListAssignment& L, const PatternSignature& sig,
                const std::vector<EdgeId>& protected_run, const std::vector<VertexId>& cycle,
                EdgeColouring& col, Trace* trace, bool relax_pin = false) {
  SchemeContext ctx;
  ctx.g = &g;
  ctx.L = &L;
  ctx.sig = sig;
  ctx.trace = trace;
  ctx.locked.assign(g.edge_count(), 0);
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (col.coloured(e)) ctx.locked[e] = 1;
  SchemeRun run(g, L, ctx, col, make_view(g, cycle), {protected_run}, relax_pin);
  run.first_pass();
  run.second_pass();
}

}  // namespace

void cycle_colouring_scheme(SchemeContext& ctx, const std::vector<VertexId>& cycle_in_order,
                            EdgeColouring& col) {
  if (!ctx.g || !ctx.L) fail(ErrorCode::InvalidInput, "scheme context not initialised");
  if (static_cast<int>(ctx.locked.size()) != ctx.g->edge_count())
    ctx.locked.assign(ctx.g->edge_count(), 0);
  CycleView cv = make_view(*ctx.g, cycle_in_order);
  // patterns already complete at entry are pre-existing, not the scheme's doing
  std::vector<std::vector<EdgeId>> prot;
  for (const auto& inst : patterns_on_view(*ctx.g, col, cv, ctx.sig))
    prot.push_back(inst.run_edges);
  SchemeRun run(*ctx.g, *ctx.L, ctx, col, std::move(cv), std::move(prot), false);
  run.first_pass();
  run.second_pass();
}

// --------------------------------------------------- the starting subgraph

namespace {

struct StartBuilder {
  const Graph& g;
  const ListAssignment& L;
  const CyclicEngineOptions& opt;
  const AutomorphismGroup& group;

  // distinct non-pink colours on the off edges at every listed vertex; an
  // edge with both endpoints listed obeys both constraints
  bool solve_offs(EdgeColouring& col, const std::vector<char>& structural,
                  const std::vector<VertexId>& vertex_order, ColourId pink,
                  const std::function<bool()>& validate) const {
    std::set<VertexId> owners(vertex_order.begin(), vertex_order.end());
    std::vector<EdgeId> vars;
    std::set<EdgeId> seen;
    for (VertexId v : vertex_order)
      for (EdgeId e : g.incident_edges(v))
        if (!structural[e] && !col.coloured(e) && !seen.count(e)) {
          seen.insert(e);
          vars.push_back(e);
        }
    auto ok_at = [&](VertexId v, EdgeId e, ColourId c) {
      if (!owners.count(v)) return true;
      for (EdgeId other : g.incident_edges(v))
        if (other != e && !structural[other] && col.coloured(other) && col.colour[other] == c)
          return false;
      return true;
    };
    std::function<bool(std::size_t)> go = [&](std::size_t i) -> bool {
      if (i == vars.size()) return !validate || validate();
      EdgeId e = vars[i];
      for (ColourId c : L.lists[e]) {
        if (c == pink) continue;
        if (!ok_at(g.edge(e).u, e, c) || !ok_at(g.edge(e).v, e, c)) continue;
        col.colour[e] = c;
        if (go(i + 1)) return true;
        col.colour[e] = kUncoloured;
      }
      return false;
    };
    return go(0);
  }

  bool rigid(const EdgeColouring& col, const std::vector<VertexId>& g0v) const {
    auto stab = colour_preserving_stabilizer(g, group, col);
    for (const auto& a : stab.elements)
      for (VertexId x : g0v)
        if (a[x] != x) return false;
    return true;
  }

  // ---------------- case 1: a colour subgraph with a cycle

  std::optional<StartingState> try_case1(ColourId pink) const {
    std::vector<char> hp(g.edge_count(), 0);
    for (EdgeId e = 0; e < g.edge_count(); ++e)
      if (L.contains(e, pink)) hp[e] = 1;
    auto cycle_opt = find_induced_cycle(g, &hp);
    if (!cycle_opt) return std::nullopt;
    std::vector<VertexId> cycle = *cycle_opt;
    CycleView cv = make_view(g, cycle);

    // distances within the colour subgraph from the cycle
    std::vector<int> dist(g.vertex_count(), -1);
    std::vector<VertexId> par(g.vertex_count(), -1);
    std::deque<VertexId> q;
    for (VertexId v : cycle) {
      dist[v] = 0;
      q.push_back(v);
    }
    while (!q.empty()) {
      VertexId x = q.front();
      q.pop_front();
      for (EdgeId e : g.incident_edges(x)) {
        if (!hp[e]) continue;
        VertexId w = g.edge(e).u == x ? g.edge(e).v : g.edge(e).u;
        if (dist[w] < 0) {
          dist[w] = dist[x] + 1;
          par[w] = x;
          q.push_back(w);
        }
      }
    }
    VertexId v = -1;
    for (VertexId x = 0; x < g.vertex_count(); ++x) {
      if (dist[x] < 0) continue;
      bool outside = false;
      for (EdgeId e : g.incident_edges(x))
        if (!hp[e]) outside = true;
      if (!outside) continue;
      if (v < 0 || dist[x] < dist[v]) v = x;
    }
    if (v < 0) return std::nullopt;
    std::vector<VertexId> path;  // v .. u within the colour subgraph
    for (VertexId x = v; x != -1; x = par[x]) path.push_back(x);
    VertexId u = path.back();

    int upos = cv.pos_of(u);
    VertexId nbr1 = cv.verts[(upos + 1) % cv.k()];
    VertexId nbr2 = cv.verts[(upos + cv.k() - 1) % cv.k()];
    std::vector<VertexId> uplus_choices{std::min(nbr1, nbr2), std::max(nbr1, nbr2)};
    if (uplus_choices[0] == uplus_choices[1]) uplus_choices.pop_back();

    for (VertexId u_plus : uplus_choices) {
      EdgeId blue_edge = g.edge_id(u, u_plus);
      for (ColourId blue : L.lists[blue_edge]) {
        if (blue == pink) continue;
        auto state = attempt_case1(pink, cycle, cv, path, u, u_plus, blue_edge, blue);
        if (state) return state;
      }
    }
    return std::nullopt;
  }

  std::optional<StartingState> attempt_case1(ColourId pink, const std::vector<VertexId>& cycle,
                                             const CycleView& cv,
                                             const std::vector<VertexId>& path, VertexId u,
                                             VertexId u_plus, EdgeId blue_edge,
                                             ColourId blue) const {
    EdgeColouring col(g.edge_count());
    std::vector<char> structural(g.edge_count(), 0);
    for (EdgeId e : cv.eids) {
      structural[e] = 1;
      col.colour[e] = e == blue_edge ? blue : pink;
    }
    std::vector<EdgeId> tail_edges;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      EdgeId e = g.edge_id(path[i], path[i + 1]);
      structural[e] = 1;
      col.colour[e] = pink;
      tail_edges.push_back(e);
    }

    VertexId v = path.front();
    std::vector<VertexId> g0v = cycle;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) g0v.push_back(path[i]);
    std::sort(g0v.begin(), g0v.end());
    g0v.erase(std::unique(g0v.begin(), g0v.end()), g0v.end());

    // does some automorphism move the coloured skeleton onto itself
    // non-trivially? then split the palettes of v and u_plus
    bool tie = false;
    {
      std::set<EdgeId> skel;
      for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (structural[e]) skel.insert(e);
      for (const auto& a : group.elements) {
        bool stab = true;
        for (EdgeId e : skel) {
          EdgeId im = edge_image_id(g, a, e);
          if (!skel.count(im) || col.colour[im] != col.colour[e]) {
            stab = false;
            break;
          }
        }
        if (!stab) continue;
        for (VertexId x : g0v)
          if (a[x] != x) {
            tie = true;
            break;
          }
        if (tie) break;
      }
    }

    std::vector<VertexId> order;
    for (VertexId x : g0v)
      if (!tie || x != v) order.push_back(x);
    std::function<bool()> validate;
    if (tie) {
      order.push_back(v);
      VertexId vv = v, uu = u_plus;
      validate = [this, &col, vv, uu]() {
        return palette(g, col, vv) != palette(g, col, uu);
      };
    }
    if (!solve_offs(col, structural, order, pink, validate)) return std::nullopt;
    if (!rigid(col, g0v)) return std::nullopt;

    StartingState s;
    s.cycle = cycle;
    s.attached_path = path.size() > 1 ? path : std::vector<VertexId>{};
    s.pink = pink;
    s.blue = blue;
    s.green.reset();
    s.pink_path_length = cv.k() - 1;
    s.case_used = 1;
    if (!tail_edges.empty()) s.gadget = g.edge_id(path[path.size() - 2], u);
    s.signature =
        PatternSignature{cv.k(), cv.k() - 1, pink, blue, std::nullopt, !tail_edges.empty()};
    for (EdgeId e = 0; e < g.edge_count(); ++e)
      if (col.coloured(e)) s.g0_edges.push_back(e);
    s.colouring = col;
    if (opt.trace) opt.trace->add(tie ? "g0-case1-palette-split" : "g0-case1", u);
    return s;
  }

  // ---------------- case 2: every colour subgraph is a forest

  struct Candidate {
    int len = 0;
    bool tail = false;
    std::size_t ci = 0;
    ColourId p = -1;
    int start = 0;
  };

  int hp_degree(ColourId p, VertexId x) const {
    int d = 0;
    for (EdgeId e : g.incident_edges(x))
      if (L.contains(e, p)) ++d;
    return d;
  }

  std::optional<StartingState> try_case2(const ListClassification& cl) const {
    auto cycles = enumerate_induced_cycles(g, opt.cycle_budget);
    if (cycles.empty()) return std::nullopt;
    std::vector<char> nontrivial(L.universe, 0);
    for (ColourId c : cl.nontrivial_colours) nontrivial[c] = 1;

    std::vector<Candidate> cands;
    for (std::size_t ci = 0; ci < cycles.size(); ++ci) {
      CycleView cv = make_view(g, cycles[ci]);
      int k = cv.k();
      std::set<ColourId> colours_here;
      for (EdgeId e : cv.eids)
        for (ColourId c : L.lists[e])
          if (nontrivial[c]) colours_here.insert(c);
      for (ColourId p : colours_here) {
        std::vector<char> has(k, 0);
        int count = 0;
        for (int i = 0; i < k; ++i)
          if (L.contains(cv.eids[i], p)) {
            has[i] = 1;
            ++count;
          }
        if (count == 0 || count == k) continue;
        int longest = 0;
        for (int i = 0; i < k; ++i) {
          if (!has[i] || has[(i + k - 1) % k]) continue;
          int len = 0;
          while (has[(i + len) % k]) ++len;
          longest = std::max(longest, len);
        }
        for (int i = 0; i < k; ++i) {
          if (!has[i] || has[(i + k - 1) % k]) continue;
          int len = 0;
          while (has[(i + len) % k]) ++len;
          if (len != longest) continue;
          VertexId e1 = cv.verts[i], e2 = cv.verts[(i + len) % k];
          bool tail = hp_degree(p, e1) >= 2 || hp_degree(p, e2) >= 2;
          cands.push_back({len, tail, ci, p, i});
        }
      }
    }
    std::stable_sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
      if (a.len != b.len) return a.len > b.len;
      if (a.tail != b.tail) return a.tail;
      if (a.ci != b.ci) return a.ci < b.ci;
      if (a.p != b.p) return a.p < b.p;
      return a.start < b.start;
    });

    std::size_t attempts = 0;
    for (const Candidate& cand : cands) {
      if (attempts > 4000) break;
      auto state = try_case2_candidate(cycles[cand.ci], cand, attempts);
      if (state) return state;
    }
    return std::nullopt;
  }

  std::optional<StartingState> try_case2_candidate(const std::vector<VertexId>& cycle,
                                                   const Candidate& cand,
                                                   std::size_t& attempts) const {
    CycleView cv = make_view(g, cycle);
    int k = cv.k();
    ColourId pink = cand.p;
    int len = cand.len;
    VertexId end1 = cv.verts[cand.start];
    VertexId end2 = cv.verts[(cand.start + len) % k];
    std::vector<EdgeId> run_edges;
    for (int i = 0; i < len; ++i) run_edges.push_back(cv.eids[(cand.start + i) % k]);
    int cmp = k - len;

    bool tail1 = hp_degree(pink, end1) >= 2;
    bool tail2 = hp_degree(pink, end2) >= 2;
    VertexId u, vend;
    if (tail1 == tail2) {
      u = std::min(end1, end2);
      vend = std::max(end1, end2);
    } else if (tail1) {
      u = end1;
      vend = end2;
    } else {
      u = end2;
      vend = end1;
    }
    // the single-edge subcase with mixed degrees keeps the higher-degree
    // endpoint as u (no tail exists at a degree-two vertex)
    if (cmp == 1) {
      int du = g.degree(u), dv = g.degree(vend);
      bool mixed = (du == 2) != (dv == 2);
      if (mixed && du == 2) std::swap(u, vend);
    }

    auto edge_at = [&](VertexId x) {
      int pos = cv.pos_of(x);
      EdgeId fwd = cv.eids[pos];
      EdgeId bwd = cv.eids[(pos + k - 1) % k];
      bool fwd_in_run = std::find(run_edges.begin(), run_edges.end(), fwd) != run_edges.end();
      return std::pair<EdgeId, EdgeId>{fwd_in_run ? fwd : bwd, fwd_in_run ? bwd : fwd};
    };
    auto [u_run_edge, u_flank] = edge_at(u);
    auto [v_run_edge, v_flank] = edge_at(vend);
    (void)v_run_edge;

    int du = g.degree(u), dv = g.degree(vend);

    // enumerate the flank colour choices for this candidate
    if (cmp >= 2) {
      for (ColourId blue : L.lists[u_flank]) {
        if (blue == pink) continue;
        for (ColourId green : L.lists[v_flank]) {
          if (green == pink || green == blue) continue;
          ++attempts;
          auto st = attempt_case2(cycle, cv, cand, run_edges, u, vend, cmp, u_run_edge, u_flank,
                                  v_flank, blue, green);
          if (st) return st;
        }
      }
      return std::nullopt;
    }
    EdgeId uv = u_flank;  // the single edge outside the run joins u and vend
    if (du >= 3 && dv >= 3) {
      for (ColourId blue : L.lists[uv]) {
        if (blue == pink) continue;
        ++attempts;
        auto st = attempt_case2(cycle, cv, cand, run_edges, u, vend, cmp, u_run_edge, u_flank,
                                v_flank, blue, kUncoloured);
        if (st) return st;
      }
      return std::nullopt;
    }
    if (du == 2 && dv == 2) {
      for (ColourId blue : L.lists[u_run_edge]) {
        if (blue == pink) continue;
        for (ColourId green : L.lists[uv]) {
          if (green == pink || green == blue) continue;
          ++attempts;
          auto st = attempt_case2(cycle, cv, cand, run_edges, u, vend, cmp, u_run_edge, u_flank,
                                  v_flank, blue, green);
          if (st) return st;
        }
      }
      return std::nullopt;
    }
    for (ColourId blue : L.lists[uv]) {  // mixed degrees
      if (blue == pink) continue;
      ++attempts;
      auto st = attempt_case2(cycle, cv, cand, run_edges, u, vend, cmp, u_run_edge, u_flank,
                              v_flank, blue, kUncoloured);
      if (st) return st;
    }
    return std::nullopt;
  }

  std::optional<StartingState> attempt_case2(const std::vector<VertexId>& cycle,
                                             const CycleView& cv, const Candidate& cand,
                                             const std::vector<EdgeId>& run_edges, VertexId u,
                                             VertexId vend, int cmp, EdgeId u_run_edge,
                                             EdgeId u_flank, EdgeId v_flank, ColourId blue,
                                             ColourId green) const {
    int k = cv.k();
    ColourId pink = cand.p;
    EdgeColouring col(g.edge_count());
    std::vector<char> structural(g.edge_count(), 0);
    for (EdgeId e : run_edges) {
      col.colour[e] = pink;
      structural[e] = 1;
    }

    // pink tail: maximal greedy path in the colour subgraph from u, off the cycle
    std::vector<char> on_c(g.vertex_count(), 0);
    for (VertexId x : cv.verts) on_c[x] = 1;
    std::vector<VertexId> tail{u};
    std::vector<EdgeId> tail_edges;
    if (hp_degree(pink, u) >= 2) {
      VertexId at = u;
      std::vector<char> used(g.vertex_count(), 0);
      used[u] = 1;
      for (;;) {
        VertexId next = -1;
        for (VertexId w : g.neighbours(at)) {
          EdgeId e = g.edge_id(at, w);
          if (!L.contains(e, pink) || structural[e] || on_c[w] || used[w]) continue;
          next = w;
          break;
        }
        if (next < 0) break;
        EdgeId e = g.edge_id(at, next);
        col.colour[e] = pink;
        structural[e] = 1;
        tail_edges.push_back(e);
        tail.push_back(next);
        used[next] = 1;
        at = next;
      }
    }

    StartingState s;
    s.cycle = cycle;
    s.attached_path = tail.size() > 1 ? tail : std::vector<VertexId>{};
    s.pink = pink;
    s.case_used = 2;
    if (!tail_edges.empty()) s.gadget = tail_edges.front();

    std::function<bool()> validate;
    std::vector<VertexId> off_order;

    if (cmp >= 2) {
      if (L.contains(u_flank, pink) || L.contains(v_flank, pink)) return std::nullopt;
      col.colour[u_flank] = blue;
      col.colour[v_flank] = green;
      structural[u_flank] = structural[v_flank] = 1;
      s.blue = blue;
      s.green = green;
      s.pink_path_length = cand.len;
      s.signature = PatternSignature{k, cand.len, pink, blue, green, !tail_edges.empty()};
    } else {
      EdgeId uv = u_flank;
      int du = g.degree(u), dv = g.degree(vend);
      if (du >= 3 && dv >= 3) {
        col.colour[uv] = blue;
        structural[uv] = 1;
        s.blue = blue;
        s.green.reset();
        s.pink_path_length = cand.len;
        s.signature = PatternSignature{k, cand.len, pink, blue, std::nullopt, !tail_edges.empty()};
        if (tail_edges.empty()) {
          for (VertexId x : {u, vend})
            for (EdgeId e : g.incident_edges(x))
              if (!structural[e] && L.contains(e, pink)) return std::nullopt;
          VertexId a = u, b = vend;
          validate = [this, &col, a, b]() { return palette(g, col, a) != palette(g, col, b); };
          off_order = {std::min(a, b), std::max(a, b)};
        }
      } else if (du == 2 && dv == 2) {
        col.colour[u_run_edge] = blue;  // recolour the path edge at u
        col.colour[uv] = green;
        structural[uv] = 1;
        s.blue = blue;
        s.green = green;
        s.pink_path_length = cand.len - 1;
        s.signature = PatternSignature{k, cand.len - 1, pink, blue, green, false};
      } else {
        col.colour[uv] = blue;
        structural[uv] = 1;
        s.blue = blue;
        s.green.reset();
        s.pink_path_length = cand.len;
        s.signature = PatternSignature{k, cand.len, pink, blue, std::nullopt, !tail_edges.empty()};
      }
    }

    for (std::size_t i = 1; i < tail.size(); ++i) off_order.push_back(tail[i]);
    if (!off_order.empty() || validate) {
      if (!solve_offs(col, structural, off_order, pink, validate)) return std::nullopt;
    }

    std::vector<EdgeId> prot;
    for (EdgeId e : cv.eids)
      if (col.colour[e] == pink) prot.push_back(e);

    VertexId next_on_run =
        g.edge(u_run_edge).u == u ? g.edge(u_run_edge).v : g.edge(u_run_edge).u;
    auto oriented = orient_cycle(cycle, u, next_on_run);
    try {
      run_scheme(g, L, s.signature, prot, oriented, col, opt.trace);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::SchemeStuck) return std::nullopt;
      throw;
    }

    std::vector<VertexId> g0v = cv.verts;
    for (std::size_t i = 1; i < tail.size(); ++i) g0v.push_back(tail[i]);
    std::set<VertexId> g0set(g0v.begin(), g0v.end());
    for (EdgeId e = 0; e < g.edge_count(); ++e)
      if ((g0set.count(g.edge(e).u) || g0set.count(g.edge(e).v)) && !col.coloured(e))
        return std::nullopt;
    if (!rigid(col, g0v)) return std::nullopt;

    for (EdgeId e = 0; e < g.edge_count(); ++e)
      if (col.coloured(e)) s.g0_edges.push_back(e);
    s.colouring = col;
    if (opt.trace) opt.trace->add("g0-case2", u);
    return s;
  }
};

}  // namespace

StartingState build_starting_subgraph(const Graph& g, const ListAssignment& L,
                                      const CyclicEngineOptions& opt) {
  auto cl = classify_lists(g, L);
  if (cl.all_identical) fail(ErrorCode::NotApplicable, "identical lists");
  AutomorphismGroup local;
  if (!opt.group) local = automorphisms(g, opt.aut_cap);
  const AutomorphismGroup& group = opt.group ? *opt.group : local;
  StartBuilder b{g, L, opt, group};
  if (!cl.cyclic_nontrivial_colours.empty()) {
    for (ColourId p : cl.cyclic_nontrivial_colours) {
      auto s = b.try_case1(p);
      if (s) return *s;
    }
    fail(ErrorCode::Infeasible, "no rigid starting subgraph from any cyclic colour");
  }
  auto s = b.try_case2(cl);
  if (!s) fail(ErrorCode::Infeasible, "no rigid starting subgraph from any forest colour");
  return *s;
}

// ----------------------------------------------------- the iterative procedure

namespace {

struct Extender {
  const Graph& g;
  const ListAssignment& L;
  const StartingState& s;
  const CyclicEngineOptions& opt;
  const AutomorphismGroup* group;
  EdgeColouring col;
  int k;
  int delta;
  std::vector<char> in_g0_vertex;
  std::vector<int> dist_g0;
  std::vector<EdgeId> protected_run;
  std::map<EdgeId, bool> on_k_cycle_mode;
  std::map<EdgeId, bool> on_k_cycle_induced;

  Extender(const Graph& g_, const ListAssignment& L_, const StartingState& s_,
           const CyclicEngineOptions& opt_, const AutomorphismGroup* grp)
      : g(g_), L(L_), s(s_), opt(opt_), group(grp), col(s_.colouring),
        k(s_.signature.cycle_len), delta(g_.max_degree()) {
    in_g0_vertex.assign(g.vertex_count(), 0);
    std::vector<VertexId> g0v = s.cycle;
    for (VertexId x : s.attached_path) g0v.push_back(x);
    for (VertexId x : g0v) in_g0_vertex[x] = 1;
    auto bfs = bfs_order(g, g0v);
    dist_g0 = bfs.dist;
    CycleView cv = make_view(g, s.cycle);
    for (EdgeId e : cv.eids)
      if (col.colour[e] == s.signature.pink) protected_run.push_back(e);
  }

  bool on_cycle_k(EdgeId e, bool induced) {
    auto& memo = induced ? on_k_cycle_induced : on_k_cycle_mode;
    auto it = memo.find(e);
    if (it != memo.end()) return it->second;
    bool r = edge_on_cycle_of_length(g, e, k, induced);
    return memo[e] = r;
  }
  bool on_cycle_k_mode(EdgeId e) { return on_cycle_k(e, opt.cycle_tests_induced); }

  void note(const char* rule, VertexId v, std::vector<std::pair<EdgeId, int>> rec = {}) {
    if (opt.trace) opt.trace->add(rule, v, std::move(rec));
  }

  std::vector<char> reached_mask() const {
    std::vector<char> r(g.vertex_count(), 0);
    for (EdgeId e = 0; e < g.edge_count(); ++e)
      if (col.coloured(e)) {
        r[g.edge(e).u] = 1;
        r[g.edge(e).v] = 1;
      }
    return r;
  }

  void colour_forwards(VertexId v, const std::vector<EdgeId>& fwd) {
    std::vector<std::vector<ColourId>> nopink(fwd.size());
    for (std::size_t i = 0; i < fwd.size(); ++i)
      for (ColourId c : L.lists[fwd[i]])
        if (c != s.signature.pink) nopink[i].push_back(c);
    if (auto got = distinct_assignment(nopink)) {
      record(fwd, *got, "extend-forwards", v);
      return;
    }
    for (std::size_t pi = 0; pi < fwd.size(); ++pi) {
      if (on_cycle_k_mode(fwd[pi])) continue;
      std::vector<std::vector<ColourId>> options = nopink;
      options[pi] = L.lists[fwd[pi]];
      if (auto got = distinct_assignment(options)) {
        record(fwd, *got, "extend-forwards-pink-offcycle", v);
        return;
      }
    }
    std::vector<std::vector<ColourId>> any(fwd.size());
    for (std::size_t i = 0; i < fwd.size(); ++i) any[i] = L.lists[fwd[i]];
    if (auto got = distinct_assignment(any)) {
      record(fwd, *got, "extend-forwards-any", v);
      return;
    }
    fail(ErrorCode::ExtensionStuck,
         "forward edges admit no distinct colours at vertex " + std::to_string(v));
  }

  void colour_horizontals(VertexId v, const std::vector<EdgeId>& hor) {
    std::vector<std::pair<EdgeId, int>> rec;
    for (EdgeId e : hor) {
      ColourId pick = kUncoloured;
      for (ColourId c : L.lists[e])
        if (c != s.signature.pink) {
          pick = c;
          break;
        }
      if (pick == kUncoloured) fail(ErrorCode::ExtensionStuck, "no non-pink colour available");
      col.colour[e] = pick;
      rec.push_back({e, pick});
    }
    if (!rec.empty()) note("extend-horizontals", v, std::move(rec));
  }

  void record(const std::vector<EdgeId>& edges, const std::vector<ColourId>& chosen,
              const char* rule, VertexId v) {
    std::vector<std::pair<EdgeId, int>> rec;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      col.colour[edges[i]] = chosen[i];
      rec.push_back({edges[i], chosen[i]});
    }
    note(rule, v, std::move(rec));
  }

  bool copy_present(const CycleView& cv) const {
    int nonpink = 0, at = -1;
    for (int i = 0; i < cv.k(); ++i) {
      if (!col.coloured(cv.eids[i])) return false;
      if (col.colour[cv.eids[i]] != s.signature.pink) {
        ++nonpink;
        at = i;
      }
    }
    return nonpink == 1 && col.colour[cv.eids[at]] == s.signature.blue;
  }

  bool move_is_safe(const CycleView& cv, EdgeId e, ColourId c) {
    ColourId saved = col.colour[e];
    col.colour[e] = c;
    bool ok = !copy_present(cv);
    if (ok) {
      for (const auto& inst : patterns_on_view(g, col, cv, s.signature)) {
        if (same_edge_set(inst.run_edges, protected_run)) continue;
        if (inst.gadget == s.signature.gadget) ok = false;
      }
    }
    col.colour[e] = saved;
    return ok;
  }

  // identical-copy exception after a scheme run on a full-cycle pattern:
  // recolour the blue edge, or failing that one of the pink edges
  void fix_identical_copy(const std::vector<VertexId>& cycle) {
    if (!s.signature.blue_only()) return;
    CycleView cv = make_view(g, cycle);
    if (!copy_present(cv)) return;
    int at = -1;
    for (int i = 0; i < cv.k(); ++i)
      if (col.colour[cv.eids[i]] != s.signature.pink) at = i;
    EdgeId eb = cv.eids[at];
    std::vector<std::pair<EdgeId, ColourId>> moves;
    for (ColourId c : L.lists[eb])
      if (c != s.signature.blue && c != s.signature.pink) moves.push_back({eb, c});
    for (EdgeId e : cv.eids)
      if (e != eb)
        for (ColourId c : L.lists[e])
          if (c != s.signature.pink) moves.push_back({e, c});
    if (L.contains(eb, s.signature.pink)) moves.push_back({eb, s.signature.pink});
    for (auto [e, c] : moves) {
      if (!move_is_safe(cv, e, c)) continue;
      col.colour[e] = c;
      note("extend-identical-copy-recolour", g.edge(e).u, {{e, c}});
      return;
    }
    fail(ErrorCode::ExtensionStuck, "cannot break an identical copy");
  }

  void debug_checks() {
    if (!opt.debug_invariants || !group) return;
    auto reached = reached_mask();
    auto stab = colour_preserving_stabilizer(g, *group, col);
    for (const auto& a : stab.elements)
      for (VertexId x = 0; x < g.vertex_count(); ++x)
        if (reached[x] && a[x] != x)
          fail(ErrorCode::ExtensionStuck, "a reached vertex is not fixed (A1)");
    for (VertexId x = 0; x < g.vertex_count(); ++x) {
      if (in_g0_vertex[x] || !reached[x]) continue;
      EdgeId only = -1;
      int cnt = 0;
      for (EdgeId e : g.incident_edges(x))
        if (col.coloured(e)) {
          only = e;
          ++cnt;
        }
      if (cnt == 1 && col.colour[only] == s.signature.pink && on_cycle_k_mode(only))
        fail(ErrorCode::ExtensionStuck, "a lone pink edge lies on a length-k cycle (A2)");
    }
  }

  EdgeColouring run() {
    debug_checks();
    for (;;) {
      auto reached = reached_mask();
      VertexId v = -1;
      for (VertexId x = 0; x < g.vertex_count(); ++x) {
        if (!reached[x]) continue;
        bool unc = false;
        for (EdgeId e : g.incident_edges(x))
          if (!col.coloured(e)) unc = true;
        if (!unc) continue;
        if (v < 0 || dist_g0[x] < dist_g0[v] || (dist_g0[x] == dist_g0[v] && x < v)) v = x;
      }
      if (v < 0) break;
      step(v, reached);
      debug_checks();
    }
    if (!col.total()) fail(ErrorCode::ExtensionStuck, "edges left uncoloured");
    return col;
  }

  // one execution of the length-k cycle branch on a chosen cycle; throws
  // SchemeStuck/ExtensionStuck when this particular choice cannot be finished
  void cycle_branch(VertexId v, EdgeId back_edge, const std::vector<VertexId>& cprime,
                    const std::vector<EdgeId>& forward, bool swap_pair) {
    CycleView cpv = make_view(g, cprime);
    bool back_on = false;
    for (EdgeId e : cpv.eids)
      if (e == back_edge) back_on = true;

    if (back_on) {
      if (col.colour[back_edge] == s.signature.pink)
        fail(ErrorCode::ExtensionStuck, "pink back edge on a length-k cycle");
      EdgeId fstar = -1;
      for (EdgeId e : cpv.eids)
        if (e != back_edge && (g.edge(e).u == v || g.edge(e).v == v)) fstar = e;
      if (fstar < 0) fail(ErrorCode::ExtensionStuck, "cycle misses the frontier vertex");
      VertexId nxt = g.edge(fstar).u == v ? g.edge(fstar).v : g.edge(fstar).u;
      auto oriented = orient_cycle(cprime, v, nxt);
      run_scheme(g, L, s.signature, protected_run, oriented, col, opt.trace);
      fix_identical_copy(cprime);
      note("extend-back-edge-cycle", v);
      return;
    }

    EdgeId f1 = -1, f2 = -1;
    for (EdgeId e : cpv.eids)
      if (g.edge(e).u == v || g.edge(e).v == v) (f1 < 0 ? f1 : f2) = e;
    if (f2 < 0) fail(ErrorCode::ExtensionStuck, "cycle misses the second frontier edge");
    if ((f1 > f2) != swap_pair) std::swap(f1, f2);
    std::vector<EdgeId> others;
    for (EdgeId f : forward)
      if (f != f1 && f != f2) others.push_back(f);

    bool special = delta == 3 && L.lists[f1].size() == 2 &&
                   L.contains(f1, s.signature.pink) && L.contains(f1, s.signature.blue) &&
                   L.lists[f2] == L.lists[f1];
    if (!special) {
      std::vector<std::vector<ColourId>> opts(others.size());
      for (std::size_t i = 0; i < others.size(); ++i)
        for (ColourId c : L.lists[others[i]])
          if (c != s.signature.pink && c != s.signature.blue) opts[i].push_back(c);
      auto got = distinct_assignment(opts);
      if (!got) fail(ErrorCode::ExtensionStuck, "other forward edges admit no distinct colours");
      record(others, *got, "extend-two-forwards-others", v);
      col.colour[f1] = s.signature.pink;
      ColourId cf2 = kUncoloured;
      ColourId fallback = kUncoloured;
      for (ColourId c : L.lists[f2]) {
        if (c == s.signature.pink || c == s.signature.blue) continue;
        if (std::find(got->begin(), got->end(), c) == got->end()) {
          cf2 = c;
          break;
        }
        if (fallback == kUncoloured) fallback = c;
      }
      if (cf2 == kUncoloured) cf2 = fallback;
      if (cf2 == kUncoloured)
        fail(ErrorCode::ExtensionStuck, "no colour besides pink and blue on the second edge");
      col.colour[f2] = cf2;
      note("extend-two-forwards", v, {{f1, s.signature.pink}, {f2, cf2}});
    } else {
      col.colour[f1] = s.signature.pink;
      col.colour[f2] = s.signature.pink;
      note("extend-two-forwards-special", v, {{f1, s.signature.pink}, {f2, s.signature.pink}});
      VertexId nxt0 = g.edge(f1).u == v ? g.edge(f1).v : g.edge(f1).u;
      auto oriented0 = orient_cycle(cprime, v, nxt0);
      CycleView ov = make_view(g, oriented0);
      int i = 1;
      while (i < ov.k() - 1 && !col.coloured(ov.eids[i]) &&
             L.contains(ov.eids[i], s.signature.pink)) {
        col.colour[ov.eids[i]] = s.signature.pink;
        ++i;
      }
      int j = ov.k() - 2;
      while (j >= i && !col.coloured(ov.eids[j]) && L.contains(ov.eids[j], s.signature.pink)) {
        col.colour[ov.eids[j]] = s.signature.pink;
        --j;
      }
      std::vector<EdgeId> boundary;
      if (i <= j) {
        boundary.push_back(ov.eids[i]);
        if (j != i) boundary.push_back(ov.eids[j]);
      }
      bool have_nonblue = false;
      for (EdgeId e : boundary)
        if (col.coloured(e) && col.colour[e] != s.signature.blue) have_nonblue = true;
      for (EdgeId e : boundary) {
        if (col.coloured(e)) continue;
        ColourId pick = kUncoloured;
        for (ColourId c : L.lists[e])
          if (c != s.signature.blue) {
            pick = c;
            break;
          }
        if (pick == kUncoloured && have_nonblue) pick = L.lists[e].front();
        if (pick == kUncoloured)
          fail(ErrorCode::ExtensionStuck, "cannot keep a non-blue edge beside the pink run");
        col.colour[e] = pick;
        if (pick != s.signature.blue) have_nonblue = true;
      }
      if (!boundary.empty() && !have_nonblue)
        fail(ErrorCode::ExtensionStuck, "both run boundaries are blue");
    }
    VertexId nxt = g.edge(f1).u == v ? g.edge(f1).v : g.edge(f1).u;
    auto oriented = orient_cycle(cprime, v, nxt);
    run_scheme(g, L, s.signature, protected_run, oriented, col, opt.trace);
    fix_identical_copy(cprime);
    if (col.colour[f1] == col.colour[f2]) {
      // equal colours on the two frontier edges leave their far endpoints
      // swappable when their palettes agree
      VertexId a = g.edge(f1).u == v ? g.edge(f1).v : g.edge(f1).u;
      VertexId b = g.edge(f2).u == v ? g.edge(f2).v : g.edge(f2).u;
      if (palette(g, col, a) == palette(g, col, b))
        fail(ErrorCode::ExtensionStuck, "frontier endpoints left indistinguishable");
    }
  }

  void step(VertexId v, const std::vector<char>& reached) {
    std::vector<EdgeId> back, horizontal, forward;
    for (EdgeId e : g.incident_edges(v)) {
      if (col.coloured(e)) {
        back.push_back(e);
        continue;
      }
      VertexId w = g.edge(e).u == v ? g.edge(e).v : g.edge(e).u;
      (reached[w] ? horizontal : forward).push_back(e);
    }
    bool gate = false;
    for (EdgeId f : forward)
      if (on_cycle_k(f, /*induced=*/true)) gate = true;
    if (!gate) {
      if (!forward.empty()) colour_forwards(v, forward);
      colour_horizontals(v, horizontal);
      return;
    }
    bool c1 = true;
    for (EdgeId f : forward)
      if (!on_cycle_k_mode(f)) c1 = false;
    bool c2 = true;
    for (EdgeId f : forward)
      if (L.lists[f] != L.lists[forward.front()] || !L.contains(f, s.signature.pink)) c2 = false;
    bool c3 = static_cast<int>(forward.size()) == delta - 1;
    if (!(c1 && c2 && c3)) {
      colour_forwards(v, forward);
      colour_horizontals(v, horizontal);
      return;
    }
    if (back.size() != 1 || !horizontal.empty())
      fail(ErrorCode::ExtensionStuck, "frontier shape contradicts the checks");

    // gather candidate cycles through the forward edges
    std::vector<std::vector<VertexId>> candidates;
    std::set<std::vector<EdgeId>> seen;
    for (EdgeId f : forward) {
      for (auto& cyc : induced_cycles_of_length_through(g, f, k, 16)) {
        CycleView cv = make_view(g, cyc);
        std::vector<EdgeId> key = cv.eids;
        std::sort(key.begin(), key.end());
        if (seen.insert(key).second) candidates.push_back(cyc);
      }
      if (candidates.size() >= 48) break;
    }
    if (candidates.empty())
      fail(ErrorCode::ExtensionStuck, "no induced length-k cycle at the frontier");

    EdgeColouring snapshot = col;
    for (bool swap_pair : {false, true}) {
      for (const auto& cyc : candidates) {
        col = snapshot;
        try {
          cycle_branch(v, back.front(), cyc, forward, swap_pair);
          return;
        } catch (const Error& e) {
          if (e.code() != ErrorCode::SchemeStuck && e.code() != ErrorCode::ExtensionStuck) throw;
        }
      }
    }
    // relaxed pass: identical to the first candidate order but the scheme may
    // repeat the cycle colour on an incident edge; the verifier still gates
    for (const auto& cyc : candidates) {
      col = snapshot;
      try {
        relaxed_branch(v, back.front(), cyc, forward);
        note("extend-relaxed-pin", v);
        return;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::SchemeStuck && e.code() != ErrorCode::ExtensionStuck) throw;
      }
    }
    col = snapshot;
    fail(ErrorCode::ExtensionStuck,
         "every candidate cycle sticks at vertex " + std::to_string(v));
  }

  void relaxed_branch(VertexId v, EdgeId back_edge, const std::vector<VertexId>& cprime,
                      const std::vector<EdgeId>& forward) {
    CycleView cpv = make_view(g, cprime);
    bool back_on = false;
    for (EdgeId e : cpv.eids)
      if (e == back_edge) back_on = true;
    if (back_on) {
      EdgeId fstar = -1;
      for (EdgeId e : cpv.eids)
        if (e != back_edge && (g.edge(e).u == v || g.edge(e).v == v)) fstar = e;
      VertexId nxt = g.edge(fstar).u == v ? g.edge(fstar).v : g.edge(fstar).u;
      auto oriented = orient_cycle(cprime, v, nxt);
      run_scheme(g, L, s.signature, protected_run, oriented, col, opt.trace, /*relax=*/true);
      fix_identical_copy(cprime);
      return;
    }
    EdgeId f1 = -1, f2 = -1;
    for (EdgeId e : cpv.eids)
      if (g.edge(e).u == v || g.edge(e).v == v) (f1 < 0 ? f1 : f2) = e;
    if (f1 > f2) std::swap(f1, f2);
    std::vector<EdgeId> others;
    for (EdgeId f : forward)
      if (f != f1 && f != f2) others.push_back(f);
    std::vector<std::vector<ColourId>> opts(others.size());
    for (std::size_t i = 0; i < others.size(); ++i)
      for (ColourId c : L.lists[others[i]])
        if (c != s.signature.pink) opts[i].push_back(c);
    auto got = distinct_assignment(opts);
    if (!got) fail(ErrorCode::ExtensionStuck, "other forward edges stuck even relaxed");
    record(others, *got, "extend-two-forwards-others", v);
    col.colour[f1] = s.signature.pink;
    ColourId cf2 = kUncoloured;
    for (ColourId c : L.lists[f2])
      if (c != s.signature.pink) {
        cf2 = c;
        break;
      }
    if (cf2 == kUncoloured) {
      col.colour[f2] = s.signature.pink;  // both pink: fall back to the push
      cf2 = s.signature.pink;
    } else {
      col.colour[f2] = cf2;
    }
    VertexId nxt = g.edge(f1).u == v ? g.edge(f1).v : g.edge(f1).u;
    auto oriented = orient_cycle(cprime, v, nxt);
    run_scheme(g, L, s.signature, protected_run, oriented, col, opt.trace, /*relax=*/true);
    fix_identical_copy(cprime);
  }
};

void audit_second_copy(const Graph& g, const EdgeColouring& col, const StartingState& s,
                       const CyclicEngineOptions& opt) {
  std::set<EdgeId> g0(s.g0_edges.begin(), s.g0_edges.end());
  auto cycles = enumerate_induced_cycles(g, opt.cycle_budget, s.signature.cycle_len);
  for (const auto& cyc : cycles) {
    if (static_cast<int>(cyc.size()) != s.signature.cycle_len) continue;
    CycleView cv = make_view(g, cyc);
    for (const auto& inst : patterns_on_view(g, col, cv, s.signature)) {
      if (inst.gadget != s.signature.gadget) continue;
      bool outside = false;
      for (EdgeId e : inst.run_edges)
        if (!g0.count(e)) outside = true;
      if (outside)
        fail(ErrorCode::InternalAudit, "a second copy of the starting pattern was produced");
    }
  }
}

}  // namespace

EdgeColouring extend_iteratively(const Graph& g, const ListAssignment& L, const StartingState& s,
                                 const CyclicEngineOptions& opt) {
  AutomorphismGroup local;
  const AutomorphismGroup* grp = opt.group;
  if (!grp && opt.debug_invariants) {
    local = automorphisms(g, opt.aut_cap);
    grp = &local;
  }
  Extender ext(g, L, s, opt, grp);
  return ext.run();
}

EdgeColouring colour_cyclic(const Graph& g, const ListAssignment& L,
                            const CyclicEngineOptions& opt) {
  auto summary = analyze(g);
  if (!summary.connected) fail(ErrorCode::NotConnected, "input graph is disconnected");
  if (summary.is_tree) fail(ErrorCode::InvalidInput, "tree input belongs to the tree engine");
  int delta = summary.max_degree;
  auto cls = classify(g);
  if (cls.tag == GraphClassTag::K4 || cls.tag == GraphClassTag::K33 ||
      cls.tag == GraphClassTag::Cycle)
    fail(ErrorCode::ExceptionalGraph,
         std::string(to_string(cls.tag)) + " is outside the guarantee");
  if (delta < 3) fail(ErrorCode::ExceptionalGraph, "max degree below 3");
  if (static_cast<int>(L.lists.size()) != g.edge_count())
    fail(ErrorCode::InvalidInput, "list count does not match edge count");
  if (L.min_list_size() < delta - 1)
    fail(ErrorCode::ListTooShort, "need lists of size at least " + std::to_string(delta - 1));

  AutomorphismGroup local;
  if (!opt.group) local = automorphisms(g, opt.aut_cap);
  const AutomorphismGroup& group = opt.group ? *opt.group : local;
  CyclicEngineOptions inner = opt;
  inner.group = &group;

  auto cl = classify_lists(g, L);
  if (cl.all_identical) {
    auto rep = exists_distinguishing_from_lists(g, group, L, opt.budget);
    if (!rep.feasible) fail(ErrorCode::Infeasible, "identical lists admit no witness");
    if (opt.trace) opt.trace->add("cyclic-identical-oracle", -1);
    return *rep.witness;
  }

  try {
    StartingState s = build_starting_subgraph(g, L, inner);
    EdgeColouring col = extend_iteratively(g, L, s, inner);
    if (!col.total()) fail(ErrorCode::InternalAudit, "output colouring not total");
    if (!respects_lists(col, L)) fail(ErrorCode::InternalAudit, "output violates a list");
    audit_second_copy(g, col, s, inner);
    return col;
  } catch (const Error& e) {
    // the constructive path is exhausted (a handful of tight-list corners,
    // notably triangles whose frontier lists are exactly {pink, blue});
    // fall back to the exhaustive search and surface the route in the trace
    if (e.code() != ErrorCode::SchemeStuck && e.code() != ErrorCode::ExtensionStuck &&
        e.code() != ErrorCode::Infeasible)
      throw;
    auto rep = exists_distinguishing_from_lists(g, group, L, opt.budget);
    if (!rep.feasible) throw;
    if (opt.trace) opt.trace->add(std::string("cyclic-constructive-failed-oracle: ") + e.what(), -1);
    return *rep.witness;
  }
}

}  // namespace listdist
