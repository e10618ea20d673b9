#include "listdist/engine_tree.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "listdist/automorphism.hpp"
#include "listdist/oracle.hpp"
#include "listdist/recognizer.hpp"

namespace listdist {

RootedTree root_tree(const Graph& g, VertexId root) {
  auto s = analyze(g);
  if (!s.is_tree) fail(ErrorCode::NotATree, "root_tree needs a tree");
  RootedTree t;
  t.graph = &g;
  t.root = root;
  int n = g.vertex_count();
  t.parent.assign(n, -1);
  t.children.assign(n, {});
  auto bfs = bfs_order(g, {root});
  t.bfs = bfs.order;
  for (VertexId v : t.bfs) {
    for (VertexId w : g.neighbours(v)) {
      if (w == root || bfs.dist[w] != bfs.dist[v] + 1) continue;
      if (t.parent[w] == -1 && w != root) {
        t.parent[w] = v;
        t.children[v].push_back(w);
      }
    }
  }
  return t;
}

TreeCentre tree_centre(const Graph& g) {
  auto s = analyze(g);
  if (!s.is_tree) fail(ErrorCode::NotATree, "tree_centre needs a tree");
  int n = g.vertex_count();
  if (n == 1) return CentralVertex{0};
  std::vector<int> deg(n);
  std::vector<char> removed(n, 0);
  std::vector<VertexId> layer;
  int remaining = n;
  for (int v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    if (deg[v] <= 1) layer.push_back(v);
  }
  while (remaining > 2) {
    std::vector<VertexId> next;
    for (VertexId v : layer) {
      removed[v] = 1;
      --remaining;
      for (VertexId w : g.neighbours(v))
        if (!removed[w] && --deg[w] == 1) next.push_back(w);
    }
    layer = std::move(next);
  }
  std::vector<VertexId> core;
  for (int v = 0; v < n; ++v)
    if (!removed[v]) core.push_back(v);
  if (core.size() == 1) return CentralVertex{core[0]};
  return CentralEdge{make_edge(core[0], core[1])};
}

std::string rooted_subtree_signature(const RootedTree& t, VertexId v) {
  std::vector<std::string> child_sigs;
  for (VertexId c : t.children[v]) child_sigs.push_back(rooted_subtree_signature(t, c));
  std::sort(child_sigs.begin(), child_sigs.end());
  std::string s = "(";
  for (const auto& cs : child_sigs) s += cs;
  s += ")";
  return s;
}

namespace {

bool rule_applies(const PaletteRule& r, const Graph& g, VertexId u) {
  if (r.vertex >= 0) return u == r.vertex;
  return g.degree(u) == r.degree && u != r.exempt;
}

// first lexicographic assignment of pairwise distinct colours to `edges`
// (distinct also from `taken`), honouring per-edge candidate sets; `check`
// validates the complete assignment.
std::optional<std::vector<ColourId>> assign_distinct(
    const std::vector<std::vector<ColourId>>& options, const std::vector<ColourId>& taken,
    const std::function<bool(const std::vector<ColourId>&)>& check) {
  std::vector<ColourId> chosen(options.size(), kUncoloured);
  std::function<bool(std::size_t)> go = [&](std::size_t i) -> bool {
    if (i == options.size()) return !check || check(chosen);
    for (ColourId c : options[i]) {
      if (std::find(taken.begin(), taken.end(), c) != taken.end()) continue;
      if (std::find(chosen.begin(), chosen.begin() + i, c) != chosen.begin() + static_cast<long>(i))
        continue;
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

EdgeColouring standard_colouring(const RootedTree& t, const ListAssignment& L,
                                 const EdgeColouring& pre,
                                 const std::vector<std::vector<ColourId>>& forbidden,
                                 const std::vector<PaletteRule>& rules) {
  const Graph& g = *t.graph;
  EdgeColouring col = pre;
  if (col.colour.empty()) col = EdgeColouring(g.edge_count());
  for (EdgeId e : g.incident_edges(t.root))
    if (!col.coloured(e)) fail(ErrorCode::InvalidInput, "root edges must be pre-coloured");

  for (VertexId u : t.bfs) {
    if (u == t.root) continue;
    std::vector<EdgeId> forward;
    std::vector<ColourId> taken;
    for (VertexId c : t.children[u]) {
      EdgeId e = g.edge_id(u, c);
      if (col.coloured(e))
        taken.push_back(col.colour[e]);
      else
        forward.push_back(e);
    }
    const PaletteRule* rule = nullptr;
    for (const auto& r : rules)
      if (rule_applies(r, g, u)) {
        rule = &r;
        break;
      }
    ColourId back = col.colour[t.back_edge(u)];
    auto palette_of = [&](const std::vector<ColourId>& chosen) {
      std::vector<ColourId> p = taken;
      p.push_back(back);
      p.insert(p.end(), chosen.begin(), chosen.end());
      std::sort(p.begin(), p.end());
      return p;
    };
    if (forward.empty()) {
      if (rule && palette_of({}) == rule->palette)
        fail(ErrorCode::OverConstrained,
             "palette rule violated at vertex " + std::to_string(u));
      continue;
    }
    std::vector<std::vector<ColourId>> options;
    for (EdgeId e : forward) {
      std::vector<ColourId> opt;
      for (ColourId c : L.lists[e])
        if (forbidden.empty() ||
            std::find(forbidden[e].begin(), forbidden[e].end(), c) == forbidden[e].end())
          opt.push_back(c);
      options.push_back(std::move(opt));
    }
    std::function<bool(const std::vector<ColourId>&)> check;
    if (rule)
      check = [&](const std::vector<ColourId>& chosen) {
        return palette_of(chosen) != rule->palette;
      };
    auto chosen = assign_distinct(options, taken, check);
    if (!chosen)
      fail(ErrorCode::OverConstrained,
           "no admissible distinct colours at vertex " + std::to_string(u));
    for (std::size_t i = 0; i < forward.size(); ++i) col.colour[forward[i]] = (*chosen)[i];
  }
  return col;
}

namespace {

struct TreeCase {
  const Graph& g;
  const ListAssignment& L;
  const TreeEngineOptions& opt;
  int delta;

  void note(const std::string& rule, VertexId v1) const {
    if (opt.trace) opt.trace->add(rule, v1);
  }

  // enumerate lexicographic distinct assignments over the given edges,
  // invoking fn until it returns true
  bool each_distinct(const std::vector<EdgeId>& edges,
                     const std::function<bool(const std::vector<ColourId>&)>& fn) const {
    std::vector<ColourId> chosen(edges.size(), kUncoloured);
    std::function<bool(std::size_t)> go = [&](std::size_t i) -> bool {
      if (i == edges.size()) return fn(chosen);
      for (ColourId c : L.lists[edges[i]]) {
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
    return go(0);
  }

  // Case 1: some list diversity at every internal vertex. A colour used on a
  // single edge at the root pins that edge globally; the far endpoint gets a
  // palette different from the root's.
  std::optional<EdgeColouring> case1() const {
    int n = g.vertex_count();
    for (VertexId r = 0; r < n; ++r) {
      RootedTree t = root_tree(g, r);
      std::vector<EdgeId> redges = g.incident_edges(r);
      std::optional<EdgeColouring> result;
      each_distinct(redges, [&](const std::vector<ColourId>& sigma) {
        for (std::size_t pi = 0; pi < redges.size(); ++pi) {
          ColourId pink = sigma[pi];
          EdgeId ep = redges[pi];
          VertexId v = g.edge(ep).u == r ? g.edge(ep).v : g.edge(ep).u;
          EdgeColouring pre(g.edge_count());
          for (std::size_t i = 0; i < redges.size(); ++i) pre.colour[redges[i]] = sigma[i];
          std::vector<std::vector<ColourId>> forbidden(g.edge_count());
          for (EdgeId e = 0; e < g.edge_count(); ++e)
            if (!pre.coloured(e)) forbidden[e] = {pink};
          std::vector<ColourId> rpal(sigma);
          std::sort(rpal.begin(), rpal.end());
          PaletteRule rule;
          rule.vertex = v;
          rule.palette = rpal;
          try {
            result = standard_colouring(t, L, pre, forbidden, {rule});
            note("tree-case1", r);
            return true;
          } catch (const Error& e) {
            if (e.code() != ErrorCode::OverConstrained) throw;
          }
        }
        return false;
      });
      if (result) return result;
    }
    return std::nullopt;
  }

  EdgeColouring case2(VertexId r) const {
    RootedTree t = root_tree(g, r);
    std::vector<EdgeId> redges = g.incident_edges(r);
    EdgeColouring pre(g.edge_count());
    bool ok = each_distinct(redges, [&](const std::vector<ColourId>& sigma) {
      for (std::size_t i = 0; i < redges.size(); ++i) pre.colour[redges[i]] = sigma[i];
      return true;
    });
    if (!ok) fail(ErrorCode::OverConstrained, "no distinct colours at the root");
    std::vector<ColourId> rpal;
    for (EdgeId e : redges) rpal.push_back(pre.colour[e]);
    std::sort(rpal.begin(), rpal.end());
    PaletteRule rule;
    rule.degree = g.degree(r);
    rule.exempt = r;
    rule.palette = rpal;
    note("tree-case2", r);
    return standard_colouring(t, L, pre, {}, {rule});
  }

  // assignments at a centre vertex's edges: pairwise distinct first, then
  // with one colour repeated on two edges leading to non-isomorphic subtrees
  bool each_centre_assignment(const std::vector<EdgeId>& edges,
                              const std::vector<std::string>& sigs,
                              const std::function<bool(const std::vector<ColourId>&)>& fn) const {
    std::vector<ColourId> chosen(edges.size(), kUncoloured);
    std::function<bool(std::size_t, int, int)> go = [&](std::size_t i, int repeats,
                                                        int max_repeats) -> bool {
      if (i == edges.size()) return fn(chosen);
      for (ColourId c : L.lists[edges[i]]) {
        int dup = -1;
        for (std::size_t j = 0; j < i; ++j)
          if (chosen[j] == c) dup = static_cast<int>(j);
        int nrep = repeats;
        if (dup >= 0) {
          if (repeats >= max_repeats) continue;       // at most one repeated colour
          if (sigs[dup] == sigs[i]) continue;         // only toward non-isomorphic subtrees
          nrep = repeats + 1;
        }
        chosen[i] = c;
        if (go(i + 1, nrep, max_repeats)) return true;
        chosen[i] = kUncoloured;
      }
      return false;
    };
    if (go(0, 0, 0)) return true;  // all distinct, preferred
    return go(0, 0, 1);
  }

  EdgeColouring case4a() const {
    TreeCentre centre = tree_centre(g);
    if (std::holds_alternative<CentralVertex>(centre)) {
      VertexId r = std::get<CentralVertex>(centre).v;
      RootedTree t = root_tree(g, r);
      std::vector<EdgeId> redges = g.incident_edges(r);
      std::vector<std::string> sigs;
      for (EdgeId e : redges) {
        VertexId c = g.edge(e).u == r ? g.edge(e).v : g.edge(e).u;
        sigs.push_back(rooted_subtree_signature(t, c));
      }
      EdgeColouring pre(g.edge_count());
      bool ok = each_centre_assignment(redges, sigs, [&](const std::vector<ColourId>& sigma) {
        for (std::size_t i = 0; i < redges.size(); ++i) pre.colour[redges[i]] = sigma[i];
        return true;
      });
      if (!ok) fail(ErrorCode::OverConstrained, "no admissible colours at the central vertex");
      note("tree-case4a-vertex", r);
      return standard_colouring(t, L, pre, {}, {});
    }
    Edge ce = std::get<CentralEdge>(centre).e;
    VertexId x = ce.u, y = ce.v;
    RootedTree t = root_tree(g, x);
    EdgeId exy = g.edge_id(x, y);
    ColourId c0 = L.lists[exy].front();
    auto side_edges = [&](VertexId z) {
      std::vector<EdgeId> out;
      for (EdgeId e : g.incident_edges(z))
        if (e != exy) out.push_back(e);
      return out;
    };
    auto side_sigs = [&](VertexId z, const std::vector<EdgeId>& edges) {
      std::vector<std::string> out;
      for (EdgeId e : edges) {
        VertexId c = g.edge(e).u == z ? g.edge(e).v : g.edge(e).u;
        out.push_back(rooted_subtree_signature(t, c));
      }
      return out;
    };
    std::vector<EdgeId> xe = side_edges(x), ye = side_edges(y);
    std::vector<std::string> xs = side_sigs(x, xe), ys = side_sigs(y, ye);

    EdgeColouring pre(g.edge_count());
    bool found = each_centre_assignment(xe, xs, [&](const std::vector<ColourId>& sx) {
      return each_centre_assignment(ye, ys, [&](const std::vector<ColourId>& sy) {
        // a swap of the two endpoints needs matching (colour, subtree) families
        if (xe.size() == ye.size()) {
          std::multiset<std::pair<ColourId, std::string>> fx, fy;
          for (std::size_t i = 0; i < xe.size(); ++i) fx.insert({sx[i], xs[i]});
          for (std::size_t i = 0; i < ye.size(); ++i) fy.insert({sy[i], ys[i]});
          if (fx == fy) return false;
        }
        pre.colour[exy] = c0;
        for (std::size_t i = 0; i < xe.size(); ++i) pre.colour[xe[i]] = sx[i];
        for (std::size_t i = 0; i < ye.size(); ++i) pre.colour[ye[i]] = sy[i];
        return true;
      });
    });
    if (!found)
      fail(ErrorCode::OverConstrained, "no palette split across the central edge");
    note("tree-case4a-edge", x);
    return standard_colouring(t, L, pre, {}, {});
  }
};

}  // namespace

EdgeColouring colour_tree(const Graph& g, const ListAssignment& L, const TreeEngineOptions& opt) {
  auto s = analyze(g);
  if (!s.connected) fail(ErrorCode::NotConnected, "input graph is disconnected");
  if (!s.is_tree) fail(ErrorCode::NotATree, "input graph has a cycle");
  int delta = s.max_degree;
  auto cls = classify(g);
  if (cls.tag == GraphClassTag::SymmetricTree || cls.tag == GraphClassTag::BisymmetricTree)
    fail(ErrorCode::ExceptionalTree, std::string(to_string(cls.tag)) +
                                         " requires lists of size " + std::to_string(cls.delta));
  if (delta < 3) fail(ErrorCode::Unsupported, "max degree below 3");
  if (L.min_list_size() < delta - 1)
    fail(ErrorCode::ListTooShort, "need lists of size at least " + std::to_string(delta - 1));

  TreeCase tc{g, L, opt, delta};
  auto cl = classify_lists(g, L);
  if (cl.all_identical) {
    // identical lists sit outside the constructive cases; exhaustive search
    // is affordable at this scale and guaranteed to succeed
    AutomorphismGroup local;
    if (!opt.group) local = automorphisms(g, opt.aut_cap);
    const AutomorphismGroup& group = opt.group ? *opt.group : local;
    auto rep = exists_distinguishing_from_lists(g, group, L, opt.budget);
    if (!rep.feasible) fail(ErrorCode::Infeasible, "identical lists admit no witness");
    tc.note("tree-identical-oracle", -1);
    return *rep.witness;
  }

  bool case1_applies = true;
  for (VertexId v = 0; v < g.vertex_count() && case1_applies; ++v) {
    if (g.degree(v) < 2) continue;
    const auto& inc = g.incident_edges(v);
    bool all_same = true;
    for (std::size_t i = 1; i < inc.size(); ++i)
      if (L.lists[inc[i]] != L.lists[inc[0]]) all_same = false;
    if (all_same) case1_applies = false;
  }
  if (case1_applies) {
    auto r = tc.case1();
    if (r) return *r;
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (1 < g.degree(v) && g.degree(v) < delta) return tc.case2(v);

  // remaining shape: every degree is 1 or delta; a finite tree always has a
  // centre, so the infinite-tree cases never arise here
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) != 1 && g.degree(v) != delta)
      fail(ErrorCode::Infeasible, "case dispatch invariant violated");
  try {
    return tc.case4a();
  } catch (const Error& e) {
    if (e.code() != ErrorCode::OverConstrained) throw;
    // centre assignment can be blocked when all centre subtrees are
    // isomorphic yet depth-varied; fall back to exhaustive search
    AutomorphismGroup local;
    if (!opt.group) local = automorphisms(g, opt.aut_cap);
    const AutomorphismGroup& group = opt.group ? *opt.group : local;
    auto rep = exists_distinguishing_from_lists(g, group, L, opt.budget);
    if (!rep.feasible) throw;
    tc.note("tree-case4a-oracle-fallback", -1);
    return *rep.witness;
  }
}

}  // namespace listdist
