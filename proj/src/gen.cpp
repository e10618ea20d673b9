#include "listdist/gen.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "listdist/rng.hpp"

namespace listdist {

namespace {

// ordered partition of the vertices as a list of cells
using Partition = std::vector<std::vector<VertexId>>;

Partition refine(const Graph& g, Partition p) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t target = 0; target < p.size() && !changed; ++target) {
      for (std::size_t cell = 0; cell < p.size() && !changed; ++cell) {
        if (p[cell].size() <= 1) continue;
        std::map<int, std::vector<VertexId>> by_count;
        for (VertexId v : p[cell]) {
          int cnt = 0;
          for (VertexId w : p[target])
            if (g.has_edge(v, w)) ++cnt;
          by_count[cnt].push_back(v);
        }
        if (by_count.size() <= 1) continue;
        Partition np;
        for (std::size_t i = 0; i < p.size(); ++i) {
          if (i != cell) {
            np.push_back(p[i]);
            continue;
          }
          for (auto& [cnt, verts] : by_count) np.push_back(verts);
        }
        p = std::move(np);
        changed = true;
      }
    }
  }
  return p;
}

std::vector<std::uint64_t> code_for(const Graph& g, const std::vector<VertexId>& order) {
  int n = g.vertex_count();
  std::vector<std::uint64_t> code((n * (n - 1) / 2 + 63) / 64 + 1, 0);
  code.back() = static_cast<std::uint64_t>(n);
  int bit = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++bit)
      if (g.has_edge(order[i], order[j])) code[bit / 64] |= 1ULL << (bit % 64);
  return code;
}

struct CanonSearch {
  const Graph& g;
  std::vector<std::uint64_t> best;
  bool have_best = false;

  void visit(const Partition& p) {
    Partition q = refine(g, p);
    int split = -1;
    for (std::size_t i = 0; i < q.size(); ++i)
      if (q[i].size() > 1) {
        split = static_cast<int>(i);
        break;
      }
    if (split < 0) {
      std::vector<VertexId> order;
      for (const auto& cell : q) order.push_back(cell.front());
      auto code = code_for(g, order);
      if (!have_best || code < best) {
        best = std::move(code);
        have_best = true;
      }
      return;
    }
    for (VertexId v : q[split]) {
      Partition next;
      for (std::size_t i = 0; i < q.size(); ++i) {
        if (static_cast<int>(i) != split) {
          next.push_back(q[i]);
          continue;
        }
        next.push_back({v});
        std::vector<VertexId> rest;
        for (VertexId w : q[split])
          if (w != v) rest.push_back(w);
        next.push_back(rest);
      }
      visit(next);
    }
  }
};

}  // namespace

std::vector<std::uint64_t> canonical_code(const Graph& g) {
  int n = g.vertex_count();
  if (n == 0) return {0};
  // initial partition by degree
  std::map<int, std::vector<VertexId>> by_deg;
  for (int v = 0; v < n; ++v) by_deg[g.degree(v)].push_back(v);
  Partition p;
  for (auto& [d, verts] : by_deg) p.push_back(verts);
  CanonSearch s{g, {}, false};
  s.visit(p);
  return s.best;
}

std::vector<Graph> all_graphs(int n) {
  if (n <= 0) return {};
  std::vector<Graph> level{Graph::from_edges(1, {})};
  for (int size = 2; size <= n; ++size) {
    std::set<std::vector<std::uint64_t>> seen;
    std::vector<Graph> next;
    for (const Graph& parent : level) {
      int pn = parent.vertex_count();
      for (std::uint32_t mask = 0; mask < (1u << pn); ++mask) {
        std::vector<Edge> edges = parent.edges();
        for (int v = 0; v < pn; ++v)
          if (mask & (1u << v)) edges.push_back({v, pn});
        Graph cand = Graph::from_edges(pn + 1, std::move(edges));
        auto code = canonical_code(cand);
        if (seen.insert(code).second) next.push_back(std::move(cand));
      }
    }
    level = std::move(next);
  }
  return level;
}

std::vector<Graph> connected_graphs(int n) {
  std::vector<Graph> out;
  for (Graph& g : all_graphs(n))
    if (analyze(g).connected) out.push_back(std::move(g));
  return out;
}

std::vector<Graph> all_trees(int n) {
  if (n <= 0) return {};
  std::vector<Graph> level{Graph::from_edges(1, {})};
  for (int size = 2; size <= n; ++size) {
    std::set<std::vector<std::uint64_t>> seen;
    std::vector<Graph> next;
    for (const Graph& parent : level) {
      int pn = parent.vertex_count();
      for (int v = 0; v < pn; ++v) {
        std::vector<Edge> edges = parent.edges();
        edges.push_back({v, pn});
        Graph cand = Graph::from_edges(pn + 1, std::move(edges));
        auto code = canonical_code(cand);
        if (seen.insert(code).second) next.push_back(std::move(cand));
      }
    }
    level = std::move(next);
  }
  return level;
}

ListAssignment generate_lists(const Graph& g, int k, int universe, std::uint64_t seed,
                              ListMode mode) {
  if (k < 1 || k > universe) fail(ErrorCode::InvalidInput, "need 1 <= k <= universe");
  Rng rng(mix_seed(seed, 0x715EC0DEULL));
  int m = g.edge_count();
  std::vector<std::vector<ColourId>> lists(m);
  switch (mode) {
    case ListMode::Random:
      for (int e = 0; e < m; ++e) lists[e] = rng.subset(universe, k);
      break;
    case ListMode::Identical: {
      auto base = rng.subset(universe, k);
      for (int e = 0; e < m; ++e) lists[e] = base;
      break;
    }
    case ListMode::OneOffIdentical: {
      auto base = rng.subset(universe, k);
      for (int e = 0; e < m; ++e) lists[e] = base;
      if (m > 0) {
        int off = static_cast<int>(rng.below(m));
        std::vector<ColourId> other = base;
        while (other == base) other = rng.subset(universe, k);
        lists[off] = other;
      }
      break;
    }
  }
  return make_list_assignment(g, universe, std::move(lists));
}

}  // namespace listdist
