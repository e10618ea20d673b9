#include "listdist/recognizer.hpp"

#include <algorithm>

#include "listdist/engine_tree.hpp"

namespace listdist {

const char* to_string(GraphClassTag t) {
  switch (t) {
    case GraphClassTag::Cycle: return "Cycle";
    case GraphClassTag::K4: return "K4";
    case GraphClassTag::K33: return "K33";
    case GraphClassTag::SymmetricTree: return "SymmetricTree";
    case GraphClassTag::BisymmetricTree: return "BisymmetricTree";
    case GraphClassTag::GeneralTree: return "GeneralTree";
    case GraphClassTag::GeneralCyclic: return "GeneralCyclic";
  }
  return "?";
}

namespace {

bool is_k4(const Graph& g) { return g.vertex_count() == 4 && g.edge_count() == 6; }

bool is_k33(const Graph& g) {
  if (g.vertex_count() != 6 || g.edge_count() != 9) return false;
  for (int v = 0; v < 6; ++v)
    if (g.degree(v) != 3) return false;
  // a connected 3-regular bipartite graph on 6 vertices must be K33
  std::vector<int> side(6, -1);
  side[0] = 0;
  std::vector<int> stack{0};
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int w : g.neighbours(u)) {
      if (side[w] == -1) {
        side[w] = 1 - side[u];
        stack.push_back(w);
      } else if (side[w] == side[u]) {
        return false;
      }
    }
  }
  return true;
}

struct TreeShape {
  bool symmetric = false;
  bool bisymmetric = false;
  int h = 0;
  int d = 0;
};

TreeShape tree_shape(const Graph& g) {
  TreeShape s;
  int n = g.vertex_count();
  if (n == 1) {
    s.symmetric = true;
    return s;
  }
  auto centre = tree_centre(g);
  std::vector<VertexId> sources;
  if (std::holds_alternative<CentralVertex>(centre)) {
    sources = {std::get<CentralVertex>(centre).v};
  } else {
    Edge e = std::get<CentralEdge>(centre).e;
    sources = {e.u, e.v};
  }
  auto bfs = bfs_order(g, sources);
  int leaf_dist = -1;
  bool uniform_leaves = true;
  int internal_degree = -1;
  bool uniform_internal = true;
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) <= 1) {
      if (leaf_dist < 0) leaf_dist = bfs.dist[v];
      if (bfs.dist[v] != leaf_dist) uniform_leaves = false;
    } else {
      if (internal_degree < 0) internal_degree = g.degree(v);
      if (g.degree(v) != internal_degree) uniform_internal = false;
    }
  }
  if (uniform_leaves && uniform_internal) {
    s.h = std::max(leaf_dist, 0);
    s.d = internal_degree < 0 ? g.max_degree() : internal_degree;
    if (sources.size() == 1)
      s.symmetric = true;
    else
      s.bisymmetric = true;
  }
  return s;
}

}  // namespace

GraphClass classify(const Graph& g) {
  auto summary = analyze(g);
  if (!summary.connected) fail(ErrorCode::Disconnected, "classify requires a connected graph");
  GraphClass cls;
  cls.delta = summary.max_degree;
  cls.n = g.vertex_count();
  if (summary.is_tree) {
    TreeShape s = tree_shape(g);
    if (s.symmetric) {
      cls.tag = GraphClassTag::SymmetricTree;
      cls.h = s.h;
      cls.d = s.d;
    } else if (s.bisymmetric) {
      cls.tag = GraphClassTag::BisymmetricTree;
      cls.h = s.h;
      cls.d = s.d;
    } else {
      cls.tag = GraphClassTag::GeneralTree;
    }
    return cls;
  }
  if (cls.delta == 2) {  // connected, not a tree, 2-regular
    cls.tag = GraphClassTag::Cycle;
    return cls;
  }
  if (is_k4(g)) {
    cls.tag = GraphClassTag::K4;
    return cls;
  }
  if (is_k33(g)) {
    cls.tag = GraphClassTag::K33;
    return cls;
  }
  cls.tag = GraphClassTag::GeneralCyclic;
  return cls;
}

RequiredListSize required_list_size(const GraphClass& cls) {
  switch (cls.tag) {
    case GraphClassTag::Cycle:
      return {cls.n <= 5 ? 3 : 2, true};
    case GraphClassTag::K4:
    case GraphClassTag::K33:
      return {3, true};
    case GraphClassTag::SymmetricTree:
    case GraphClassTag::BisymmetricTree:
      if (cls.delta <= 2)
        fail(ErrorCode::Unsupported, "paths are outside the exceptional table");
      return {cls.delta, true};
    case GraphClassTag::GeneralTree:
    case GraphClassTag::GeneralCyclic:
      if (cls.delta < 3) fail(ErrorCode::Unsupported, "max degree below 3");
      return {cls.delta - 1, false};
  }
  fail(ErrorCode::InvalidInput, "unreachable");
}

}  // namespace listdist
