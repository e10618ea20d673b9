#include "listdist/list_model.hpp"

#include <algorithm>

namespace listdist {

ListAssignment make_list_assignment(const Graph& g, int universe,
                                    std::vector<std::vector<ColourId>> lists) {
  if (static_cast<int>(lists.size()) != g.edge_count())
    fail(ErrorCode::InvalidInput, "list count does not match edge count");
  for (auto& l : lists) {
    if (l.empty()) fail(ErrorCode::InvalidInput, "empty colour list");
    std::sort(l.begin(), l.end());
    l.erase(std::unique(l.begin(), l.end()), l.end());
    for (ColourId c : l)
      if (c < 0 || c >= universe) fail(ErrorCode::InvalidInput, "colour outside universe");
  }
  return ListAssignment{universe, std::move(lists)};
}

bool respects_lists(const EdgeColouring& c, const ListAssignment& L) {
  for (EdgeId e = 0; e < static_cast<EdgeId>(c.colour.size()); ++e)
    if (c.coloured(e) && !L.contains(e, c.colour[e])) return false;
  return true;
}

ColourSubgraph colour_subgraph(const Graph& g, const ListAssignment& L, ColourId i) {
  if (i < 0 || i >= L.universe) fail(ErrorCode::InvalidInput, "colour outside universe");
  ColourSubgraph h;
  h.colour = i;
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (L.contains(e, i)) h.edge_set.push_back(e);
  h.trivial = static_cast<int>(h.edge_set.size()) == g.edge_count();
  return h;
}

namespace {

// acyclicity of the subgraph formed by the given edges, via union-find
bool edge_set_has_cycle(const Graph& g, const std::vector<EdgeId>& edges) {
  std::vector<int> parent(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) parent[v] = v;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (EdgeId id : edges) {
    int a = find(g.edge(id).u), b = find(g.edge(id).v);
    if (a == b) return true;
    parent[a] = b;
  }
  return false;
}

}  // namespace

ListClassification classify_lists(const Graph& g, const ListAssignment& L) {
  ListClassification r;
  r.all_identical = true;
  for (EdgeId e = 1; e < g.edge_count(); ++e)
    if (L.lists[e] != L.lists[0]) {
      r.all_identical = false;
      break;
    }
  for (ColourId i = 0; i < L.universe; ++i) {
    ColourSubgraph h = colour_subgraph(g, L, i);
    if (h.trivial) continue;
    bool present = !h.edge_set.empty();
    r.nontrivial_colours.push_back(i);
    if (present && edge_set_has_cycle(g, h.edge_set)) r.cyclic_nontrivial_colours.push_back(i);
  }
  return r;
}

std::vector<ColourId> palette(const Graph& g, const EdgeColouring& c, VertexId v) {
  std::vector<ColourId> p;
  for (EdgeId id : g.incident_edges(v)) {
    if (!c.coloured(id))
      fail(ErrorCode::UncolouredIncidentEdge,
           "edge " + std::to_string(g.edge(id).u) + "-" + std::to_string(g.edge(id).v));
    p.push_back(c.colour[id]);
  }
  std::sort(p.begin(), p.end());
  return p;
}

}  // namespace listdist
