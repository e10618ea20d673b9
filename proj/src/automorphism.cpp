#include "listdist/automorphism.hpp"

#include <algorithm>

namespace listdist {

namespace {

// Invariant key per vertex: degree, sorted neighbour degrees, sorted BFS
// distance profile. Images must share the key.
std::vector<std::vector<int>> vertex_keys(const Graph& g) {
  int n = g.vertex_count();
  std::vector<std::vector<int>> key(n);
  for (int v = 0; v < n; ++v) {
    key[v].push_back(g.degree(v));
    std::vector<int> nd;
    for (int w : g.neighbours(v)) nd.push_back(g.degree(w));
    std::sort(nd.begin(), nd.end());
    key[v].insert(key[v].end(), nd.begin(), nd.end());
    auto bfs = bfs_order(g, {v});
    std::vector<int> profile = bfs.dist;
    std::sort(profile.begin(), profile.end());
    key[v].insert(key[v].end(), profile.begin(), profile.end());
  }
  return key;
}

struct AutSearch {
  const Graph& g;
  int n;
  std::vector<std::vector<int>> key;
  std::vector<VertexId> image;
  std::vector<char> used;
  std::vector<Automorphism>* out;

  void run() {
    image.assign(n, -1);
    used.assign(n, 0);
    place(0);
  }

  void place(int v) {
    if (v == n) {
      out->push_back(image);
      return;
    }
    for (int w = 0; w < n; ++w) {
      if (used[w] || key[v] != key[w]) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u)
        if (g.has_edge(u, v) != g.has_edge(image[u], w)) ok = false;
      if (!ok) continue;
      image[v] = w;
      used[w] = 1;
      place(v + 1);
      used[w] = 0;
      image[v] = -1;
    }
  }
};

}  // namespace

AutomorphismGroup automorphisms(const Graph& g, int vertex_cap) {
  if (g.vertex_count() > vertex_cap)
    fail(ErrorCode::TooLarge, "graph exceeds the enumeration cap of " +
                                  std::to_string(vertex_cap) + " vertices");
  AutomorphismGroup grp;
  AutSearch s{g, g.vertex_count(), vertex_keys(g), {}, {}, &grp.elements};
  s.run();
  return grp;  // lexicographic order puts the identity first
}

Edge edge_image(const Automorphism& a, const Edge& e) { return make_edge(a[e.u], a[e.v]); }

EdgeId edge_image_id(const Graph& g, const Automorphism& a, EdgeId e) {
  Edge im = edge_image(a, g.edge(e));
  return g.edge_id(im.u, im.v);
}

bool is_distinguishing(const Graph& g, const AutomorphismGroup& group, const EdgeColouring& c) {
  if (!c.total() && g.edge_count() > 0)
    fail(ErrorCode::InvalidInput, "colouring must be total");
  for (const auto& a : group.elements) {
    bool identity = true;
    for (int v = 0; v < g.vertex_count(); ++v)
      if (a[v] != v) {
        identity = false;
        break;
      }
    if (identity) continue;
    bool broken = false;
    for (EdgeId e = 0; e < g.edge_count(); ++e)
      if (c.colour[edge_image_id(g, a, e)] != c.colour[e]) {
        broken = true;
        break;
      }
    if (!broken) return false;
  }
  return true;
}

AutomorphismGroup colour_preserving_stabilizer(const Graph& g, const AutomorphismGroup& group,
                                               const EdgeColouring& c) {
  AutomorphismGroup sub;
  for (const auto& a : group.elements) {
    bool preserves = true;
    for (EdgeId e = 0; e < g.edge_count() && preserves; ++e)
      if (c.colour[edge_image_id(g, a, e)] != c.colour[e]) preserves = false;
    if (preserves) sub.elements.push_back(a);
  }
  return sub;
}

std::vector<VertexId> fixed_vertices(const AutomorphismGroup& group, int n) {
  std::vector<VertexId> fixed;
  for (int v = 0; v < n; ++v) {
    bool f = true;
    for (const auto& a : group.elements)
      if (a[v] != v) {
        f = false;
        break;
      }
    if (f) fixed.push_back(v);
  }
  return fixed;
}

}  // namespace listdist
