#include "listdist/graph.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>
#include <sstream>

namespace listdist {

Graph Graph::from_edges(int n, std::vector<Edge> edges) {
  if (n < 0 || n >= (1 << 16)) fail(ErrorCode::TooLarge, "vertex count out of range");
  Graph g;
  g.n_ = n;
  for (auto& e : edges) {
    if (e.u == e.v) fail(ErrorCode::LoopEdge, "loop at vertex " + std::to_string(e.u));
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u < 0 || e.v >= n) fail(ErrorCode::InvalidInput, "edge endpoint out of range");
  }
  std::sort(edges.begin(), edges.end());
  for (std::size_t i = 1; i < edges.size(); ++i) {
    if (edges[i] == edges[i - 1])
      fail(ErrorCode::DuplicateEdge, std::to_string(edges[i].u) + " " + std::to_string(edges[i].v));
  }
  g.edges_ = std::move(edges);
  g.adj_.assign(n, {});
  g.inc_.assign(n, {});
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    const Edge& e = g.edges_[id];
    g.adj_[e.u].push_back(e.v);
    g.adj_[e.v].push_back(e.u);
    g.inc_[e.u].push_back(id);
    g.inc_[e.v].push_back(id);
  }
  for (int v = 0; v < n; ++v) {
    std::sort(g.adj_[v].begin(), g.adj_[v].end());
    std::sort(g.inc_[v].begin(), g.inc_[v].end(),
              [&](EdgeId a, EdgeId b) { return g.edges_[a] < g.edges_[b]; });
  }
  return g;
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

EdgeId Graph::edge_id(VertexId u, VertexId v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return -1;
  Edge want = make_edge(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), want);
  if (it != edges_.end() && *it == want) return static_cast<EdgeId>(it - edges_.begin());
  return -1;
}

Graph parse_edge_list(const std::string& text) {
  std::vector<Edge> edges;
  int max_vertex = -1;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
    if (tokens.empty()) continue;
    if (tokens.size() != 2)
      fail(ErrorCode::MalformedLine, "line " + std::to_string(lineno) + ": expected two tokens");
    long vals[2];
    for (int i = 0; i < 2; ++i) {
      const std::string& t = tokens[i];
      if (t.empty() || !std::all_of(t.begin(), t.end(), [](unsigned char c) { return std::isdigit(c); }))
        fail(ErrorCode::MalformedLine, "line " + std::to_string(lineno) + ": bad token '" + t + "'");
      vals[i] = std::stol(t);
      if (vals[i] >= (1 << 16)) fail(ErrorCode::TooLarge, "vertex index too large");
    }
    if (vals[0] == vals[1]) fail(ErrorCode::LoopEdge, "line " + std::to_string(lineno));
    edges.push_back(make_edge(static_cast<int>(vals[0]), static_cast<int>(vals[1])));
    max_vertex = std::max(max_vertex, static_cast<int>(std::max(vals[0], vals[1])));
  }
  return Graph::from_edges(max_vertex + 1, std::move(edges));
}

std::vector<int> connected_components(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> comp(n, -1);
  int c = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::deque<int> q{s};
    comp[s] = c;
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      for (int w : g.neighbours(u))
        if (comp[w] < 0) {
          comp[w] = c;
          q.push_back(w);
        }
    }
    ++c;
  }
  return comp;
}

StructureSummary analyze(const Graph& g) {
  StructureSummary s;
  int n = g.vertex_count();
  s.max_degree = g.max_degree();
  s.degree_histogram.assign(s.max_degree + 1, 0);
  for (int v = 0; v < n; ++v) ++s.degree_histogram[g.degree(v)];
  auto comp = connected_components(g);
  s.connected = n <= 1 || std::all_of(comp.begin(), comp.end(), [](int c) { return c == 0; });
  s.is_tree = s.connected && g.edge_count() == n - 1;
  return s;
}

namespace {

// BFS from `from` to `to` inside the masked subgraph, skipping edge `skip`.
// Returns the path (from..to) or empty when unreachable.
std::vector<VertexId> masked_bfs_path(const Graph& g, VertexId from, VertexId to,
                                      const std::vector<char>* allowed, EdgeId skip) {
  int n = g.vertex_count();
  std::vector<int> parent(n, -2);
  std::deque<int> q{from};
  parent[from] = -1;
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    if (u == to) break;
    for (EdgeId id : g.incident_edges(u)) {
      if (id == skip) continue;
      if (allowed && !(*allowed)[id]) continue;
      const Edge& e = g.edge(id);
      int w = e.u == u ? e.v : e.u;
      if (parent[w] == -2) {
        parent[w] = u;
        q.push_back(w);
      }
    }
  }
  if (parent[to] == -2) return {};
  std::vector<VertexId> path;
  for (int x = to; x != -1; x = parent[x]) path.push_back(x);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

std::optional<std::vector<VertexId>> find_induced_cycle(const Graph& g,
                                                        const std::vector<char>* allowed_edges) {
  std::optional<std::vector<VertexId>> best;
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    if (allowed_edges && !(*allowed_edges)[id]) continue;
    const Edge& e = g.edge(id);
    auto path = masked_bfs_path(g, e.u, e.v, allowed_edges, id);
    if (path.empty()) continue;
    if (!best || path.size() < best->size()) best = path;
  }
  return best;  // shortest cycle of the searched subgraph: chordless there
}

std::vector<VertexId> shortest_path(const Graph& g, VertexId from,
                                    const std::vector<char>& targets) {
  int n = g.vertex_count();
  if (from < 0 || from >= n) fail(ErrorCode::InvalidInput, "bad source vertex");
  if (static_cast<int>(targets.size()) != n) fail(ErrorCode::InvalidInput, "bad target mask");
  if (targets[from]) return {from};
  std::vector<int> parent(n, -2);
  std::deque<int> q{from};
  parent[from] = -1;
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    for (int w : g.neighbours(u)) {
      if (parent[w] != -2) continue;
      parent[w] = u;
      if (targets[w]) {
        std::vector<VertexId> path;
        for (int x = w; x != -1; x = parent[x]) path.push_back(x);
        std::reverse(path.begin(), path.end());
        return path;
      }
      q.push_back(w);
    }
  }
  fail(ErrorCode::InvalidInput, "no target reachable");
}

BfsResult bfs_order(const Graph& g, const std::vector<VertexId>& sources) {
  int n = g.vertex_count();
  BfsResult r;
  r.dist.assign(n, -1);
  std::deque<int> q;
  std::vector<VertexId> ss = sources;
  std::sort(ss.begin(), ss.end());
  for (int s : ss)
    if (r.dist[s] < 0) {
      r.dist[s] = 0;
      q.push_back(s);
      r.order.push_back(s);
    }
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    for (int w : g.neighbours(u))
      if (r.dist[w] < 0) {
        r.dist[w] = r.dist[u] + 1;
        q.push_back(w);
        r.order.push_back(w);
      }
  }
  return r;
}

namespace {

// DFS enumeration of chordless cycles in canonical orientation:
// path[0] is the smallest vertex of the cycle and path[1] < path.back().
struct InducedCycleEnum {
  const Graph& g;
  std::size_t budget;
  int max_len;  // 0 = unbounded; exact length when exact is set
  bool exact;
  EdgeId must_contain;  // -1 = none
  std::vector<std::vector<VertexId>> out;
  std::vector<VertexId> path;
  std::vector<char> on_path;

  InducedCycleEnum(const Graph& g_, std::size_t b, int ml, bool ex, EdgeId mc)
      : g(g_), budget(b), max_len(ml), exact(ex), must_contain(mc), on_path(g_.vertex_count(), 0) {}

  void run() {
    for (int s = 0; s < g.vertex_count() && out.size() < budget; ++s) {
      path.assign(1, s);
      on_path.assign(g.vertex_count(), 0);
      on_path[s] = 1;
      extend(s);
    }
  }

  void extend(int root) {
    if (out.size() >= budget) return;
    int len = static_cast<int>(path.size());
    VertexId last = path.back();
    for (VertexId w : g.neighbours(last)) {
      if (out.size() >= budget) return;
      if (w <= root) continue;  // canonical: root is the minimum vertex
      if (on_path[w]) continue;
      // chordless: w may touch only its predecessor, and the root at closure
      bool chord = false;
      for (int i = 1; i + 1 < len; ++i)
        if (g.has_edge(w, path[i])) {
          chord = true;
          break;
        }
      if (chord) continue;
      bool closes = len >= 2 && g.has_edge(w, root);
      if (closes) {
        if (path[1] < w && (!exact || len + 1 == max_len)) {
          std::vector<VertexId> cyc = path;
          cyc.push_back(w);
          if (must_contain < 0 || contains_edge(cyc)) out.push_back(std::move(cyc));
        }
        continue;  // a root-adjacent vertex cannot extend the path chordlessly
      }
      if (max_len && len + 1 >= max_len) continue;
      path.push_back(w);
      on_path[w] = 1;
      extend(root);
      on_path[w] = 0;
      path.pop_back();
    }
  }

  bool contains_edge(const std::vector<VertexId>& cyc) const {
    const Edge& e = g.edge(must_contain);
    int k = static_cast<int>(cyc.size());
    for (int i = 0; i < k; ++i)
      if (make_edge(cyc[i], cyc[(i + 1) % k]) == e) return true;
    return false;
  }
};

// plain simple-cycle search of exact length k through edge (u,v)
struct PlainCycleSearch {
  const Graph& g;
  int k;
  VertexId target;
  std::vector<char> used;

  bool dfs(VertexId at, int edges_used) {
    if (edges_used == k - 2) return g.has_edge(at, target);
    for (VertexId w : g.neighbours(at)) {
      if (w == target || used[w]) continue;
      used[w] = 1;
      if (dfs(w, edges_used + 1)) {
        used[w] = 0;
        return true;
      }
      used[w] = 0;
    }
    return false;
  }
};

}  // namespace

std::vector<std::vector<VertexId>> enumerate_induced_cycles(const Graph& g, std::size_t budget,
                                                            int max_len) {
  InducedCycleEnum e(g, budget, max_len, /*exact=*/false, /*must_contain=*/-1);
  e.run();
  return e.out;
}

std::vector<std::vector<VertexId>> induced_cycles_of_length_through(const Graph& g, EdgeId id,
                                                                    int k, std::size_t budget) {
  InducedCycleEnum e(g, budget, k, /*exact=*/true, id);
  e.run();
  return e.out;
}

bool edge_on_cycle_of_length(const Graph& g, EdgeId id, int k, bool induced_only) {
  if (k < 3) return false;
  if (induced_only) return !induced_cycles_of_length_through(g, id, k, 1).empty();
  const Edge& e = g.edge(id);
  PlainCycleSearch s{g, k, e.u, std::vector<char>(g.vertex_count(), 0)};
  s.used[e.v] = 1;
  return s.dfs(e.v, 0);
}

}  // namespace listdist
