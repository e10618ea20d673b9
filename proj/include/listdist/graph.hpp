#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "listdist/error.hpp"

namespace listdist {

using VertexId = int;
using EdgeId = int;

// Undirected edge stored canonically with u < v.
struct Edge {
  VertexId u = -1;
  VertexId v = -1;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend std::strong_ordering operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(VertexId a, VertexId b) {
  return a < b ? Edge{a, b} : Edge{b, a};
}

// Finite simple undirected graph with dense vertex ids and a canonical,
// lexicographically sorted edge list defining dense edge ids. Immutable
// after construction.
class Graph {
 public:
  Graph() = default;
  static Graph from_edges(int n, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  const std::vector<VertexId>& neighbours(VertexId v) const { return adj_[v]; }
  const std::vector<EdgeId>& incident_edges(VertexId v) const { return inc_[v]; }
  int degree(VertexId v) const { return static_cast<int>(adj_[v].size()); }
  int max_degree() const;
  EdgeId edge_id(VertexId u, VertexId v) const;  // -1 when absent
  bool has_edge(VertexId u, VertexId v) const { return edge_id(u, v) >= 0; }

  bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<VertexId>> adj_;
  std::vector<std::vector<EdgeId>> inc_;
};

struct StructureSummary {
  bool connected = false;
  int max_degree = 0;
  bool is_tree = false;
  std::vector<int> degree_histogram;  // histogram[d] = number of vertices of degree d
};

// Line-oriented "u v" pairs; '#' starts a comment.
Graph parse_edge_list(const std::string& text);

StructureSummary analyze(const Graph& g);

std::vector<int> connected_components(const Graph& g);  // component id per vertex

// Shortest cycle of the searched (sub)graph, hence chordless within it.
// If allowed_edges is given (one flag per edge id), the search is restricted
// to the subgraph formed by those edges.
std::optional<std::vector<VertexId>> find_induced_cycle(
    const Graph& g, const std::vector<char>* allowed_edges = nullptr);

// Minimum-length path from `from` to the nearest flagged target vertex.
// Ties break toward smaller vertex indices. Trivial path when `from` is a target.
std::vector<VertexId> shortest_path(const Graph& g, VertexId from,
                                    const std::vector<char>& targets);

struct BfsResult {
  std::vector<VertexId> order;  // nondecreasing distance, ties by index
  std::vector<int> dist;        // -1 = unreachable
};
BfsResult bfs_order(const Graph& g, const std::vector<VertexId>& sources);

// --- cycle machinery shared by the engines and the audits ---

// All chordless cycles, canonically oriented, up to `budget` cycles.
std::vector<std::vector<VertexId>> enumerate_induced_cycles(const Graph& g,
                                                            std::size_t budget,
                                                            int max_len = 0);

bool edge_on_cycle_of_length(const Graph& g, EdgeId e, int k, bool induced_only);

std::vector<std::vector<VertexId>> induced_cycles_of_length_through(
    const Graph& g, EdgeId e, int k, std::size_t budget);

}  // namespace listdist
