#include <algorithm>
#include <set>

#include "doctest.h"
#include "listdist/graph.hpp"
#include "test_support.hpp"

using namespace listdist;
using namespace listdist::testsupport;

TEST_CASE("parse_edge_list builds a triangle") {
  Graph g = parse_edge_list("0 1\n1 2\n2 0");
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 3);
  CHECK(g.has_edge(0, 2));
}

TEST_CASE("parse_edge_list accepts comments and blank lines") {
  Graph g = parse_edge_list("# a triangle\n0 1\n\n1 2 # chord-free\n2 0\n");
  CHECK(g.edge_count() == 3);
}

TEST_CASE("parse_edge_list rejects duplicates, loops and junk") {
  CHECK_THROWS_AS(parse_edge_list("0 1\n0 1"), Error);
  CHECK_THROWS_AS(parse_edge_list("0 1\n1 0"), Error);
  CHECK_THROWS_AS(parse_edge_list("0 0"), Error);
  CHECK_THROWS_AS(parse_edge_list("0 x"), Error);
  CHECK_THROWS_AS(parse_edge_list("0 1 2"), Error);
  try {
    parse_edge_list("0 0");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::LoopEdge);
  }
}

TEST_CASE("analyze basic shapes") {
  auto c5 = analyze(cycle_graph(5));
  CHECK(c5.connected);
  CHECK(c5.max_degree == 2);
  CHECK_FALSE(c5.is_tree);

  auto star = analyze(star_graph(3));
  CHECK(star.connected);
  CHECK(star.max_degree == 3);
  CHECK(star.is_tree);
  CHECK(star.degree_histogram[1] == 3);
  CHECK(star.degree_histogram[3] == 1);

  Graph two_edges = Graph::from_edges(4, {{0, 1}, {2, 3}});
  CHECK_FALSE(analyze(two_edges).connected);
}

TEST_CASE("find_induced_cycle returns a chordless cycle") {
  // C4 plus one chord: every returned cycle is a triangle
  Graph g = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}});
  auto cyc = find_induced_cycle(g);
  REQUIRE(cyc.has_value());
  CHECK(cyc->size() == 3);

  CHECK_FALSE(find_induced_cycle(path_graph(5)).has_value());
  CHECK_FALSE(find_induced_cycle(star_graph(4)).has_value());
}

TEST_CASE("find_induced_cycle on the Petersen graph matches its girth") {
  Graph g = petersen_graph();
  // independent exhaustive girth computation: BFS on every edge removal
  int girth = 1 << 20;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    std::vector<char> allowed(g.edge_count(), 1);
    allowed[e] = 0;
    std::vector<char> target(g.vertex_count(), 0);
    target[g.edge(e).v] = 1;
    auto bfs = bfs_order(g, {g.edge(e).u});
    (void)bfs;
    // distance without edge e
    std::vector<int> dist(g.vertex_count(), -1);
    std::vector<VertexId> queue{g.edge(e).u};
    dist[g.edge(e).u] = 0;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      VertexId x = queue[qi];
      for (EdgeId id : g.incident_edges(x)) {
        if (id == e) continue;
        VertexId w = g.edge(id).u == x ? g.edge(id).v : g.edge(id).u;
        if (dist[w] < 0) {
          dist[w] = dist[x] + 1;
          queue.push_back(w);
        }
      }
    }
    if (dist[g.edge(e).v] >= 0) girth = std::min(girth, dist[g.edge(e).v] + 1);
  }
  CHECK(girth == 5);
  auto cyc = find_induced_cycle(g);
  REQUIRE(cyc.has_value());
  CHECK(static_cast<int>(cyc->size()) == girth);
}

TEST_CASE("induced cycle never has a chord") {
  for (const auto& g : {paw_graph(), prism_graph(), petersen_graph(), complete_graph(5)}) {
    auto cyc = find_induced_cycle(g);
    REQUIRE(cyc.has_value());
    int k = static_cast<int>(cyc->size());
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) {
        bool consecutive = (j == i + 1) || (i == 0 && j == k - 1);
        if (!consecutive) CHECK_FALSE(g.has_edge((*cyc)[i], (*cyc)[j]));
      }
  }
}

TEST_CASE("restricted search keeps to the allowed subgraph") {
  Graph g = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}});
  std::vector<char> allowed(g.edge_count(), 1);
  allowed[g.edge_id(0, 2)] = 0;  // drop the chord: only the 4-cycle remains
  auto cyc = find_induced_cycle(g, &allowed);
  REQUIRE(cyc.has_value());
  CHECK(cyc->size() == 4);
}

TEST_CASE("shortest_path") {
  Graph paw = paw_graph();
  std::vector<char> triangle(4, 0);
  triangle[0] = triangle[1] = triangle[2] = 1;
  auto p = shortest_path(paw, 3, triangle);
  CHECK(p == std::vector<VertexId>{3, 0});
  auto trivial = shortest_path(paw, 0, triangle);
  CHECK(trivial == std::vector<VertexId>{0});

  Graph p4 = path_graph(4);
  std::vector<char> last(4, 0);
  last[3] = 1;
  CHECK(shortest_path(p4, 0, last) == std::vector<VertexId>{0, 1, 2, 3});
}

TEST_CASE("shortest_path length equals an independent distance table") {
  Graph g = petersen_graph();
  for (VertexId from = 0; from < g.vertex_count(); ++from) {
    std::vector<char> targets(g.vertex_count(), 0);
    targets[(from + 3) % 10] = 1;
    targets[(from + 7) % 10] = 1;
    auto path = shortest_path(g, from, targets);
    auto bfs = bfs_order(g, {from});
    int want = std::min(bfs.dist[(from + 3) % 10], bfs.dist[(from + 7) % 10]);
    CHECK(static_cast<int>(path.size()) - 1 == want);
  }
}

TEST_CASE("bfs_order distances") {
  CHECK(bfs_order(cycle_graph(6), {0}).dist == std::vector<int>{0, 1, 2, 3, 2, 1});
  CHECK(bfs_order(complete_graph(4), {0}).dist == std::vector<int>{0, 1, 1, 1});
  CHECK(bfs_order(path_graph(4), {1}).dist == std::vector<int>{1, 0, 1, 2});
}

TEST_CASE("plain and induced length-k cycle tests") {
  Graph g = complete_graph(4);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    CHECK(edge_on_cycle_of_length(g, e, 3, false));
    CHECK(edge_on_cycle_of_length(g, e, 3, true));
    CHECK(edge_on_cycle_of_length(g, e, 4, false));
    CHECK_FALSE(edge_on_cycle_of_length(g, e, 4, true));  // 4-cycles in K4 have chords
  }
  Graph c6 = cycle_graph(6);
  CHECK(edge_on_cycle_of_length(c6, 0, 6, true));
  CHECK_FALSE(edge_on_cycle_of_length(c6, 0, 5, false));
}

TEST_CASE("enumerate_induced_cycles finds each chordless cycle once") {
  Graph g = prism_graph();
  auto cycles = enumerate_induced_cycles(g, 10000);
  std::set<std::set<VertexId>> seen;
  for (const auto& c : cycles) seen.insert(std::set<VertexId>(c.begin(), c.end()));
  CHECK(cycles.size() == seen.size());
  // the prism has two triangles and three induced 4-cycles
  int tri = 0, quad = 0;
  for (const auto& c : cycles) {
    if (c.size() == 3) ++tri;
    if (c.size() == 4) ++quad;
  }
  CHECK(tri == 2);
  CHECK(quad == 3);
}
