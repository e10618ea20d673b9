#include <string>

#include "doctest.h"
#include "listdist/graph6.hpp"
#include "test_support.hpp"

using namespace listdist;
using namespace listdist::testsupport;

namespace {

// independently written reference encoder: builds the column-major upper
// triangle as a 0/1 string and packs six bits at a time
std::string reference_encode(const Graph& g) {
  int n = g.vertex_count();
  std::string bits;
  for (int col = 1; col < n; ++col)
    for (int row = 0; row < col; ++row) bits.push_back(g.has_edge(row, col) ? '1' : '0');
  while (bits.size() % 6) bits.push_back('0');
  std::string out(1, static_cast<char>(n + 63));
  for (std::size_t i = 0; i < bits.size(); i += 6) {
    int value = 0;
    for (int b = 0; b < 6; ++b) value = value * 2 + (bits[i + b] == '1');
    out.push_back(static_cast<char>(value + 63));
  }
  return out;
}

}  // namespace

TEST_CASE("graph6 round trip against the reference encoder") {
  for (const Graph& g : {cycle_graph(5), complete_graph(4), petersen_graph(), star_graph(3),
                         paw_graph(), prism_graph(), Graph::from_edges(1, {})}) {
    std::string ref = reference_encode(g);
    Graph back = parse_graph6(ref);
    CHECK(back == g);
    CHECK(encode_graph6(g) == ref);
  }
}

TEST_CASE("graph6 of C5 has the right shape") {
  Graph g = parse_graph6(reference_encode(cycle_graph(5)));
  CHECK(g.vertex_count() == 5);
  CHECK(g.edge_count() == 5);
  for (int v = 0; v < 5; ++v) CHECK(g.degree(v) == 2);
}

TEST_CASE("graph6 of K4") {
  Graph g = parse_graph6(reference_encode(complete_graph(4)));
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 6);
}

TEST_CASE("known graph6 strings decode") {
  CHECK(parse_graph6("C~") == complete_graph(4));
  // canonical form of the 5-cycle: right shape, relabelled vertices
  Graph c5 = parse_graph6("DqK");
  CHECK(c5.vertex_count() == 5);
  CHECK(c5.edge_count() == 5);
  CHECK(analyze(c5).connected);
  CHECK(c5.max_degree() == 2);
  CHECK(parse_graph6(">>graph6<<C~") == complete_graph(4));
}

TEST_CASE("invalid graph6 input") {
  CHECK_THROWS_AS(parse_graph6("!"), Error);
  CHECK_THROWS_AS(parse_graph6(""), Error);
  CHECK_THROWS_AS(parse_graph6("C~~"), Error);  // body too long
  try {
    parse_graph6("!");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidGraph6);
  }
}
