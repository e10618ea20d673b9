#include "listdist/json_io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "listdist/graph6.hpp"

namespace listdist {

json lists_to_json(const ListAssignment& L) {
  json j;
  j["universe"] = L.universe;
  j["lists"] = L.lists;
  return j;
}

ListAssignment lists_from_json(const Graph& g, const json& j) {
  if (!j.contains("universe") || !j.contains("lists"))
    fail(ErrorCode::InvalidInput, "list file needs 'universe' and 'lists'");
  int universe = j["universe"].get<int>();
  auto lists = j["lists"].get<std::vector<std::vector<ColourId>>>();
  return make_list_assignment(g, universe, std::move(lists));
}

json colouring_to_json(const Graph& g, const EdgeColouring& c) {
  json edges = json::array();
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!c.coloured(e)) continue;
    edges.push_back({g.edge(e).u, g.edge(e).v, c.colour[e]});
  }
  return json{{"edges", edges}};
}

EdgeColouring colouring_from_json(const Graph& g, const json& j) {
  if (!j.contains("edges")) fail(ErrorCode::InvalidInput, "colouring file needs 'edges'");
  EdgeColouring c(g.edge_count());
  for (const auto& row : j["edges"]) {
    if (!row.is_array() || row.size() != 3)
      fail(ErrorCode::InvalidInput, "colouring rows are [u, v, colour]");
    EdgeId e = g.edge_id(row[0].get<int>(), row[1].get<int>());
    if (e < 0) fail(ErrorCode::InvalidInput, "colouring names a missing edge");
    c.colour[e] = row[2].get<int>();
  }
  return c;
}

json trace_to_json(const Trace& t) {
  json arr = json::array();
  for (const auto& r : t.records) {
    json rec{{"step", r.step}, {"rule", r.rule}, {"vertex", r.vertex}};
    json assigned = json::array();
    for (auto [e, c] : r.assigned) assigned.push_back({e, c});
    rec["assigned"] = assigned;
    arr.push_back(rec);
  }
  return arr;
}

std::string dot_export(const Graph& g, const EdgeColouring& c) {
  static const char* names[] = {"red",    "blue",   "green",  "orange", "purple",
                                "brown",  "cyan",   "magenta", "gold",  "gray",
                                "pink",   "olive",  "navy",   "teal",   "maroon"};
  constexpr int kNames = sizeof(names) / sizeof(names[0]);
  std::ostringstream out;
  out << "graph G {\n";
  for (int v = 0; v < g.vertex_count(); ++v) out << "  " << v << ";\n";
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    out << "  " << g.edge(e).u << " -- " << g.edge(e).v;
    if (c.coloured(e))
      out << " [color=" << names[c.colour[e] % kNames] << ", label=" << c.colour[e] << "]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

Graph load_graph_text(const std::string& text) {
  // edge lists start with a digit or a comment; graph6 size bytes sit above
  // the digit range, so the first meaningful character decides
  for (char ch : text) {
    if (ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r') continue;
    if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '#') return parse_edge_list(text);
    break;
  }
  std::string first_line;
  std::istringstream in(text);
  while (std::getline(in, first_line))
    if (!first_line.empty()) break;
  return parse_graph6(first_line);
}

}  // namespace listdist
