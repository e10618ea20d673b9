#pragma once

#include <string>

#include "json.hpp"
#include "listdist/graph.hpp"
#include "listdist/list_model.hpp"
#include "listdist/trace.hpp"

namespace listdist {

using json = nlohmann::json;

json lists_to_json(const ListAssignment& L);
ListAssignment lists_from_json(const Graph& g, const json& j);

json colouring_to_json(const Graph& g, const EdgeColouring& c);
EdgeColouring colouring_from_json(const Graph& g, const json& j);

json trace_to_json(const Trace& t);

// Static DOT rendering with one colour name per colour id.
std::string dot_export(const Graph& g, const EdgeColouring& c);

// Auto-detects edge-list or graph6 content.
Graph load_graph_text(const std::string& text);

}  // namespace listdist
