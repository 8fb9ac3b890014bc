#pragma once

#include <filesystem>
#include <ostream>
#include <variant>

#include "json.hpp"

#include "minrank/graphs.hpp"

namespace minrank {

using AnyGraph = std::variant<Graph, DiGraph>;

// {"n", "directed", "edges": [[i, j], ...], "labels": [...], "label_kind"}.
// Undirected edges are listed once with i < j. Subset labels are the sorted
// 1-based elements; field-vector labels are coordinate lists.
nlohmann::json graph_to_json(const Graph& g);
nlohmann::json graph_to_json(const DiGraph& g);
AnyGraph graph_from_json(const nlohmann::json& j);

// Compact serialization identical to graph_to_json(g).dump(), streamed.
void write_graph_json(std::ostream& out, const Graph& g);
void write_graph_json(std::ostream& out, const DiGraph& g);

AnyGraph read_graph_file(const std::filesystem::path& path);

}  // namespace minrank
