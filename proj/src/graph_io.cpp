#include "minrank/graph_io.hpp"

#include <fstream>
#include <ostream>
#include <string>

#include "minrank/errors.hpp"

namespace minrank {

using nlohmann::json;

namespace {

void put_labels(json& out, const std::vector<VertexLabel>& labels) {
  json arr = json::array();
  std::string kind = "none";
  for (const auto& l : labels) {
    if (const auto* s = std::get_if<SubsetVertex>(&l)) {
      kind = "subset";
      out["universe"] = s->d;
      json elems = json::array();
      for (unsigned i = 0; i < s->d; ++i) {
        if ((s->mask >> i) & 1u) elems.push_back(i + 1);
      }
      arr.push_back(elems);
    } else if (const auto* v = std::get_if<FieldVectorVertex>(&l)) {
      kind = "vector";
      out["field"] = v->p;
      arr.push_back(v->coords);
    }
  }
  out["label_kind"] = kind;
  out["labels"] = kind == "none" ? json::array() : arr;
}

std::vector<VertexLabel> get_labels(const json& j, std::size_t n) {
  const std::string kind = j.value("label_kind", std::string("none"));
  if (kind == "none" || !j.contains("labels") || j["labels"].empty()) return {};
  const auto& arr = j.at("labels");
  if (arr.size() != n) throw FormatError("label count does not match n");
  std::vector<VertexLabel> out;
  out.reserve(n);
  if (kind == "subset") {
    const unsigned d = j.at("universe").get<unsigned>();
    for (const auto& elems : arr) {
      SubsetMask m = 0;
      for (const auto& e : elems) {
        const unsigned x = e.get<unsigned>();
        if (x < 1 || x > d) throw FormatError("subset element out of range");
        m |= SubsetMask{1} << (x - 1);
      }
      out.emplace_back(SubsetVertex{m, d});
    }
  } else if (kind == "vector") {
    const auto p = j.at("field").get<std::uint32_t>();
    for (const auto& coords : arr) out.emplace_back(FieldVectorVertex{coords.get<std::vector<std::uint32_t>>(), p});
  } else {
    throw FormatError("unknown label_kind '" + kind + "'");
  }
  return out;
}

}  // namespace

json graph_to_json(const Graph& g) {
  json out;
  out["n"] = g.size();
  out["directed"] = false;
  json edges = json::array();
  for (std::size_t u = 0; u < g.size(); ++u)
    for (std::size_t v = u + 1; v < g.size(); ++v) {
      if (g.has_edge(u, v)) edges.push_back({u, v});
    }
  out["edges"] = std::move(edges);
  put_labels(out, g.labels());
  return out;
}

json graph_to_json(const DiGraph& g) {
  json out;
  out["n"] = g.size();
  out["directed"] = true;
  json edges = json::array();
  for (std::size_t u = 0; u < g.size(); ++u)
    for (std::size_t v = 0; v < g.size(); ++v) {
      if (g.has_arc(u, v)) edges.push_back({u, v});
    }
  out["edges"] = std::move(edges);
  put_labels(out, g.labels());
  return out;
}

namespace {

// Same bytes as graph_to_json(g).dump(), without materialising the edge list.
template <class G, class Arc>
void stream_graph(std::ostream& out, const G& g, bool directed, Arc arc) {
  json meta;
  meta["n"] = g.size();
  meta["directed"] = directed;
  meta["edges"] = json::array();
  put_labels(meta, g.labels());
  const std::string text = meta.dump();
  const std::string slot = "\"edges\":[]";
  const auto at = text.find(slot);
  out.write(text.data(), static_cast<std::streamsize>(at + slot.size() - 1));
  std::string buf;
  bool first = true;
  for (std::size_t u = 0; u < g.size(); ++u) {
    buf.clear();
    for (std::size_t v = directed ? 0 : u + 1; v < g.size(); ++v) {
      if (!arc(u, v)) continue;
      if (!first) buf += ',';
      first = false;
      buf += '[';
      buf += std::to_string(u);
      buf += ',';
      buf += std::to_string(v);
      buf += ']';
    }
    out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
  }
  out.write(text.data() + at + slot.size() - 1, static_cast<std::streamsize>(text.size() - at - slot.size() + 1));
}

}  // namespace

void write_graph_json(std::ostream& out, const Graph& g) {
  stream_graph(out, g, false, [&g](std::size_t u, std::size_t v) { return g.has_edge(u, v); });
}

void write_graph_json(std::ostream& out, const DiGraph& g) {
  stream_graph(out, g, true, [&g](std::size_t u, std::size_t v) { return g.has_arc(u, v); });
}

AnyGraph graph_from_json(const json& j) {
  try {
    const auto n = j.at("n").get<std::size_t>();
    const bool directed = j.value("directed", false);
    auto labels = get_labels(j, n);
    if (directed) {
      DiGraph g(n, std::move(labels));
      for (const auto& e : j.at("edges")) g.add_arc(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>());
      return g;
    }
    Graph g(n, std::move(labels));
    for (const auto& e : j.at("edges")) g.add_edge(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>());
    return g;
  } catch (const json::exception& e) {
    throw FormatError(std::string("graph JSON: ") + e.what());
  }
}

AnyGraph read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw FormatError(std::string("graph JSON: ") + e.what());
  }
  return graph_from_json(j);
}

}  // namespace minrank
