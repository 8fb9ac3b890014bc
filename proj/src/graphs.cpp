#include "minrank/graphs.hpp"

#include <algorithm>
#include <string>

#include "minrank/errors.hpp"
#include "minrank/ff_linalg.hpp"

namespace minrank {

namespace {

void guard_size(std::size_t n) {
  if (n > kMaxVertices) {
    throw ParameterError("graph with " + std::to_string(n) + " vertices exceeds the 2^22 vertex limit");
  }
}

void check_labels(std::size_t n, std::vector<VertexLabel>& labels) {
  if (labels.empty()) {
    labels.assign(n, std::monostate{});
  } else if (labels.size() != n) {
    throw ParameterError("label count does not match vertex count");
  }
}

void check_vertices(std::size_t n, std::span<const std::size_t> vertices) {
  for (auto v : vertices) {
    if (v >= n) throw ParameterError("vertex index " + std::to_string(v) + " out of range");
  }
}

std::uint64_t checked_power(std::uint64_t base, unsigned exp) {
  std::uint64_t out = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (out > kMaxVertices / base + 1) throw ParameterError("vertex count exceeds the 2^22 vertex limit");
    out *= base;
  }
  guard_size(out);
  return out;
}

}  // namespace

BitRelation::BitRelation(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

std::size_t BitRelation::row_count(std::size_t i) const {
  std::size_t c = 0;
  for (auto w : row(i)) c += static_cast<std::size_t>(__builtin_popcountll(w));
  return c;
}

Graph::Graph(std::size_t n, std::vector<VertexLabel> labels) : adj_((guard_size(n), n)), labels_(std::move(labels)) {
  check_labels(n, labels_);
}

void Graph::add_edge(std::size_t u, std::size_t v) {
  if (u >= size() || v >= size()) throw ParameterError("edge endpoint out of range");
  if (u == v) throw ParameterError("self-loops are not allowed");
  adj_.set(u, v);
  adj_.set(v, u);
}

std::size_t Graph::edge_count() const {
  std::size_t total = 0;
  for (std::size_t v = 0; v < size(); ++v) total += degree(v);
  return total / 2;
}

DiGraph::DiGraph(std::size_t n, std::vector<VertexLabel> labels)
    : adj_((guard_size(n), n)), labels_(std::move(labels)) {
  check_labels(n, labels_);
}

void DiGraph::add_arc(std::size_t u, std::size_t v) {
  if (u >= size() || v >= size()) throw ParameterError("arc endpoint out of range");
  if (u == v) throw ParameterError("self-loops are not allowed");
  adj_.set(u, v);
}

std::size_t DiGraph::arc_count() const {
  std::size_t total = 0;
  for (std::size_t v = 0; v < size(); ++v) total += out_degree(v);
  return total;
}

// ---------------------------------------------------------------------------

Graph kneser(unsigned d, unsigned s, const std::vector<unsigned>& T) {
  if (s == 0 || s > d) throw ParameterError("kneser requires 0 < s <= d");
  if (d > kMaxUniverse) throw ParameterError("kneser requires d <= 63");
  std::vector<bool> allowed(s, false);
  for (unsigned i : T) {
    if (i >= s) throw ParameterError("intersection size " + std::to_string(i) + " is not below s");
    allowed[i] = true;
  }
  guard_size(binomial(d, s));
  const auto sets = subsets_of_size(d, s);
  std::vector<VertexLabel> labels;
  labels.reserve(sets.size());
  for (auto m : sets) labels.emplace_back(SubsetVertex{m, d});
  Graph g(sets.size(), std::move(labels));
  for (std::size_t a = 0; a < sets.size(); ++a)
    for (std::size_t b = a + 1; b < sets.size(); ++b) {
      if (allowed[popcount(sets[a] & sets[b])]) g.add_edge(a, b);
    }
  return g;
}

std::vector<unsigned> residue_class(unsigned s, unsigned t, unsigned q) {
  if (q == 0) throw ParameterError("modulus q must be positive");
  std::vector<unsigned> T;
  for (unsigned i = 0; i < s; ++i) {
    if (i % q == t % q) T.push_back(i);
  }
  return T;
}

Graph kneser_mod(unsigned d, unsigned s, unsigned t, unsigned q) {
  if (t >= s) throw ParameterError("kneser_mod requires t < s");
  return kneser(d, s, residue_class(s, t, q));
}

std::vector<FieldVectorVertex> field_vectors(unsigned d, std::uint32_t p) {
  if (d == 0) throw ParameterError("dimension must be at least 1");
  (void)PrimeModulus(p);
  const std::uint64_t count = checked_power(p, d);
  std::vector<FieldVectorVertex> out;
  out.reserve(count);
  FieldVectorVertex v{std::vector<std::uint32_t>(d, 0), p};
  for (std::uint64_t k = 0; k < count; ++k) {
    out.push_back(v);
    // odometer increment, last coordinate fastest
    for (unsigned i = d; i-- > 0;) {
      if (++v.coords[i] < p) break;
      v.coords[i] = 0;
    }
  }
  return out;
}

std::uint32_t inner_product_mod(const FieldVectorVertex& u, const FieldVectorVertex& v) {
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < u.coords.size(); ++i) acc = (acc + std::uint64_t{u.coords[i]} * v.coords[i]) % u.p;
  return static_cast<std::uint32_t>(acc);
}

namespace {

Graph orthogonality_graph(unsigned d, std::uint32_t p, bool self_orthogonal) {
  std::vector<VertexLabel> labels;
  std::vector<FieldVectorVertex> verts;
  for (auto& v : field_vectors(d, p)) {
    if ((inner_product_mod(v, v) == 0) == self_orthogonal) verts.push_back(std::move(v));
  }
  labels.reserve(verts.size());
  for (const auto& v : verts) labels.emplace_back(v);
  Graph g(verts.size(), std::move(labels));
  for (std::size_t a = 0; a < verts.size(); ++a)
    for (std::size_t b = a + 1; b < verts.size(); ++b) {
      if (inner_product_mod(verts[a], verts[b]) != 0) g.add_edge(a, b);
    }
  return g;
}

}  // namespace

Graph g1(unsigned d, std::uint32_t p) { return orthogonality_graph(d, p, false); }
Graph g2(unsigned d, std::uint32_t p) { return orthogonality_graph(d, p, true); }

DiGraph directed_ternary(unsigned d) {
  const auto verts = field_vectors(d, 3);
  std::vector<VertexLabel> labels(verts.begin(), verts.end());
  DiGraph g(verts.size(), std::move(labels));
  for (std::size_t a = 0; a < verts.size(); ++a)
    for (std::size_t b = 0; b < verts.size(); ++b) {
      if (a == b) continue;
      bool arc = true;
      for (unsigned i = 0; i < d && arc; ++i) {
        const unsigned diff = (verts[a].coords[i] + 3 - verts[b].coords[i]) % 3;
        arc = diff != 1;
      }
      if (arc) g.add_arc(a, b);
    }
  return g;
}

Graph complement(const Graph& g) {
  Graph out(g.size(), g.labels());
  for (std::size_t u = 0; u < g.size(); ++u)
    for (std::size_t v = u + 1; v < g.size(); ++v) {
      if (!g.has_edge(u, v)) out.add_edge(u, v);
    }
  return out;
}

DiGraph complement(const DiGraph& g) {
  DiGraph out(g.size(), g.labels());
  for (std::size_t u = 0; u < g.size(); ++u)
    for (std::size_t v = 0; v < g.size(); ++v) {
      if (u != v && !g.has_arc(u, v)) out.add_arc(u, v);
    }
  return out;
}

bool is_independent_set(const Graph& g, std::span<const std::size_t> vertices) {
  check_vertices(g.size(), vertices);
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (vertices[i] != vertices[j] && g.has_edge(vertices[i], vertices[j])) return false;
    }
  return true;
}

namespace {

template <class G>
std::vector<VertexLabel> pick_labels(const G& g, std::span<const std::size_t> vertices) {
  std::vector<VertexLabel> labels;
  labels.reserve(vertices.size());
  for (auto v : vertices) labels.push_back(g.labels()[v]);
  return labels;
}

}  // namespace

Graph induced_subgraph(const Graph& g, std::span<const std::size_t> vertices) {
  check_vertices(g.size(), vertices);
  Graph out(vertices.size(), pick_labels(g, vertices));
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (g.has_edge(vertices[i], vertices[j])) out.add_edge(i, j);
    }
  return out;
}

DiGraph induced_subgraph(const DiGraph& g, std::span<const std::size_t> vertices) {
  check_vertices(g.size(), vertices);
  DiGraph out(vertices.size(), pick_labels(g, vertices));
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = 0; j < vertices.size(); ++j) {
      if (i != j && g.has_arc(vertices[i], vertices[j])) out.add_arc(i, j);
    }
  return out;
}

bool is_acyclic(const DiGraph& g) {
  // Kahn: repeatedly strip vertices with no incoming arcs.
  const std::size_t n = g.size();
  std::vector<std::size_t> indeg(n, 0);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) {
      if (g.has_arc(u, v)) ++indeg[v];
    }
  std::vector<std::size_t> ready;
  for (std::size_t v = 0; v < n; ++v) {
    if (indeg[v] == 0) ready.push_back(v);
  }
  std::size_t removed = 0;
  while (!ready.empty()) {
    const std::size_t u = ready.back();
    ready.pop_back();
    ++removed;
    for (std::size_t v = 0; v < n; ++v) {
      if (g.has_arc(u, v) && --indeg[v] == 0) ready.push_back(v);
    }
  }
  return removed == n;
}

DiGraph as_digraph(const Graph& g) {
  DiGraph out(g.size(), g.labels());
  for (std::size_t u = 0; u < g.size(); ++u)
    for (std::size_t v = 0; v < g.size(); ++v) {
      if (g.has_edge(u, v)) out.add_arc(u, v);
    }
  return out;
}

}  // namespace minrank
