#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "minrank/combinatorics.hpp"

namespace minrank {

// Constructors refuse anything larger.
inline constexpr std::size_t kMaxVertices = std::size_t{1} << 22;

struct SubsetVertex {
  SubsetMask mask = 0;
  unsigned d = 0;
  friend bool operator==(const SubsetVertex&, const SubsetVertex&) = default;
};

struct FieldVectorVertex {
  std::vector<std::uint32_t> coords;
  std::uint32_t p = 0;
  friend bool operator==(const FieldVectorVertex&, const FieldVectorVertex&) = default;
};

using VertexLabel = std::variant<std::monostate, SubsetVertex, FieldVectorVertex>;

// n x n bit relation, one packed row per vertex.
class BitRelation {
 public:
  explicit BitRelation(std::size_t n = 0);

  std::size_t size() const { return n_; }
  std::size_t words_per_row() const { return words_; }
  bool test(std::size_t i, std::size_t j) const {
    return (bits_[i * words_ + j / 64] >> (j % 64)) & 1u;
  }
  void set(std::size_t i, std::size_t j) { bits_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64); }
  void reset(std::size_t i, std::size_t j) { bits_[i * words_ + j / 64] &= ~(std::uint64_t{1} << (j % 64)); }
  std::span<const std::uint64_t> row(std::size_t i) const { return {bits_.data() + i * words_, words_}; }
  std::size_t row_count(std::size_t i) const;

  friend bool operator==(const BitRelation&, const BitRelation&) = default;

 private:
  std::size_t n_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

// Simple undirected graph: symmetric, irreflexive adjacency.
class Graph {
 public:
  explicit Graph(std::size_t n, std::vector<VertexLabel> labels = {});

  std::size_t size() const { return adj_.size(); }
  bool has_edge(std::size_t u, std::size_t v) const { return adj_.test(u, v); }
  void add_edge(std::size_t u, std::size_t v);
  std::size_t degree(std::size_t v) const { return adj_.row_count(v); }
  std::size_t edge_count() const;
  const BitRelation& adjacency() const { return adj_; }
  const std::vector<VertexLabel>& labels() const { return labels_; }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  BitRelation adj_;
  std::vector<VertexLabel> labels_;
};

// Directed graph without self-loops.
class DiGraph {
 public:
  explicit DiGraph(std::size_t n, std::vector<VertexLabel> labels = {});

  std::size_t size() const { return adj_.size(); }
  bool has_arc(std::size_t u, std::size_t v) const { return adj_.test(u, v); }
  void add_arc(std::size_t u, std::size_t v);
  std::size_t out_degree(std::size_t v) const { return adj_.row_count(v); }
  std::size_t arc_count() const;
  const BitRelation& adjacency() const { return adj_; }
  const std::vector<VertexLabel>& labels() const { return labels_; }

  friend bool operator==(const DiGraph&, const DiGraph&) = default;

 private:
  BitRelation adj_;
  std::vector<VertexLabel> labels_;
};

// Generalized Kneser graph: s-subsets of [d], adjacent iff |A n B| lies in T.
// Vertices in ascending bitmask order.
Graph kneser(unsigned d, unsigned s, const std::vector<unsigned>& T);

// { i in [0, s) : i = t (mod q) }
std::vector<unsigned> residue_class(unsigned s, unsigned t, unsigned q);

// kneser(d, s, residue_class(s, t, q))
Graph kneser_mod(unsigned d, unsigned s, unsigned t, unsigned q);

// All of F_p^d in lexicographic order, first coordinate most significant.
std::vector<FieldVectorVertex> field_vectors(unsigned d, std::uint32_t p);

std::uint32_t inner_product_mod(const FieldVectorVertex& u, const FieldVectorVertex& v);

// Non-self-orthogonal vectors of F_p^d, adjacent iff not orthogonal.
Graph g1(unsigned d, std::uint32_t p);
// Self-orthogonal vectors of F_p^d (zero vector included), adjacent iff not orthogonal.
Graph g2(unsigned d, std::uint32_t p);

// Vertices {0,1,2}^d; (u, v) is an arc iff u != v and u - v lies in {0,2}^d mod 3.
DiGraph directed_ternary(unsigned d);

Graph complement(const Graph& g);
DiGraph complement(const DiGraph& g);

bool is_independent_set(const Graph& g, std::span<const std::size_t> vertices);
Graph induced_subgraph(const Graph& g, std::span<const std::size_t> vertices);
DiGraph induced_subgraph(const DiGraph& g, std::span<const std::size_t> vertices);
bool is_acyclic(const DiGraph& g);

// Undirected graph as a digraph with both orientations of every edge.
DiGraph as_digraph(const Graph& g);

}  // namespace minrank
