#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "minrank/ff_linalg.hpp"
#include "minrank/graphs.hpp"

namespace minrank {

// f(u, v) = sum_i g_i(u) h_i(v), stored as a (|V| x R, row u = g(u)) and
// b (R x |V|, column v = h(v)).
struct BiRepresentation {
  FpMatrix a;
  FpMatrix b;

  std::size_t dimension() const { return a.cols(); }
  FpMatrix product() const { return matmul_fp(a, b); }
};

// Nonzero diagonal and zeros on every ordered non-adjacent pair of distinct vertices.
bool represents(const FpMatrix& m, const Graph& g);
bool represents(const FpMatrix& m, const DiGraph& g);

bool verify_birep(const Graph& g, const BiRepresentation& rep);
bool verify_birep(const DiGraph& g, const BiRepresentation& rep);

// prod_{j in [0,s) \ T} (<x,y> - j) over s-subsets.
BiRepresentation birep_kneser(unsigned d, unsigned s, const std::vector<unsigned>& T, PrimeModulus p);

// prod_{j=0}^{p-2} (<x,y> - j) for K(d, 2p-1, {p-1}).
BiRepresentation birep_gp(unsigned d, PrimeModulus p);

// 1 - <x,y>^(p-1) on the self-orthogonal vectors of F_p^d (the g2 vertex order).
BiRepresentation birep_g2_complement(unsigned d, PrimeModulus p);

// prod_i (x_i - y_i - 1) over F_3 on {0,1,2}^d.
BiRepresentation birep_directed_ternary(unsigned d);

// rank of a*b; throws IntegrityError when rep does not represent g.
std::size_t minrank_upper_from_birep(const Graph& g, const BiRepresentation& rep);
std::size_t minrank_upper_from_birep(const DiGraph& g, const BiRepresentation& rep);

// Exponent vectors of total degree `degree` in `vars` variables, lexicographic.
std::vector<std::vector<unsigned>> exponent_vectors(unsigned vars, unsigned degree);

}  // namespace minrank
