#include "minrank/polyrep.hpp"

#include <string>

#include "minrank/combinatorics.hpp"
#include "minrank/errors.hpp"
#include "minrank/inclusion.hpp"

namespace minrank {

namespace {

template <class Adjacent>
bool represents_impl(const FpMatrix& m, std::size_t n, Adjacent&& adjacent) {
  if (m.rows() != n || m.cols() != n) throw ParameterError("matrix shape does not match vertex count");
  for (std::size_t u = 0; u < n; ++u) {
    if (m.get(u, u) == 0) return false;
  }
  if (m.is_packed()) {
    // Row u may only be nonzero on u and its out-neighbors.
    for (std::size_t u = 0; u < n; ++u) {
      const auto row = m.packed_row(u);
      for (std::size_t w = 0; w < row.size(); ++w) {
        std::uint64_t bits = row[w];
        while (bits) {
          const std::size_t v = w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits));
          bits &= bits - 1;
          if (v != u && !adjacent(u, v)) return false;
        }
      }
    }
    return true;
  }
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) {
      if (u != v && !adjacent(u, v) && m.get(u, v) != 0) return false;
    }
  return true;
}

void check_shapes(const BiRepresentation& rep, std::size_t n) {
  if (rep.a.rows() != n || rep.b.cols() != n || rep.a.cols() != rep.b.rows()) {
    throw ParameterError("bi-representation shape does not match the graph");
  }
}

// Columns indexed by subsets S with |S| <= degree; g_S(v) = [S in v] and
// h_S(u) = a_{|S|} [S in u]. Sums to m(|A n B|) by sum_{|S|=k} [S in A n B] = C(|A n B|, k).
BiRepresentation subset_monomial_birep(unsigned d, unsigned s, const BinomialPoly& poly, PrimeModulus p) {
  const int deg = std::max(poly.degree(), 0);
  const auto verts = subsets_of_size(d, s);
  const auto monos = subsets_up_to_size(d, static_cast<unsigned>(deg));
  std::vector<std::uint32_t> coeff(static_cast<std::size_t>(deg) + 1, 0);
  for (std::size_t k = 0; k < poly.coeffs().size(); ++k) coeff[k] = p.reduce(poly.coeffs()[k]);

  BiRepresentation rep{FpMatrix(verts.size(), monos.size(), p), FpMatrix(monos.size(), verts.size(), p)};
  for (std::size_t v = 0; v < verts.size(); ++v)
    for (std::size_t c = 0; c < monos.size(); ++c) {
      if ((monos[c] & ~verts[v]) != 0) continue;
      rep.a.set(v, c, 1);
      const auto h = coeff[popcount(monos[c])];
      if (h) rep.b.set(c, v, h);
    }
  return rep;
}

}  // namespace

bool represents(const FpMatrix& m, const Graph& g) {
  return represents_impl(m, g.size(), [&](std::size_t u, std::size_t v) { return g.has_edge(u, v); });
}

bool represents(const FpMatrix& m, const DiGraph& g) {
  return represents_impl(m, g.size(), [&](std::size_t u, std::size_t v) { return g.has_arc(u, v); });
}

bool verify_birep(const Graph& g, const BiRepresentation& rep) {
  check_shapes(rep, g.size());
  return represents(rep.product(), g);
}

bool verify_birep(const DiGraph& g, const BiRepresentation& rep) {
  check_shapes(rep, g.size());
  return represents(rep.product(), g);
}

BiRepresentation birep_kneser(unsigned d, unsigned s, const std::vector<unsigned>& T, PrimeModulus p) {
  if (p.value() <= s) throw ParameterError("birep_kneser requires p > s");
  if (s == 0 || s > d) throw ParameterError("birep_kneser requires 0 < s <= d");
  std::vector<bool> in_t(s, false);
  for (unsigned i : T) {
    if (i >= s) throw ParameterError("intersection size " + std::to_string(i) + " is not below s");
    in_t[i] = true;
  }
  std::vector<long> roots;
  for (unsigned j = 0; j < s; ++j) {
    if (!in_t[j]) roots.push_back(j);
  }
  return subset_monomial_birep(d, s, binomial_basis_of_roots(roots), p);
}

BiRepresentation birep_gp(unsigned d, PrimeModulus p) {
  const unsigned pv = p.value();
  if (d < 2 * pv - 1) throw ParameterError("birep_gp requires d >= 2p - 1");
  std::vector<long> roots;
  for (unsigned j = 0; j + 1 < pv; ++j) roots.push_back(j);
  return subset_monomial_birep(d, 2 * pv - 1, binomial_basis_of_roots(roots), p);
}

std::vector<std::vector<unsigned>> exponent_vectors(unsigned vars, unsigned degree) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> e(vars, 0);
  // lexicographic over (e_1, ..., e_vars) with e_vars fixed by the remaining degree
  auto rec = [&](auto&& self, unsigned i, unsigned left) -> void {
    if (i + 1 == vars) {
      e[i] = left;
      out.push_back(e);
      return;
    }
    for (unsigned x = 0; x <= left; ++x) {
      e[i] = x;
      self(self, i + 1, left - x);
    }
  };
  if (vars == 0) {
    if (degree == 0) out.emplace_back();
    return out;
  }
  rec(rec, 0, degree);
  return out;
}

BiRepresentation birep_g2_complement(unsigned d, PrimeModulus p) {
  const Graph g = g2(d, p.value());
  const unsigned deg = p.value() - 1;
  const auto exps = exponent_vectors(d, deg);
  const std::size_t n = g.size();
  const std::size_t R = exps.size() + 1;

  // multinomial(p-1; e) = (p-1)! / prod e_i!, all factorials invertible mod p
  std::vector<std::uint32_t> fact(deg + 1, 1);
  for (unsigned i = 1; i <= deg; ++i) fact[i] = p.mul(fact[i - 1], i);

  BiRepresentation rep{FpMatrix(n, R, p), FpMatrix(R, n, p)};
  for (std::size_t v = 0; v < n; ++v) {
    rep.a.set(v, 0, 1);
    rep.b.set(0, v, 1);
  }
  for (std::size_t c = 0; c < exps.size(); ++c) {
    const auto& e = exps[c];
    std::uint32_t denom = 1;
    for (unsigned x : e) denom = p.mul(denom, fact[x]);
    const std::uint32_t neg_multi = p.sub(0, p.mul(fact[deg], p.inverse(denom)));
    for (std::size_t v = 0; v < n; ++v) {
      const auto& coords = std::get<FieldVectorVertex>(g.labels()[v]).coords;
      std::uint32_t mono = 1;
      for (unsigned i = 0; i < d; ++i) mono = p.mul(mono, p.pow(coords[i], e[i]));
      if (mono == 0) continue;
      rep.a.set(v, c + 1, mono);
      rep.b.set(c + 1, v, p.mul(neg_multi, mono));
    }
  }
  return rep;
}

BiRepresentation birep_directed_ternary(unsigned d) {
  const PrimeModulus p(3);
  const auto verts = field_vectors(d, 3);
  if (d >= 22) throw ParameterError("birep_directed_ternary dimension too large");
  const std::size_t R = std::size_t{1} << d;
  BiRepresentation rep{FpMatrix(verts.size(), R, p), FpMatrix(R, verts.size(), p)};
  for (std::size_t v = 0; v < verts.size(); ++v) {
    const auto& x = verts[v].coords;
    for (std::size_t S = 0; S < R; ++S) {
      std::uint32_t g = 1;
      std::uint32_t h = 1;
      for (unsigned i = 0; i < d; ++i) {
        if ((S >> i) & 1u) {
          g = p.mul(g, x[i]);
        } else {
          h = p.mul(h, p.sub(p.sub(0, x[i]), 1));
        }
      }
      if (g) rep.a.set(v, S, g);
      if (h) rep.b.set(S, v, h);
    }
  }
  return rep;
}

std::size_t minrank_upper_from_birep(const Graph& g, const BiRepresentation& rep) {
  check_shapes(rep, g.size());
  const FpMatrix m = rep.product();
  if (!represents(m, g)) throw IntegrityError("bi-representation does not represent the graph");
  return rank_fp(m);
}

std::size_t minrank_upper_from_birep(const DiGraph& g, const BiRepresentation& rep) {
  check_shapes(rep, g.size());
  const FpMatrix m = rep.product();
  if (!represents(m, g)) throw IntegrityError("bi-representation does not represent the graph");
  return rank_fp(m);
}

}  // namespace minrank
