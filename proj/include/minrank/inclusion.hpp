#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "minrank/ff_linalg.hpp"

namespace minrank {

// Integer-valued polynomial sum_k coeffs[k] * C(x, k).
class BinomialPoly {
 public:
  BinomialPoly() = default;
  explicit BinomialPoly(std::vector<mpz_class> coeffs);

  const std::vector<mpz_class>& coeffs() const { return coeffs_; }
  // Index of the last nonzero coefficient; -1 for the zero polynomial.
  int degree() const;
  mpz_class operator()(const mpz_class& x) const;

  friend bool operator==(const BinomialPoly&, const BinomialPoly&) = default;

 private:
  std::vector<mpz_class> coeffs_;
};

// Forward differences at 0 of an integer polynomial of degree <= max_degree.
template <class F>
BinomialPoly binomial_basis_from_values(F&& eval, unsigned max_degree) {
  std::vector<mpz_class> values;
  values.reserve(max_degree + 1);
  for (unsigned x = 0; x <= max_degree; ++x) values.push_back(eval(mpz_class(x)));
  std::vector<mpz_class> coeffs;
  coeffs.reserve(max_degree + 1);
  for (unsigned k = 0; k <= max_degree; ++k) {
    coeffs.push_back(values.front());
    for (std::size_t i = 0; i + 1 < values.size(); ++i) values[i] = values[i + 1] - values[i];
    values.pop_back();
  }
  return BinomialPoly(std::move(coeffs));
}

// prod_j (x - roots[j]) in the binomial basis.
BinomialPoly binomial_basis_of_roots(const std::vector<long>& roots);

// C(x - t - 1, q - 1) in the binomial basis (degree q - 1).
BinomialPoly binomial_basis_shifted(unsigned t, unsigned q);

struct InclusionMatrix {
  unsigned d;
  unsigned s;
  unsigned k;
  IntMatrix matrix;  // C(d,s) x C(d,k); entry (A,B) = [B subset of A]
};

InclusionMatrix inclusion_matrix(unsigned d, unsigned s, unsigned k);

// N(s,k) N(s,k)^T, whose (A,B) entry is C(|A n B|, k).
IntMatrix m_matrix(unsigned d, unsigned s, unsigned k);

// N(s,l) N(l,k) == C(s-k, l-k) N(s,k), checked by exact multiplication.
bool triple_product_identity(unsigned d, unsigned s, unsigned l, unsigned k);

struct RankBoundCombination {
  IntMatrix matrix;     // sum_k a_k M(s,k)
  std::uint64_t bound;  // C(d, degree)
};

RankBoundCombination rank_bound_combination(unsigned d, unsigned s, const BinomialPoly& poly);

// (m(|A n B|) mod p) over s-subsets, where m has roots {0..s-1} \ T.
FpMatrix rep_matrix_kneser(unsigned d, unsigned s, const std::vector<unsigned>& T, PrimeModulus p);

// (C(|A n B| - t - 1, q - 1) mod p) over s-subsets. Requires q a power of p,
// q <= s + 1 and s = t (mod q).
FpMatrix rep_matrix_kneser_mod(unsigned d, unsigned s, unsigned t, unsigned q, PrimeModulus p);

// Assemble (m(|A n B|) mod p) for an arbitrary binomial-basis polynomial.
FpMatrix intersection_matrix(unsigned d, unsigned s, const BinomialPoly& poly, PrimeModulus p);

// Whether p | C(r-1, q-1), decided from base-p digits. q must be a power of p.
bool lucas_divisibility(std::uint64_t r, std::uint64_t q, std::uint64_t p);

}  // namespace minrank
