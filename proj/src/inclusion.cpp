#include "minrank/inclusion.hpp"

#include <algorithm>
#include <string>

#include "minrank/combinatorics.hpp"
#include "minrank/errors.hpp"

namespace minrank {

BinomialPoly::BinomialPoly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

int BinomialPoly::degree() const {
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    if (coeffs_[k] != 0) return static_cast<int>(k);
  }
  return -1;
}

mpz_class BinomialPoly::operator()(const mpz_class& x) const {
  mpz_class acc = 0;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] != 0) acc += coeffs_[k] * binomial_big(x, k);
  }
  return acc;
}

BinomialPoly binomial_basis_of_roots(const std::vector<long>& roots) {
  auto m = [&](const mpz_class& x) {
    mpz_class v = 1;
    for (long r : roots) v *= x - r;
    return v;
  };
  return binomial_basis_from_values(m, static_cast<unsigned>(roots.size()));
}

BinomialPoly binomial_basis_shifted(unsigned t, unsigned q) {
  if (q == 0) throw ParameterError("binomial_basis_shifted requires q >= 1");
  auto m = [&](const mpz_class& x) { return binomial_big(x - t - 1, q - 1); };
  return binomial_basis_from_values(m, q - 1);
}

// ---------------------------------------------------------------------------

namespace {

void check_order(unsigned d, unsigned s, unsigned k) {
  if (!(k <= s && s <= d)) {
    throw ParameterError("inclusion parameters must satisfy 0 <= k <= s <= d (got d=" + std::to_string(d) +
                         ", s=" + std::to_string(s) + ", k=" + std::to_string(k) + ")");
  }
}

IntMatrix containment(const std::vector<SubsetMask>& rows, const std::vector<SubsetMask>& cols) {
  IntMatrix m(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if ((cols[j] & ~rows[i]) == 0) m.at(i, j) = 1;
    }
  return m;
}

}  // namespace

InclusionMatrix inclusion_matrix(unsigned d, unsigned s, unsigned k) {
  check_order(d, s, k);
  return {d, s, k, containment(subsets_of_size(d, s), subsets_of_size(d, k))};
}

IntMatrix m_matrix(unsigned d, unsigned s, unsigned k) {
  const auto n = inclusion_matrix(d, s, k);
  return matmul_int(n.matrix, n.matrix.transpose());
}

bool triple_product_identity(unsigned d, unsigned s, unsigned l, unsigned k) {
  check_order(d, s, l);
  check_order(d, l, k);
  const IntMatrix lhs = matmul_int(inclusion_matrix(d, s, l).matrix, inclusion_matrix(d, l, k).matrix);
  IntMatrix rhs = inclusion_matrix(d, s, k).matrix;
  rhs *= mpz_class(binomial_big(s - k, l - k));
  return lhs == rhs;
}

RankBoundCombination rank_bound_combination(unsigned d, unsigned s, const BinomialPoly& poly) {
  const int deg = std::max(poly.degree(), 0);
  if (static_cast<unsigned>(deg) > s) {
    throw ParameterError("polynomial degree " + std::to_string(deg) + " exceeds s = " + std::to_string(s));
  }
  check_order(d, s, 0);
  const std::size_t n = binomial(d, s);
  IntMatrix total(n, n);
  for (std::size_t k = 0; k < poly.coeffs().size() && k <= static_cast<std::size_t>(deg); ++k) {
    const mpz_class& a = poly.coeffs()[k];
    if (a == 0) continue;
    IntMatrix term = m_matrix(d, s, static_cast<unsigned>(k));
    term *= a;
    total += term;
  }
  return {std::move(total), binomial(d, static_cast<std::uint64_t>(deg))};
}

FpMatrix intersection_matrix(unsigned d, unsigned s, const BinomialPoly& poly, PrimeModulus p) {
  check_order(d, s, 0);
  std::vector<std::uint32_t> table(s + 1);
  for (unsigned i = 0; i <= s; ++i) table[i] = p.reduce(poly(mpz_class(i)));
  const auto sets = subsets_of_size(d, s);
  FpMatrix m(sets.size(), sets.size(), p);
  for (std::size_t a = 0; a < sets.size(); ++a)
    for (std::size_t b = 0; b < sets.size(); ++b) {
      const auto v = table[popcount(sets[a] & sets[b])];
      if (v) m.set(a, b, v);
    }
  return m;
}

FpMatrix rep_matrix_kneser(unsigned d, unsigned s, const std::vector<unsigned>& T, PrimeModulus p) {
  if (p.value() <= s) throw ParameterError("rep_matrix_kneser requires p > s");
  if (s == 0 || s > d) throw ParameterError("rep_matrix_kneser requires 0 < s <= d");
  std::vector<bool> in_t(s, false);
  for (unsigned i : T) {
    if (i >= s) throw ParameterError("intersection size " + std::to_string(i) + " is not below s");
    in_t[i] = true;
  }
  std::vector<long> roots;
  for (unsigned j = 0; j < s; ++j) {
    if (!in_t[j]) roots.push_back(j);
  }
  return intersection_matrix(d, s, binomial_basis_of_roots(roots), p);
}

FpMatrix rep_matrix_kneser_mod(unsigned d, unsigned s, unsigned t, unsigned q, PrimeModulus p) {
  if (!is_power_of(q, p.value())) throw ParameterError("q must be a power of p");
  if (q > s + 1) throw ParameterError("q must satisfy q <= s + 1");
  if (t > s) throw ParameterError("t must satisfy t <= s");
  if (s % q != t % q) throw ParameterError("s must be congruent to t modulo q");
  if (s == 0 || s > d) throw ParameterError("rep_matrix_kneser_mod requires 0 < s <= d");
  return intersection_matrix(d, s, binomial_basis_shifted(t, q), p);
}

bool lucas_divisibility(std::uint64_t r, std::uint64_t q, std::uint64_t p) {
  if (!is_prime(p)) throw ParameterError("p must be prime");
  if (!is_power_of(q, p)) throw ParameterError("q must be a power of p");
  if (r < 1) throw ParameterError("r must be at least 1");
  // Lucas: C(n, k) = prod C(n_i, k_i) mod p over base-p digits.
  std::uint64_t n = r - 1;
  std::uint64_t k = q - 1;
  while (k != 0) {
    if (k % p > n % p) return true;
    n /= p;
    k /= p;
  }
  return false;
}

}  // namespace minrank
