#include "minrank/combinatorics.hpp"

#include <string>

#include "minrank/errors.hpp"

namespace minrank {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // acc * (n - k + i) / i stays integral at each step
    acc = acc * (n - k + i) / i;
    if (acc > UINT64_MAX) {
      throw ParameterError("binomial(" + std::to_string(n) + ", " + std::to_string(k) +
                           ") overflows 64 bits");
    }
  }
  return static_cast<std::uint64_t>(acc);
}

mpz_class binomial_big(const mpz_class& n, unsigned long k) {
  // n (n-1) ... (n-k+1) / k!, valid for negative n as well
  mpz_class num = 1;
  for (unsigned long i = 0; i < k; ++i) num *= n - i;
  mpz_class den;
  mpz_fac_ui(den.get_mpz_t(), k);
  mpz_class out;
  mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return out;
}

std::uint64_t binomial_prefix_sum(std::uint64_t n, std::uint64_t k) {
  std::uint64_t total = 0;
  for (std::uint64_t i = 0; i <= k; ++i) {
    const std::uint64_t term = binomial(n, i);
    if (total > UINT64_MAX - term) throw ParameterError("binomial prefix sum overflows 64 bits");
    total += term;
  }
  return total;
}

std::vector<SubsetMask> subsets_of_size(unsigned d, unsigned s) {
  if (d > kMaxUniverse) throw ParameterError("universe size above 63 is not supported");
  if (s > d) return {};
  std::vector<SubsetMask> out;
  out.reserve(binomial(d, s));
  if (s == 0) {
    out.push_back(0);
    return out;
  }
  const SubsetMask limit = SubsetMask{1} << d;
  SubsetMask m = (SubsetMask{1} << s) - 1;
  while (m < limit) {
    out.push_back(m);
    // Gosper's hack: next larger integer with the same popcount
    const SubsetMask c = m & (~m + 1);
    const SubsetMask r = m + c;
    m = (((r ^ m) >> 2) / c) | r;
  }
  return out;
}

std::vector<SubsetMask> subsets_up_to_size(unsigned d, unsigned max_size) {
  std::vector<SubsetMask> out;
  for (unsigned k = 0; k <= max_size && k <= d; ++k) {
    auto layer = subsets_of_size(d, k);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

std::uint64_t colex_rank(SubsetMask mask) {
  std::uint64_t rank = 0;
  unsigned seen = 0;
  while (mask != 0) {
    const unsigned pos = static_cast<unsigned>(__builtin_ctzll(mask));
    ++seen;
    rank += binomial(pos, seen);
    mask &= mask - 1;
  }
  return rank;
}

bool is_power_of(std::uint64_t q, std::uint64_t p) {
  if (q == 0 || p < 2) return false;
  while (q % p == 0) q /= p;
  return q == 1;
}

}  // namespace minrank
