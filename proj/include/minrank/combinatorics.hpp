#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace minrank {

// Subsets of [d] are bitmasks: bit i stands for element i+1.
using SubsetMask = std::uint64_t;

inline constexpr unsigned kMaxUniverse = 63;

// C(n, k) as a 64-bit value. Throws ParameterError on overflow.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

// C(n, k) for arbitrary integer n (negative allowed) and k >= 0.
mpz_class binomial_big(const mpz_class& n, unsigned long k);

// sum_{i=0}^{k} C(n, i)
std::uint64_t binomial_prefix_sum(std::uint64_t n, std::uint64_t k);

// All s-subsets of [d] in ascending bitmask order.
std::vector<SubsetMask> subsets_of_size(unsigned d, unsigned s);

// All subsets of [d] with at most max_size elements, grouped by size and
// ascending by mask within a size.
std::vector<SubsetMask> subsets_up_to_size(unsigned d, unsigned max_size);

// Position of mask among subsets of the same size in ascending bitmask order
// (combinatorial number system).
std::uint64_t colex_rank(SubsetMask mask);

inline unsigned popcount(SubsetMask m) { return static_cast<unsigned>(__builtin_popcountll(m)); }

// True iff q = p^e for some e >= 0.
bool is_power_of(std::uint64_t q, std::uint64_t p);

}  // namespace minrank
