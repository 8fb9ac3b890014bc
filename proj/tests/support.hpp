#pragma once

// Reference implementations used only by the tests. They are deliberately
// naive and share no code with the library.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include <gmpxx.h>

namespace ref {

using Dense = std::vector<std::vector<long>>;

// Gauss-Jordan over Q with plain rationals.
inline std::size_t rank_q(const Dense& m) {
  if (m.empty()) return 0;
  std::vector<std::vector<mpq_class>> a(m.size(), std::vector<mpq_class>(m[0].size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) a[i][j] = m[i][j];
  std::size_t r = 0;
  for (std::size_t c = 0; c < a[0].size() && r < a.size(); ++c) {
    std::size_t piv = r;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[r], a[piv]);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      const mpq_class f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < a[0].size(); ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

inline long mod(long x, long p) { return ((x % p) + p) % p; }

inline std::size_t rank_p(Dense a, long p) {
  if (a.empty()) return 0;
  for (auto& row : a)
    for (auto& x : row) x = mod(x, p);
  std::size_t r = 0;
  for (std::size_t c = 0; c < a[0].size() && r < a.size(); ++c) {
    std::size_t piv = r;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[r], a[piv]);
    long inv = 1;
    while (mod(inv * a[r][c], p) != 1) ++inv;
    for (auto& x : a[r]) x = mod(x * inv, p);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      const long f = a[i][c];
      for (std::size_t j = 0; j < a[0].size(); ++j) a[i][j] = mod(a[i][j] - f * a[r][j], p);
    }
    ++r;
  }
  return r;
}

// Determinant by cofactor expansion; fine up to about 8x8.
inline mpz_class det(const Dense& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  mpz_class total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    Dense minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<long> row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != c) row.push_back(m[i][j]);
      minor.push_back(row);
    }
    const mpz_class sub = m[0][c] * det(minor);
    total += (c % 2 == 0) ? sub : mpz_class(-sub);
  }
  return total;
}

inline bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// Largest r with a square r-minor that is nonzero (mod p when p > 0).
inline std::size_t rank_by_minors(const Dense& m, long p = 0) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  for (std::size_t r = std::min(rows, cols); r > 0; --r) {
    std::vector<std::size_t> ri(r), ci(r);
    std::iota(ri.begin(), ri.end(), 0);
    do {
      std::iota(ci.begin(), ci.end(), 0);
      do {
        Dense sub(r, std::vector<long>(r));
        for (std::size_t i = 0; i < r; ++i)
          for (std::size_t j = 0; j < r; ++j) sub[i][j] = m[ri[i]][ci[j]];
        mpz_class d = det(sub);
        if (p > 0) d %= p;
        if (d != 0) return r;
      } while (next_combination(ci, cols));
    } while (next_combination(ri, rows));
  }
  return 0;
}

// s-subsets of {1..d} as sorted sets, ascending by their bitmask value.
inline std::vector<std::set<unsigned>> subsets(unsigned d, unsigned s) {
  std::vector<std::pair<std::uint64_t, std::set<unsigned>>> all;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << d); ++m) {
    if (static_cast<unsigned>(__builtin_popcountll(m)) != s) continue;
    std::set<unsigned> a;
    for (unsigned i = 0; i < d; ++i)
      if ((m >> i) & 1) a.insert(i + 1);
    all.emplace_back(m, a);
  }
  std::sort(all.begin(), all.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<std::set<unsigned>> out;
  for (auto& [m, a] : all) out.push_back(a);
  return out;
}

inline unsigned meet(const std::set<unsigned>& a, const std::set<unsigned>& b) {
  unsigned c = 0;
  for (unsigned x : a) c += b.count(x);
  return c;
}

inline std::uint64_t choose(unsigned n, unsigned k) {
  if (k > n) return 0;
  std::vector<std::vector<std::uint64_t>> c(n + 1, std::vector<std::uint64_t>(n + 1, 0));
  for (unsigned i = 0; i <= n; ++i) {
    c[i][0] = 1;
    for (unsigned j = 1; j <= i; ++j) c[i][j] = c[i - 1][j - 1] + (j <= i - 1 ? c[i - 1][j] : 0);
  }
  return c[n][k];
}

// Adjacency as a list of 0/1 rows, for small reference graph computations.
using Adj = std::vector<std::vector<bool>>;

// Brute-force minrank over F_2: try every representing matrix with ones on the
// diagonal and free entries on the (ordered) edges.
inline std::size_t minrank2_by_matrices(const Adj& adj) {
  const std::size_t n = adj.size();
  std::vector<std::pair<std::size_t, std::size_t>> free;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && adj[i][j]) free.emplace_back(i, j);
  std::size_t best = n;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << free.size()); ++bits) {
    Dense m(n, std::vector<long>(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    for (std::size_t k = 0; k < free.size(); ++k)
      if ((bits >> k) & 1) m[free[k].first][free[k].second] = 1;
    best = std::min(best, rank_p(m, 2));
  }
  return best;
}

inline std::size_t alpha_brute(const Adj& adj) {
  const std::size_t n = adj.size();
  std::size_t best = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = i + 1; j < n && ok; ++j)
        if (((s >> i) & 1) && ((s >> j) & 1) && adj[i][j]) ok = false;
    if (ok) best = std::max<std::size_t>(best, __builtin_popcountll(s));
  }
  return best;
}

}  // namespace ref
