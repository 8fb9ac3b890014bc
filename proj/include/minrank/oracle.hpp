#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "minrank/ff_linalg.hpp"
#include "minrank/graphs.hpp"

namespace minrank {

// Oracles only handle graphs up to 64 vertices (one machine word per vertex set).
inline constexpr std::size_t kOracleMaxVertices = 64;

struct SearchBudget {
  std::size_t max_vertices = kOracleMaxVertices;
  std::size_t max_rank = 16;
  std::uint64_t max_nodes_expanded = 200'000'000;
  double time_limit_seconds = 120.0;
};

// Exact value when exact; otherwise [lower, upper] is what was proven before
// the budget ran out.
struct OracleOutcome {
  bool exact = false;
  std::size_t lower = 0;
  std::size_t upper = 0;
  std::uint64_t nodes = 0;
  std::string abort_reason;

  std::size_t value() const;
};

OracleOutcome independence_number(const Graph& g, const SearchBudget& budget = {});
OracleOutcome clique_cover_number(const Graph& g, const SearchBudget& budget = {});

// Smallest r admitting u_v, w_v in F_p^r with <u_v, w_v> != 0 and
// <u_a, w_b> = 0 on every ordered non-adjacent pair a != b.
OracleOutcome minrank_bruteforce(const Graph& g, PrimeModulus p, const SearchBudget& budget = {});
OracleOutcome minrank_bruteforce(const DiGraph& g, PrimeModulus p, const SearchBudget& budget = {});

// Largest vertex set inducing an acyclic subgraph.
OracleOutcome max_acyclic_induced(const DiGraph& g, const SearchBudget& budget = {});

struct SandwichReport {
  std::size_t n = 0;
  OracleOutcome alpha;
  OracleOutcome clique_cover;
  OracleOutcome minrank;
  OracleOutcome minrank_complement;
  bool conclusive = false;  // all four values exact
};

// alpha <= minrank_p <= clique cover and minrank_p(G) minrank_p(co-G) >= n.
// Throws IntegrityError naming the first violated inequality.
SandwichReport check_sandwich(const Graph& g, PrimeModulus p, const SearchBudget& budget = {});

}  // namespace minrank
