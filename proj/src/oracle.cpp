#include "minrank/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <string>
#include <vector>

#include "minrank/errors.hpp"

namespace minrank {

std::size_t OracleOutcome::value() const {
  if (!exact) {
    throw IntegrityError("oracle result is only an interval [" + std::to_string(lower) + ", " +
                         std::to_string(upper) + "]: " + abort_reason);
  }
  return lower;
}

namespace {

using Mask = std::uint64_t;

int pop(Mask m) { return __builtin_popcountll(m); }
int low_bit(Mask m) { return __builtin_ctzll(m); }

class BudgetMeter {
 public:
  explicit BudgetMeter(const SearchBudget& b)
      : budget_(b), start_(std::chrono::steady_clock::now()) {}

  // False once a limit is hit; stays false afterwards.
  bool tick() {
    if (exhausted_) return false;
    ++nodes_;
    if (nodes_ > budget_.max_nodes_expanded) {
      exhausted_ = true;
      reason_ = "node budget exhausted";
    } else if ((nodes_ & 0x3ff) == 0) {
      const std::chrono::duration<double> el = std::chrono::steady_clock::now() - start_;
      if (el.count() > budget_.time_limit_seconds) {
        exhausted_ = true;
        reason_ = "time limit reached";
      }
    }
    return !exhausted_;
  }
  bool exhausted() const { return exhausted_; }
  std::uint64_t nodes() const { return nodes_; }
  const std::string& reason() const { return reason_; }

 private:
  SearchBudget budget_;
  std::chrono::steady_clock::time_point start_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
  std::string reason_;
};

void check_size(std::size_t n, const SearchBudget& budget) {
  if (n > kOracleMaxVertices) throw ParameterError("oracles support at most 64 vertices");
  if (n > budget.max_vertices) {
    throw ParameterError("graph has " + std::to_string(n) + " vertices, budget allows " +
                         std::to_string(budget.max_vertices));
  }
}

Mask full_mask(std::size_t n) { return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

// nbr[v] = vertices adjacent to v in the relation we want cliques of.
struct CliqueSearch {
  std::vector<Mask> nbr;
  BudgetMeter& meter;
  int best = 0;

  // Greedy coloring of P: color classes are pairwise non-adjacent, so a clique
  // uses at most one vertex per class.
  void color(Mask p, std::vector<int>& order, std::vector<int>& bound) const {
    order.clear();
    bound.clear();
    int k = 0;
    while (p) {
      ++k;
      Mask q = p;
      while (q) {
        const int v = low_bit(q);
        q &= ~(Mask{1} << v);
        q &= ~nbr[v];
        p &= ~(Mask{1} << v);
        order.push_back(v);
        bound.push_back(k);
      }
    }
  }

  void expand(int size, Mask p) {
    if (!meter.tick()) return;
    std::vector<int> order, bound;
    color(p, order, bound);
    for (std::size_t k = order.size(); k-- > 0;) {
      if (size + bound[k] <= best) return;
      const int v = order[k];
      const Mask next = p & nbr[v];
      if (next == 0) {
        best = std::max(best, size + 1);
      } else {
        expand(size + 1, next);
        if (meter.exhausted()) return;
      }
      p &= ~(Mask{1} << v);
    }
  }
};

OracleOutcome max_clique(const std::vector<Mask>& nbr, const SearchBudget& budget) {
  const std::size_t n = nbr.size();
  OracleOutcome out;
  if (n == 0) {
    out.exact = true;
    return out;
  }
  BudgetMeter meter(budget);
  CliqueSearch search{nbr, meter};
  std::vector<int> order, bound;
  search.color(full_mask(n), order, bound);
  const std::size_t root_bound = static_cast<std::size_t>(bound.empty() ? 0 : bound.back());
  search.expand(0, full_mask(n));
  out.nodes = meter.nodes();
  out.lower = static_cast<std::size_t>(search.best);
  if (meter.exhausted()) {
    out.upper = root_bound;
    out.abort_reason = meter.reason();
  } else {
    out.exact = true;
    out.upper = out.lower;
  }
  return out;
}

std::vector<Mask> masks_of(const Graph& g, bool complemented) {
  const std::size_t n = g.size();
  std::vector<Mask> out(n, 0);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) {
      if (u != v && g.has_edge(u, v) != complemented) out[u] |= Mask{1} << v;
    }
  return out;
}

// Exact k-colorability of the relation nbr by DSATUR-ordered backtracking.
struct Colorer {
  const std::vector<Mask>& nbr;
  std::size_t k;
  BudgetMeter& meter;
  std::vector<int> color;
  std::vector<Mask> class_mask;

  bool solve(std::size_t colored, int used) {
    const std::size_t n = nbr.size();
    if (colored == n) return true;
    if (!meter.tick()) return false;
    // most saturated uncolored vertex
    int pick = -1;
    int pick_sat = -1;
    int pick_deg = -1;
    for (std::size_t v = 0; v < n; ++v) {
      if (color[v] >= 0) continue;
      int sat = 0;
      for (int c = 0; c < used; ++c) sat += (class_mask[static_cast<std::size_t>(c)] & nbr[v]) != 0;
      const int deg = pop(nbr[v]);
      if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
        pick = static_cast<int>(v);
        pick_sat = sat;
        pick_deg = deg;
      }
    }
    const auto v = static_cast<std::size_t>(pick);
    const int limit = std::min<int>(static_cast<int>(k), used + 1);
    for (int c = 0; c < limit; ++c) {
      if (class_mask[static_cast<std::size_t>(c)] & nbr[v]) continue;
      color[v] = c;
      class_mask[static_cast<std::size_t>(c)] |= Mask{1} << v;
      if (solve(colored + 1, std::max(used, c + 1))) return true;
      class_mask[static_cast<std::size_t>(c)] &= ~(Mask{1} << v);
      color[v] = -1;
      if (meter.exhausted()) return false;
    }
    return false;
  }
};

std::size_t greedy_colors(const std::vector<Mask>& nbr) {
  const std::size_t n = nbr.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return pop(nbr[a]) > pop(nbr[b]); });
  std::vector<Mask> classes;
  for (auto v : order) {
    bool placed = false;
    for (auto& c : classes) {
      if (!(c & nbr[v])) {
        c |= Mask{1} << v;
        placed = true;
        break;
      }
    }
    if (!placed) classes.push_back(Mask{1} << v);
  }
  return classes.size();
}

// ---------------------------------------------------------------------------
// minrank search

// Vectors of F_p^r encoded in base p, coordinate 0 least significant.
struct VectorSpace {
  std::uint32_t p;
  unsigned r;
  std::size_t size;
  std::vector<std::uint8_t> dot;  // size x size inner products

  VectorSpace(std::uint32_t p_, unsigned r_) : p(p_), r(r_), size(1) {
    for (unsigned i = 0; i < r; ++i) size *= p;
    dot.assign(size * size, 0);
    std::vector<unsigned> dx(r), dy(r);
    for (std::size_t x = 0; x < size; ++x) {
      digits(x, dx);
      for (std::size_t y = 0; y < size; ++y) {
        digits(y, dy);
        unsigned acc = 0;
        for (unsigned i = 0; i < r; ++i) acc = (acc + dx[i] * dy[i]) % p;
        dot[x * size + y] = static_cast<std::uint8_t>(acc);
      }
    }
  }

  void digits(std::size_t x, std::vector<unsigned>& out) const {
    for (unsigned i = 0; i < r; ++i) {
      out[i] = static_cast<unsigned>(x % p);
      x /= p;
    }
  }
  std::uint8_t ip(std::size_t x, std::size_t y) const { return dot[x * size + y]; }

  // leading (lowest index) nonzero coordinate equals 1
  bool normalized(std::size_t x) const {
    while (x % p == 0) x /= p;
    return x % p == 1;
  }
};

struct MinrankSearch {
  const std::vector<std::size_t>& order;      // vertex placement order
  const std::vector<std::vector<bool>>& arc;  // arc[a][b]
  const VectorSpace& space;
  BudgetMeter& meter;
  std::vector<std::size_t> u, w;               // by placement position
  std::vector<std::size_t> power;              // p^k

  bool place(std::size_t pos, unsigned k) {
    const std::size_t n = order.size();
    if (pos == n) return true;
    if (!meter.tick()) return false;
    const std::size_t v = order[pos];
    auto try_u = [&](std::size_t uv, unsigned next_k) {
      // <u_v, w_a> = 0 whenever (v, a) is not an arc
      for (std::size_t j = 0; j < pos; ++j) {
        if (!arc[v][order[j]] && space.ip(uv, w[j]) != 0) return false;
      }
      u[pos] = uv;
      for (std::size_t wv = 0; wv < space.size; ++wv) {
        if (space.ip(uv, wv) == 0) continue;
        bool ok = true;
        for (std::size_t j = 0; j < pos && ok; ++j) {
          if (!arc[order[j]][v] && space.ip(u[j], wv) != 0) ok = false;
        }
        if (!ok) continue;
        w[pos] = wv;
        if (place(pos + 1, next_k)) return true;
        if (meter.exhausted()) return false;
      }
      return false;
    };
    // u_v inside the span of the first k basis vectors, or the next basis vector
    for (std::size_t uv = 1; uv < power[k]; ++uv) {
      if (!space.normalized(uv)) continue;
      if (try_u(uv, k)) return true;
      if (meter.exhausted()) return false;
    }
    if (k < space.r && try_u(power[k], k + 1)) return true;
    return false;
  }
};

OracleOutcome minrank_search(std::size_t n, const std::vector<std::vector<bool>>& arc,
                             const std::vector<std::size_t>& order, PrimeModulus p, const SearchBudget& budget) {
  OracleOutcome out;
  if (n == 0) {
    out.exact = true;
    return out;
  }
  BudgetMeter meter(budget);
  for (std::size_t r = 1; r < n; ++r) {
    std::size_t states = 1;
    bool too_big = false;
    for (std::size_t i = 0; i < r && !too_big; ++i) {
      states *= p.value();
      too_big = states > 4096;
    }
    if (r > budget.max_rank || too_big) {
      out.lower = r;
      out.upper = n;
      out.nodes = meter.nodes();
      out.abort_reason = "rank " + std::to_string(r) + " is beyond the search limit";
      return out;
    }
    const VectorSpace space(p.value(), static_cast<unsigned>(r));
    MinrankSearch search{order, arc, space, meter, std::vector<std::size_t>(n), std::vector<std::size_t>(n), {}};
    search.power.assign(r + 1, 1);
    for (std::size_t i = 1; i <= r; ++i) search.power[i] = search.power[i - 1] * p.value();
    const bool found = search.place(0, 0);
    if (meter.exhausted()) {
      out.lower = r;
      out.upper = n;
      out.nodes = meter.nodes();
      out.abort_reason = meter.reason();
      return out;
    }
    if (found) {
      out.exact = true;
      out.lower = out.upper = r;
      out.nodes = meter.nodes();
      return out;
    }
  }
  // identity matrix always works
  out.exact = true;
  out.lower = out.upper = n;
  out.nodes = meter.nodes();
  return out;
}

std::vector<std::size_t> by_descending_degree(const std::vector<std::vector<bool>>& arc) {
  const std::size_t n = arc.size();
  std::vector<std::size_t> deg(n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (arc[a][b]) {
        ++deg[a];
        ++deg[b];
      }
    }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto x, auto y) { return deg[x] > deg[y]; });
  return order;
}

}  // namespace

OracleOutcome independence_number(const Graph& g, const SearchBudget& budget) {
  check_size(g.size(), budget);
  return max_clique(masks_of(g, true), budget);
}

OracleOutcome clique_cover_number(const Graph& g, const SearchBudget& budget) {
  check_size(g.size(), budget);
  const std::size_t n = g.size();
  OracleOutcome out;
  if (n == 0) {
    out.exact = true;
    return out;
  }
  // Cliques of g are the color classes of the complement.
  const auto co = masks_of(g, true);
  const OracleOutcome omega = max_clique(co, budget);
  std::size_t lower = omega.lower;
  std::size_t upper = greedy_colors(co);
  out.nodes = omega.nodes;
  BudgetMeter meter(budget);
  while (lower < upper) {
    Colorer c{co, upper - 1, meter, std::vector<int>(n, -1), std::vector<Mask>(upper - 1, 0)};
    if (c.solve(0, 0)) {
      --upper;
    } else if (meter.exhausted()) {
      break;
    } else {
      lower = upper;
    }
  }
  out.nodes += meter.nodes();
  out.lower = lower;
  out.upper = upper;
  out.exact = lower == upper;
  if (!out.exact) out.abort_reason = meter.exhausted() ? meter.reason() : omega.abort_reason;
  return out;
}

OracleOutcome minrank_bruteforce(const Graph& g, PrimeModulus p, const SearchBudget& budget) {
  check_size(g.size(), budget);
  const std::size_t n = g.size();
  std::vector<std::vector<bool>> arc(n, std::vector<bool>(n, false));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) arc[a][b] = a != b && g.has_edge(a, b);
  return minrank_search(n, arc, by_descending_degree(arc), p, budget);
}

OracleOutcome minrank_bruteforce(const DiGraph& g, PrimeModulus p, const SearchBudget& budget) {
  check_size(g.size(), budget);
  const std::size_t n = g.size();
  std::vector<std::vector<bool>> arc(n, std::vector<bool>(n, false));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) arc[a][b] = a != b && g.has_arc(a, b);
  return minrank_search(n, arc, by_descending_degree(arc), p, budget);
}

namespace {

struct AcyclicSearch {
  std::vector<Mask> out_nbr, in_nbr;
  BudgetMeter& meter;
  std::size_t best = 0;
  Mask best_set = 0;

  // Whether adding v to the acyclic set s closes a cycle through v.
  bool closes_cycle(Mask s, int v) const {
    Mask reach = out_nbr[static_cast<std::size_t>(v)] & s;
    Mask frontier = reach;
    const Mask target = in_nbr[static_cast<std::size_t>(v)];
    while (frontier) {
      if (reach & target) return true;
      const int x = low_bit(frontier);
      frontier &= frontier - 1;
      const Mask fresh = out_nbr[static_cast<std::size_t>(x)] & s & ~reach;
      reach |= fresh;
      frontier |= fresh;
    }
    return (reach & target) != 0;
  }

  void search(Mask s, Mask candidates) {
    if (!meter.tick()) return;
    const auto size = static_cast<std::size_t>(pop(s));
    if (size > best) {
      best = size;
      best_set = s;
    }
    while (candidates) {
      if (size + static_cast<std::size_t>(pop(candidates)) <= best) return;
      const int v = low_bit(candidates);
      candidates &= candidates - 1;
      if (!closes_cycle(s, v)) {
        search(s | (Mask{1} << v), candidates);
        if (meter.exhausted()) return;
      }
    }
  }
};

}  // namespace

OracleOutcome max_acyclic_induced(const DiGraph& g, const SearchBudget& budget) {
  check_size(g.size(), budget);
  const std::size_t n = g.size();
  BudgetMeter meter(budget);
  AcyclicSearch search{std::vector<Mask>(n, 0), std::vector<Mask>(n, 0), meter};
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (g.has_arc(a, b)) {
        search.out_nbr[a] |= Mask{1} << b;
        search.in_nbr[b] |= Mask{1} << a;
      }
    }
  search.search(0, full_mask(n));
  OracleOutcome out;
  out.nodes = meter.nodes();
  out.lower = search.best;
  if (meter.exhausted()) {
    out.upper = n;
    out.abort_reason = meter.reason();
  } else {
    out.exact = true;
    out.upper = out.lower;
  }
  return out;
}

SandwichReport check_sandwich(const Graph& g, PrimeModulus p, const SearchBudget& budget) {
  SandwichReport rep;
  rep.n = g.size();
  rep.alpha = independence_number(g, budget);
  rep.clique_cover = clique_cover_number(g, budget);
  rep.minrank = minrank_bruteforce(g, p, budget);
  rep.minrank_complement = minrank_bruteforce(complement(g), p, budget);
  // Provable from the enclosures even when some searches were cut short.
  if (rep.alpha.lower > rep.minrank.upper) throw IntegrityError("violated: alpha(G) <= minrank_p(G)");
  if (rep.minrank.lower > rep.clique_cover.upper) throw IntegrityError("violated: minrank_p(G) <= clique cover of G");
  if (rep.minrank.upper * rep.minrank_complement.upper < rep.n) {
    throw IntegrityError("violated: minrank_p(G) * minrank_p(complement) >= n");
  }
  rep.conclusive = rep.alpha.exact && rep.clique_cover.exact && rep.minrank.exact && rep.minrank_complement.exact;
  return rep;
}

}  // namespace minrank
