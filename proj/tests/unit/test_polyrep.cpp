#include <random>

#include "doctest.h"
#include "minrank/combinatorics.hpp"
#include "minrank/errors.hpp"
#include "minrank/graphs.hpp"
#include "minrank/inclusion.hpp"
#include "minrank/oracle.hpp"
#include "minrank/polyrep.hpp"
#include "support.hpp"

using namespace minrank;

namespace {

long dot(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
  long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<long>(a[i]) * b[i];
  return s;
}

long pow_mod(long b, unsigned e, long p) {
  long r = 1;
  for (unsigned i = 0; i < e; ++i) r = ref::mod(r * b, p);
  return r;
}

}  // namespace

TEST_SUITE("polyrep") {
  TEST_CASE("trivial bi-representations") {
    const PrimeModulus p2(2);
    const Graph pet = kneser(5, 2, {0});
    const BiRepresentation id{FpMatrix::identity(10, p2), FpMatrix::identity(10, p2)};
    CHECK(verify_birep(pet, id));
    CHECK(verify_birep(Graph(10), id));
    CHECK(minrank_upper_from_birep(Graph(10), id) == 10);
    FpMatrix ones_col(6, 1, p2), ones_row(1, 6, p2);
    for (int i = 0; i < 6; ++i) {
      ones_col.set(i, 0, 1);
      ones_row.set(0, i, 1);
    }
    const Graph k6 = kneser(4, 2, {0, 1});
    const BiRepresentation one{ones_col, ones_row};
    CHECK(verify_birep(k6, one));
    CHECK_FALSE(verify_birep(Graph(6), one));
    CHECK_THROWS_AS(minrank_upper_from_birep(Graph(6), one), IntegrityError);
    CHECK_THROWS_AS(verify_birep(Graph(5), one), ParameterError);
  }

  TEST_CASE("birep_kneser") {
    const auto small = birep_kneser(3, 2, {1}, PrimeModulus(3));
    CHECK(small.dimension() == 4);
    const FpMatrix prod = small.product();
    for (std::size_t v = 0; v < 3; ++v) CHECK(prod.get(v, v) == 2);
    CHECK(verify_birep(kneser(3, 2, {1}), small));

    CHECK(birep_kneser(8, 3, {1}, PrimeModulus(5)).dimension() == 37);
    CHECK(verify_birep(kneser(8, 3, {1}), birep_kneser(8, 3, {1}, PrimeModulus(5))));
    const std::size_t up = minrank_upper_from_birep(kneser(8, 3, {1}), birep_kneser(8, 3, {1}, PrimeModulus(5)));
    CHECK(up <= 37);
    CHECK_THROWS_AS(birep_kneser(8, 3, {1}, PrimeModulus(2)), ParameterError);
    CHECK_THROWS_AS(birep_kneser(8, 3, {1}, PrimeModulus(3)), ParameterError);

    std::mt19937_64 rng(8);
    for (auto [d, s, p] : {std::tuple{8u, 3u, 5u}, {8u, 4u, 5u}, {7u, 3u, 11u}}) {
      const std::vector<unsigned> T = {0, 1};
      const auto rep = birep_kneser(d, s, T, PrimeModulus(p));
      CHECK(rep.dimension() == binomial_prefix_sum(d, s - T.size()));
      const FpMatrix f = rep.product();
      const auto sets = ref::subsets(d, s);
      std::uniform_int_distribution<std::size_t> pick(0, sets.size() - 1);
      for (int k = 0; k < 120; ++k) {
        const auto i = pick(rng), j = pick(rng);
        long want = 1;
        for (long r = 0; r < static_cast<long>(s); ++r)
          if (std::find(T.begin(), T.end(), r) == T.end()) want *= static_cast<long>(ref::meet(sets[i], sets[j])) - r;
        CHECK(f.get(i, j) == ref::mod(want, p));
      }
      CHECK(f == rep_matrix_kneser(d, s, T, PrimeModulus(p)));
    }
  }

  TEST_CASE("birep_gp") {
    const auto r52 = birep_gp(5, PrimeModulus(2));
    CHECK(r52.dimension() == 6);
    const Graph g52 = kneser(5, 3, {1});
    CHECK(verify_birep(g52, r52));
    const auto sets = ref::subsets(5, 3);
    const FpMatrix p52 = r52.product();
    for (std::size_t i = 0; i < sets.size(); ++i) {
      CHECK(p52.get(i, i) == 1);
      for (std::size_t j = 0; j < sets.size(); ++j) CHECK(p52.get(i, j) == ref::meet(sets[i], sets[j]) % 2);
    }
    const auto r73 = birep_gp(7, PrimeModulus(3));
    CHECK(verify_birep(kneser(7, 5, {2}), r73));
    CHECK(birep_gp(11, PrimeModulus(3)).dimension() == 67);
    CHECK_THROWS_AS(birep_gp(4, PrimeModulus(3)), ParameterError);
  }

  TEST_CASE("exponent vectors") {
    const auto e = exponent_vectors(3, 2);
    CHECK(e.size() == 6);
    CHECK(std::is_sorted(e.begin(), e.end()));
    for (const auto& v : e) CHECK(std::accumulate(v.begin(), v.end(), 0u) == 2);
    CHECK(exponent_vectors(4, 1).size() == 4);
  }

  TEST_CASE("birep_g2_complement") {
    std::mt19937_64 rng(12);
    for (auto [d, p] : {std::pair{4u, 2u}, {4u, 3u}, {6u, 2u}, {3u, 5u}}) {
      const Graph g = g2(d, p);
      const auto rep = birep_g2_complement(d, PrimeModulus(p));
      CHECK(rep.dimension() == binomial(d + p - 2, p - 1) + 1);
      CHECK(verify_birep(complement(g), rep));
      const FpMatrix f = rep.product();
      std::uniform_int_distribution<std::size_t> pick(0, g.size() - 1);
      for (std::size_t v = 0; v < g.size(); ++v) CHECK(f.get(v, v) == 1);
      for (int k = 0; k < 150; ++k) {
        const auto i = pick(rng), j = pick(rng);
        const auto& u = std::get<FieldVectorVertex>(g.labels()[i]).coords;
        const auto& w = std::get<FieldVectorVertex>(g.labels()[j]).coords;
        CHECK(f.get(i, j) == ref::mod(1 - pow_mod(dot(u, w), p - 1, p), p));
      }
    }
    CHECK(birep_g2_complement(4, PrimeModulus(2)).dimension() == 5);
  }

  TEST_CASE("birep_directed_ternary") {
    for (unsigned d = 1; d <= 3; ++d) {
      const DiGraph g = directed_ternary(d);
      const auto rep = birep_directed_ternary(d);
      CHECK(rep.dimension() == (1u << d));
      CHECK(verify_birep(g, rep));
      const FpMatrix f = rep.product();
      for (std::size_t i = 0; i < g.size(); ++i) {
        const auto& u = std::get<FieldVectorVertex>(g.labels()[i]).coords;
        for (std::size_t j = 0; j < g.size(); ++j) {
          const auto& v = std::get<FieldVectorVertex>(g.labels()[j]).coords;
          long want = 1;
          for (unsigned k = 0; k < d; ++k) want *= static_cast<long>(u[k]) - static_cast<long>(v[k]) - 1;
          CHECK(f.get(i, j) == ref::mod(want, 3));
        }
        CHECK(f.get(i, i) == (d % 2 ? 2u : 1u));
      }
      CHECK(rank_fp(f) == (1u << d));
    }
    CHECK(minrank_upper_from_birep(directed_ternary(2), birep_directed_ternary(2)) == 4);
  }

  TEST_CASE("bi-representation upper bounds dominate alpha") {
    const Graph g = kneser(7, 3, {1});
    const std::size_t up = minrank_upper_from_birep(g, birep_kneser(7, 3, {1}, PrimeModulus(5)));
    const auto alpha = independence_number(kneser(6, 3, {1}));
    CHECK(alpha.exact);
    CHECK(alpha.lower <= minrank_upper_from_birep(kneser(6, 3, {1}), birep_kneser(6, 3, {1}, PrimeModulus(5))));
    CHECK(up <= 29);
  }
}
