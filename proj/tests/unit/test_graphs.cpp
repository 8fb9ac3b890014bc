#include <cmath>
#include <queue>
#include <sstream>
#include <random>

#include "doctest.h"
#include "minrank/combinatorics.hpp"
#include "minrank/errors.hpp"
#include "minrank/graph_io.hpp"
#include "minrank/graphs.hpp"
#include "support.hpp"

using namespace minrank;

namespace {

std::size_t girth(const Graph& g) {
  std::size_t best = SIZE_MAX;
  for (std::size_t s = 0; s < g.size(); ++s) {
    std::vector<long> dist(g.size(), -1), parent(g.size(), -1);
    std::queue<std::size_t> q;
    dist[s] = 0;
    q.push(s);
    while (!q.empty()) {
      const auto u = q.front();
      q.pop();
      for (std::size_t v = 0; v < g.size(); ++v) {
        if (!g.has_edge(u, v)) continue;
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          parent[v] = static_cast<long>(u);
          q.push(v);
        } else if (parent[u] != static_cast<long>(v)) {
          best = std::min<std::size_t>(best, dist[u] + dist[v] + 1);
        }
      }
    }
  }
  return best;
}

}  // namespace

TEST_SUITE("graphs") {
  TEST_CASE("kneser(3,2,{1}) is a triangle") {
    const Graph g = kneser(3, 2, {1});
    CHECK(g.size() == 3);
    CHECK(g.edge_count() == 3);
  }

  TEST_CASE("kneser(5,2,{0}) is the Petersen graph") {
    const Graph g = kneser(5, 2, {0});
    CHECK(g.size() == 10);
    for (std::size_t v = 0; v < 10; ++v) CHECK(g.degree(v) == 3);
    CHECK(girth(g) == 5);
  }

  TEST_CASE("kneser matches a set-based construction") {
    for (auto [d, s] : {std::pair{6u, 3u}, {7u, 2u}, {8u, 3u}, {5u, 5u}}) {
      std::vector<unsigned> T;
      for (unsigned i = 0; i < s; i += 2) T.push_back(i);
      const Graph g = kneser(d, s, T);
      const auto sets = ref::subsets(d, s);
      REQUIRE(g.size() == sets.size());
      for (std::size_t i = 0; i < sets.size(); ++i) {
        const auto& lab = std::get<SubsetVertex>(g.labels()[i]);
        CHECK(popcount(lab.mask) == s);
        for (std::size_t j = 0; j < sets.size(); ++j) {
          const bool want = i != j && std::find(T.begin(), T.end(), ref::meet(sets[i], sets[j])) != T.end();
          CHECK(g.has_edge(i, j) == want);
        }
      }
    }
  }

  TEST_CASE("vertex degrees follow the intersection count formula") {
    std::mt19937_64 rng(1);
    for (auto [d, s] : {std::pair{8u, 3u}, {9u, 4u}, {10u, 3u}}) {
      for (const std::vector<unsigned>& T : {std::vector<unsigned>{1}, std::vector<unsigned>{0, 2}, std::vector<unsigned>{}}) {
        const Graph g = kneser(d, s, T);
        std::uint64_t want = 0;
        for (unsigned i : T) want += binomial(s, i) * binomial(d - s, s - i);
        std::uniform_int_distribution<std::size_t> pick(0, g.size() - 1);
        for (int k = 0; k < 10; ++k) CHECK(g.degree(pick(rng)) == want);
      }
    }
    CHECK(kneser(8, 3, {1}).degree(0) == 30);
    CHECK(kneser(8, 3, {1}).size() == 56);
  }

  TEST_CASE("complete and empty Kneser graphs") {
    const Graph full = kneser(6, 3, {0, 1, 2});
    CHECK(full.edge_count() == 20 * 19 / 2);
    CHECK(kneser(6, 3, {}).edge_count() == 0);
  }

  TEST_CASE("kneser parameter errors") {
    CHECK_THROWS_AS(kneser(5, 2, {2}), ParameterError);
    CHECK_THROWS_AS(kneser(5, 0, {}), ParameterError);
    CHECK_THROWS_AS(kneser(3, 4, {0}), ParameterError);
    CHECK_THROWS_AS(kneser(64, 2, {0}), ParameterError);
    CHECK_THROWS_AS(kneser(40, 20, {0}), ParameterError);  // C(40,20) vertices is past the size guard
    CHECK_THROWS_AS(kneser_mod(8, 3, 3, 2), ParameterError);
  }

  TEST_CASE("vertex order is ascending bitmask") {
    const Graph g = kneser(6, 3, {1});
    for (std::size_t i = 1; i < g.size(); ++i)
      CHECK(std::get<SubsetVertex>(g.labels()[i - 1]).mask < std::get<SubsetVertex>(g.labels()[i]).mask);
    for (std::size_t i = 0; i < g.size(); ++i) CHECK(colex_rank(std::get<SubsetVertex>(g.labels()[i]).mask) == i);
  }

  TEST_CASE("kneser_mod residue classes") {
    CHECK(residue_class(3, 1, 2) == std::vector<unsigned>{1});
    CHECK(residue_class(6, 2, 4) == std::vector<unsigned>{2});
    CHECK(residue_class(7, 1, 3) == std::vector<unsigned>{1, 4});
    CHECK(kneser_mod(8, 3, 1, 2) == kneser(8, 3, {1}));
    CHECK(kneser_mod(9, 7, 1, 3) == kneser(9, 7, {1, 4}));
    const Graph big = kneser_mod(16, 6, 2, 4);
    CHECK(big.size() == 8008);
    CHECK(big == kneser(16, 6, {2}));
  }

  TEST_CASE("orthogonality graphs") {
    const Graph g2_42 = g2(4, 2);
    CHECK(g2_42.size() == 8);
    for (const auto& l : g2_42.labels()) {
      const auto& v = std::get<FieldVectorVertex>(l);
      unsigned w = 0;
      for (auto c : v.coords) w += c;
      CHECK(w % 2 == 0);
    }
    CHECK(std::get<FieldVectorVertex>(g2_42.labels()[0]).coords == std::vector<std::uint32_t>{0, 0, 0, 0});
    for (auto [d, p] : {std::pair{4u, 2u}, {6u, 2u}, {4u, 3u}}) {
      std::uint64_t floor_count = 1;
      for (unsigned i = 0; i + p < d + 1; ++i) floor_count *= p;
      CHECK(g2(d, p).size() >= floor_count);
    }
    CHECK(g2(6, 2).size() == 32);
    CHECK(g2(4, 3).size() == 33);
    for (auto [d, p] : {std::pair{3u, 2u}, {4u, 3u}, {3u, 5u}}) {
      const Graph g = g1(d, p);
      CHECK(g.size() + g2(d, p).size() == static_cast<std::size_t>(std::pow(p, d)));
      std::vector<std::size_t> basis;
      for (std::size_t v = 0; v < g.size(); ++v) {
        const auto& c = std::get<FieldVectorVertex>(g.labels()[v]).coords;
        if (std::count(c.begin(), c.end(), 0u) == d - 1 && std::count(c.begin(), c.end(), 1u) == 1) basis.push_back(v);
      }
      CHECK(basis.size() == d);
      CHECK(is_independent_set(g, basis));
      for (std::size_t u = 0; u < g.size(); ++u)
        for (std::size_t v = 0; v < g.size(); ++v) CHECK(g.has_edge(u, v) == g.has_edge(v, u));
    }
    CHECK(g1(3, 2).size() == 4);
  }

  TEST_CASE("directed ternary graph") {
    const DiGraph g = directed_ternary(1);
    CHECK(g.arc_count() == 3);
    CHECK(g.has_arc(2, 0));
    CHECK(g.has_arc(0, 1));
    CHECK(g.has_arc(1, 2));
    CHECK_FALSE(is_acyclic(g));
    CHECK(directed_ternary(2).out_degree(0) == 3);
    CHECK(directed_ternary(2).arc_count() == 27);
    CHECK(directed_ternary(3).arc_count() == 189);
    for (unsigned d = 1; d <= 3; ++d) {
      const DiGraph t = directed_ternary(d);
      std::vector<std::size_t> cube;
      for (std::size_t u = 0; u < t.size(); ++u) {
        const auto& cu = std::get<FieldVectorVertex>(t.labels()[u]).coords;
        if (std::all_of(cu.begin(), cu.end(), [](auto x) { return x <= 1; })) cube.push_back(u);
        for (std::size_t v = 0; v < t.size(); ++v) CHECK_FALSE((t.has_arc(u, v) && t.has_arc(v, u)));
      }
      CHECK(cube.size() == (1u << d));
      const DiGraph sub = induced_subgraph(t, cube);
      CHECK(is_acyclic(sub));
      for (std::size_t i = 0; i < cube.size(); ++i)
        for (std::size_t j = 0; j < cube.size(); ++j) {
          const auto& a = std::get<FieldVectorVertex>(t.labels()[cube[i]]).coords;
          const auto& b = std::get<FieldVectorVertex>(t.labels()[cube[j]]).coords;
          bool le = i != j;
          for (unsigned k = 0; k < d; ++k) le = le && a[k] <= b[k];
          CHECK(sub.has_arc(i, j) == le);
        }
    }
  }

  TEST_CASE("complement") {
    const Graph k3 = kneser(3, 2, {1});
    CHECK(complement(k3).edge_count() == 0);
    const Graph pet = kneser(5, 2, {0});
    CHECK(complement(complement(pet)) == pet);
    const Graph co = complement(pet);
    for (std::size_t v = 0; v < co.size(); ++v) CHECK(co.degree(v) == 6);
    CHECK(co == kneser(5, 2, {1}));
    CHECK(complement(pet).labels() == pet.labels());
    const DiGraph t = directed_ternary(2);
    CHECK(complement(complement(t)) == t);
    CHECK(complement(t).arc_count() == 9 * 8 - 27);
  }

  TEST_CASE("subsets and acyclicity helpers") {
    const Graph pet = kneser(5, 2, {0});
    const std::vector<std::size_t> none;
    CHECK(is_independent_set(pet, none));
    CHECK(induced_subgraph(pet, none).size() == 0);
    CHECK(is_acyclic(induced_subgraph(directed_ternary(1), none)));
    const std::vector<std::size_t> bad = {0, 99};
    CHECK_THROWS_AS(is_independent_set(pet, bad), ParameterError);
    CHECK_THROWS_AS(induced_subgraph(pet, bad), ParameterError);
    DiGraph dag(4);
    dag.add_arc(0, 1);
    dag.add_arc(1, 2);
    dag.add_arc(0, 3);
    CHECK(is_acyclic(dag));
    dag.add_arc(2, 0);
    CHECK_FALSE(is_acyclic(dag));
  }

  TEST_CASE("graph JSON round trip") {
    for (const Graph& g : {kneser(6, 2, {0}), g2(4, 3), Graph(3)}) {
      const auto j = graph_to_json(g);
      CHECK(std::get<Graph>(graph_from_json(j)) == g);
      std::ostringstream streamed;
      write_graph_json(streamed, g);
      CHECK(streamed.str() == j.dump());
    }
    const DiGraph t = directed_ternary(2);
    const auto j = graph_to_json(t);
    CHECK(j["directed"] == true);
    CHECK(std::get<DiGraph>(graph_from_json(j)) == t);
    std::ostringstream streamed;
    write_graph_json(streamed, t);
    CHECK(streamed.str() == j.dump());
    const auto k = graph_to_json(kneser(4, 2, {1}));
    CHECK(k["labels"][0] == nlohmann::json::array({1, 2}));
    CHECK(k["n"] == 6);
    CHECK_THROWS_AS(graph_from_json(nlohmann::json::parse(R"({"n": 2, "edges": [[0, 5]]})")), std::exception);
    CHECK_THROWS_AS(graph_from_json(nlohmann::json::parse(R"({"edges": []})")), FormatError);
  }
}
