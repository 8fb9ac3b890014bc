#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "minrank/errors.hpp"
#include "minrank/experiments.hpp"
#include "minrank/matrix_io.hpp"
#include "minrank/sha256.hpp"

using namespace minrank;

TEST_SUITE("experiments") {
  TEST_CASE("separation 1, p = 2, l = 3") {
    const auto r = run_theorem1(2, 3);
    CHECK(r.n == 56);
    CHECK(r.kappa == 16);
    CHECK(r.rank_bound == 8);
    CHECK(r.rank_actual == 8);
    CHECK(r.minrank_lower == 7);
    CHECK(r.certificate.verified);
    CHECK(r.represents);
    CHECK(r.parameters["q"] == 2);
    // hash frozen from an independent rendering of the same matrix
    CHECK(r.artifacts.at(0).sha256 == "0afccc64325c2a89dc7ef03c8ba6f460b2f8c3cba23fe342cc1ff53f137ac13a");
    CHECK(r.artifacts.at(0).path.empty());
  }

  TEST_CASE("separation 1, p = 3, l = 2") {
    const auto r = run_theorem1(3, 2);
    CHECK(r.n == 126);
    CHECK(r.kappa == mpq_class(27, 7));
    CHECK(r.rank_bound == 36);
    CHECK(r.rank_actual == 36);
    CHECK(r.minrank_lower == 4);
  }

  TEST_CASE("separation 1 parameter errors") {
    CHECK_THROWS_AS(run_theorem1(2, 2), ParameterError);
    CHECK_THROWS_AS(run_theorem1(3, 1), ParameterError);
    CHECK_THROWS_AS(run_theorem1(4, 2), ParameterError);
    CHECK_THROWS_AS(run_theorem1(5, 3), ParameterError);  // 125 > 63
  }

  TEST_CASE("separation 2") {
    const auto r = run_theorem2(3, 1, 3);
    CHECK(r.n == 462);
    CHECK(r.kappa == 11);
    CHECK(r.representation_dimension == 67);
    CHECK(r.rank_bound == 67);
    CHECK(r.rank_actual == 55);
    CHECK(r.minrank_lower == 9);
    CHECK(r.details["envelope"] == "22");
    CHECK(r.details["envelope_hypothesis_holds"] == true);
    const auto s = run_theorem2(2, 1, 2);
    CHECK(s.n == 35);
    CHECK(s.rank_bound == 8);
    CHECK(s.kappa == 7);
    CHECK(s.rank_actual == 7);
    CHECK_THROWS_AS(run_theorem2(3, 1, 2), ParameterError);  // 3.5 * 3 is not an integer
    CHECK_THROWS_AS(run_theorem2(3, 0, 1), ParameterError);
    CHECK_THROWS_AS(run_theorem2(3, 2, 1), ParameterError);
    CHECK_THROWS_AS(run_theorem2(3, 1, 0), ParameterError);
  }

  TEST_CASE("envelope hypothesis is flagged, not asserted") {
    // eps = 1, p = 2: eps p^2 / 2 = 2 <= 4 - 2 + 1
    const auto r = run_theorem2(2, 1, 1);
    CHECK(r.details["envelope_hypothesis_holds"] == true);
    CHECK(r.details.contains("kappa_within_envelope"));
    // eps = 3/2, p = 2: 3 <= 6 - 3 + 1
    const auto s = run_theorem2(2, 3, 2);
    CHECK(s.n == 10);
    // eps = 5/3, p = 3: d = 7, 7.5 <= 15 - 5 + 1 holds while eps = 1/3, p = 6 would need p prime
    const auto t = run_theorem2(3, 5, 3);
    CHECK(t.details["envelope_hypothesis_holds"] == true);
  }

  TEST_CASE("separation 3") {
    const auto r = run_theorem3(1, 5);
    CHECK(r.n == 70);
    CHECK(r.kappa == 3);
    CHECK(r.certificate_mode == "ineq");
    CHECK(r.certificate.pairs_audited == 1190);
    CHECK(r.rank_bound == 28);
    CHECK(r.rank_bound <= 56);
    CHECK(r.rank_actual == 28);
    CHECK(r.minrank_lower == 3);
    CHECK(r.details["birep_matches_matrix"] == true);
    CHECK(r.details["polynomial_bound"] == 37);
    CHECK(run_theorem3(1, 7).rank_actual <= 28);
    CHECK_THROWS_AS(run_theorem3(1, 3), ParameterError);
    CHECK_THROWS_AS(run_theorem3(1, 4), ParameterError);
    CHECK_THROWS_AS(run_theorem3(0, 5), ParameterError);
  }

  TEST_CASE("report invariants are enforced") {
    auto r = run_theorem1(2, 3);
    CHECK_NOTHROW(assert_report_invariants(r));
    auto bad = r;
    bad.rank_actual = 9;
    CHECK_THROWS_AS(assert_report_invariants(bad), IntegrityError);
    bad = r;
    bad.minrank_lower = 6;
    CHECK_THROWS_AS(assert_report_invariants(bad), IntegrityError);
    bad = r;
    bad.represents = false;
    CHECK_THROWS_AS(assert_report_invariants(bad), IntegrityError);
  }

  TEST_CASE("reports are deterministic and carry the schema") {
    const auto a = to_json(run_theorem3(1, 5), false).dump();
    const auto b = to_json(run_theorem3(1, 5), false).dump();
    CHECK(a == b);
    const auto j = to_json(run_theorem1(2, 3));
    CHECK(j["schema"] == "minrank-lab/1");
    CHECK(j["kappa"] == "16");
    CHECK(j.contains("timings"));
    CHECK_FALSE(to_json(run_theorem1(2, 3), false).contains("timings"));
    CHECK(j["exponents"][0]["assertable"] == false);
  }

  TEST_CASE("artifacts are written and hashed") {
    const auto dir = std::filesystem::temp_directory_path() / "minrank_artifacts_test";
    std::filesystem::remove_all(dir);
    RunOptions opts;
    opts.artifact_dir = dir;
    const auto r = run_theorem1(2, 3, opts);
    for (const auto& art : r.artifacts) {
      REQUIRE_FALSE(art.path.empty());
      std::ifstream in(art.path);
      const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
      CHECK(sha256_hex(text) == art.sha256);
    }
    const AnyMatrix m = read_matrix_file(r.artifacts[0].path);
    CHECK(rank_of(m) == r.rank_actual);
    std::filesystem::remove_all(dir);
  }

  TEST_CASE("side claims") {
    const auto j = run_sidequests();
    CHECK(j["g1"][0]["minrank"] == 3);
    CHECK(j["g1"][0]["alpha"] == 3);
    CHECK(j["g2"][0]["n"] == 8);
    CHECK(j["g2"][0]["minrank_lower_from_bound"] == 2);
    CHECK(j["g2"][0]["rank_actual"] == 3);
    CHECK(j["g2"][1]["rank_actual"] == 5);
    CHECK(j["g2"][2]["rank_actual"] == 10);
    for (int d = 0; d < 3; ++d) {
      CHECK(j["ternary"][d]["rank_actual"] == (2 << d));
      CHECK(j["ternary"][d]["binary_cube_acyclic"] == true);
      CHECK(j["ternary"][d]["max_acyclic_lower"] >= (2 << d));
    }
  }
}

TEST_SUITE("sha256") {
  TEST_CASE("known digests") {
    CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    Sha256Stream s;
    for (int i = 0; i < 100000; ++i) s << 'a';
    std::string big(100000, 'a');
    CHECK(s.hex_digest() == sha256_hex(big));
  }
}
