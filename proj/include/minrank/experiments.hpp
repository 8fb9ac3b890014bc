#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "json.hpp"
#include "minrank/certificates.hpp"
#include "minrank/entropy.hpp"

namespace minrank {

inline constexpr const char* kReportSchema = "minrank-lab/1";

// Asymptotic exponent from the construction. Informational only: the o(1)
// term is not quantified, so nothing is asserted at finite n.
struct ExponentContext {
  std::string expression;
  Interval value;
};

// separation 1: 1 - H(1/p)/H((p+1)/p^2), with 1 - H(1/4)/H(3/8) for p = 2
// separation 2: 1 - H(1/(4-eps))/H((2-eps)/(4-eps))
// separation 3: 1 - H(3/8)
ExponentContext exponent_context(int theorem_id, unsigned p = 2, const mpq_class& eps = 0);
// The eps -> 0 limit of separation 2, 1 - H(1/4).
ExponentContext exponent_theorem2_limit();

struct ArtifactRef {
  std::string kind;
  std::string path;  // empty when the artifact was hashed but not written
  std::string sha256;
};

struct SeparationReport {
  int theorem_id = 0;
  nlohmann::json parameters;
  std::size_t n = 0;
  mpq_class kappa;
  std::string certificate_mode;
  CertificateCheck certificate;
  std::uint64_t rank_bound = 0;
  std::size_t rank_actual = 0;
  std::size_t representation_dimension = 0;
  bool represents = false;
  std::size_t minrank_lower = 0;
  std::vector<ExponentContext> exponents;
  nlohmann::json details = nlohmann::json::object();
  std::map<std::string, double> timings;
  std::vector<ArtifactRef> artifacts;
};

struct RunOptions {
  std::optional<std::filesystem::path> artifact_dir;
};

// d = 2^l, q = d/4, t = d/8 for p = 2; d = p^l, q = d/p, t = d/p^2 otherwise; s = t + q.
SeparationReport run_theorem1(unsigned p, unsigned l, const RunOptions& opts = {});
// d = (4 - eps) p, s = 2p - 1, t = p - 1, eps = eps_num / eps_den.
SeparationReport run_theorem2(unsigned p, long eps_num, long eps_den, const RunOptions& opts = {});
// d = 8t, s = 4t, T = {0..t}, p > 4t.
SeparationReport run_theorem3(unsigned t, unsigned p, const RunOptions& opts = {});

// Checks the internal invariants; throws IntegrityError on the first violation.
void assert_report_invariants(const SeparationReport& r);

// with_timings = false drops the timings block so equal runs serialize identically.
nlohmann::json to_json(const SeparationReport& r, bool with_timings = true);
nlohmann::json to_json(const ExponentContext& e);

// Side claims about G_1, G_2 and the directed ternary graph.
nlohmann::json run_sidequests();

}  // namespace minrank
