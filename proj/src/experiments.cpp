#include "minrank/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <string>

#include "minrank/combinatorics.hpp"
#include "minrank/errors.hpp"
#include "minrank/ff_linalg.hpp"
#include "minrank/graph_io.hpp"
#include "minrank/graphs.hpp"
#include "minrank/inclusion.hpp"
#include "minrank/matrix_io.hpp"
#include "minrank/oracle.hpp"
#include "minrank/polyrep.hpp"
#include "minrank/sha256.hpp"

namespace minrank {

using nlohmann::json;

namespace {

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double lap() {
    const auto now = std::chrono::steady_clock::now();
    const std::chrono::duration<double> el = now - start_;
    start_ = now;
    return el.count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

std::string rational_text(const mpq_class& q) { return q.get_str(); }

std::size_t ceil_div(std::size_t a, std::size_t b) { return b == 0 ? 0 : (a + b - 1) / b; }

ArtifactRef matrix_artifact(const FpMatrix& m, const std::string& kind, const std::string& stem,
                            const RunOptions& opts) {
  ArtifactRef ref{kind, "", ""};
  if (opts.artifact_dir) {
    std::filesystem::create_directories(*opts.artifact_dir);
    const auto path = *opts.artifact_dir / (stem + ".txt");
    std::ofstream out(path);
    if (!out) throw FormatError("cannot write " + path.string());
    Sha256Stream hs(&out);
    write_matrix(hs, m);
    ref.sha256 = hs.hex_digest();
    ref.path = path.string();
  } else {
    Sha256Stream hs;
    write_matrix(hs, m);
    ref.sha256 = hs.hex_digest();
  }
  return ref;
}

ArtifactRef graph_artifact(const Graph& g, const std::string& stem, const RunOptions& opts) {
  ArtifactRef ref{"graph", "", ""};
  if (opts.artifact_dir) {
    std::filesystem::create_directories(*opts.artifact_dir);
    const auto path = *opts.artifact_dir / (stem + ".json");
    std::ofstream out(path);
    if (!out) throw FormatError("cannot write " + path.string());
    Sha256Stream hs(&out);
    write_graph_json(hs, g);
    ref.sha256 = hs.hex_digest();
    ref.path = path.string();
  } else {
    Sha256Stream hs;
    write_graph_json(hs, g);
    ref.sha256 = hs.hex_digest();
  }
  return ref;
}

ExponentContext entropy_ratio_exponent(std::string expr, const mpq_class& a, const mpq_class& b) {
  const Interval v = exact(1) - binary_entropy(a) / binary_entropy(b);
  return {std::move(expr), round_outward(v)};
}

std::vector<unsigned> all_below_or_equal(unsigned t) {
  std::vector<unsigned> T;
  for (unsigned i = 0; i <= t; ++i) T.push_back(i);
  return T;
}

}  // namespace

ExponentContext exponent_context(int theorem_id, unsigned p, const mpq_class& eps) {
  switch (theorem_id) {
    case 1: {
      if (p == 2) return entropy_ratio_exponent("1 - H(1/4)/H(3/8)", mpq_class(1, 4), mpq_class(3, 8));
      mpq_class a(1, p);
      mpq_class b(p + 1, static_cast<unsigned long>(p) * p);
      a.canonicalize();
      b.canonicalize();
      return entropy_ratio_exponent("1 - H(1/p)/H((p+1)/p^2), p=" + std::to_string(p), a, b);
    }
    case 2: {
      if (eps <= 0 || eps >= 2) throw ParameterError("eps must lie in (0, 2)");
      const mpq_class a = 1 / (4 - eps);
      const mpq_class b = (2 - eps) / (4 - eps);
      return entropy_ratio_exponent("1 - H(1/(4-eps))/H((2-eps)/(4-eps)), eps=" + eps.get_str(), a, b);
    }
    case 3: {
      const Interval v = exact(1) - binary_entropy(mpq_class(3, 8));
      return {"1 - H(3/8)", round_outward(v)};
    }
    default:
      throw ParameterError("theorem id must be 1, 2 or 3");
  }
}

ExponentContext exponent_theorem2_limit() {
  return {"1 - H(1/4)", round_outward(exact(1) - binary_entropy(mpq_class(1, 4)))};
}

void assert_report_invariants(const SeparationReport& r) {
  if (!r.certificate.verified) throw IntegrityError("vector certificate did not verify");
  if (!r.represents) throw IntegrityError("matrix does not represent the graph");
  if (r.rank_actual > r.rank_bound) {
    throw IntegrityError("rank " + std::to_string(r.rank_actual) + " exceeds the bound " +
                         std::to_string(r.rank_bound));
  }
  if (r.minrank_lower * r.rank_actual < r.n) throw IntegrityError("minrank lower bound times rank is below n");
  if (r.rank_actual == 0) throw IntegrityError("representing matrix has rank 0");
}

SeparationReport run_theorem1(unsigned p, unsigned l, const RunOptions& opts) {
  const PrimeModulus mod(p);
  std::uint64_t d = 0, q = 0, t = 0;
  if (p == 2) {
    if (l < 3) throw ParameterError("separation 1 with p = 2 needs l >= 3");
    if (l > 6) throw ParameterError("separation 1 with p = 2 is limited to l <= 6");
    d = std::uint64_t{1} << l;
    q = d / 4;
    t = d / 8;
  } else {
    if (l < 2) throw ParameterError("separation 1 with odd p needs l >= 2");
    d = 1;
    for (unsigned i = 0; i < l; ++i) {
      d *= p;
      if (d > kMaxUniverse) throw ParameterError("universe p^l exceeds 63");
    }
    q = d / p;
    t = d / (static_cast<std::uint64_t>(p) * p);
  }
  const std::uint64_t s = t + q;
  const auto D = static_cast<unsigned>(d), S = static_cast<unsigned>(s), Tt = static_cast<unsigned>(t),
             Q = static_cast<unsigned>(q);

  SeparationReport r;
  r.theorem_id = 1;
  r.parameters = {{"p", p}, {"l", l}, {"d", d}, {"s", s}, {"t", t}, {"q", q}};
  Stopwatch sw;

  const Graph g = kneser_mod(D, S, Tt, Q);
  r.n = g.size();
  const auto T = residue_class(S, Tt, Q);
  r.details["intersection_sizes"] = T;
  r.details["single_class"] = T == std::vector<unsigned>{Tt};
  r.timings["graph"] = sw.lap();

  const auto cert = make_certificate(D, S, Tt, CertificateMode::equality);
  r.certificate = verify_certificate(cert, false);
  r.kappa = cert.kappa;
  r.certificate_mode = "eq";
  if (!(T == std::vector<unsigned>{Tt})) {
    // equality-mode certificate only speaks about K(d, s, {t})
    r.certificate.verified = false;
  }
  r.timings["certificate"] = sw.lap();

  const FpMatrix m = rep_matrix_kneser_mod(D, S, Tt, Q, mod);
  r.representation_dimension = m.rows();
  r.timings["matrix"] = sw.lap();
  r.represents = represents(m, g);
  r.timings["represents"] = sw.lap();
  r.rank_actual = rank_fp(m);
  r.timings["rank"] = sw.lap();
  r.rank_bound = binomial(d, q - 1);
  r.minrank_lower = ceil_div(r.n, r.rank_actual);

  const std::string stem = "theorem1_p" + std::to_string(p) + "_l" + std::to_string(l);
  r.artifacts.push_back(matrix_artifact(m, "representing_matrix", stem + "_matrix", opts));
  r.artifacts.push_back(graph_artifact(g, stem + "_graph", opts));
  r.timings["artifacts"] = sw.lap();

  r.exponents.push_back(exponent_context(1, p));
  assert_report_invariants(r);
  return r;
}

SeparationReport run_theorem2(unsigned p, long eps_num, long eps_den, const RunOptions& opts) {
  const PrimeModulus mod(p);
  if (eps_den <= 0) throw ParameterError("eps denominator must be positive");
  mpq_class eps(eps_num, eps_den);
  eps.canonicalize();
  if (eps <= 0 || eps >= 2) throw ParameterError("eps must lie in (0, 2)");
  const mpq_class dq = (4 - eps) * p;
  if (dq.get_den() != 1) throw ParameterError("(4 - eps) p is not an integer");
  const unsigned long d = dq.get_num().get_ui();
  const unsigned s = 2 * p - 1;
  const unsigned t = p - 1;
  if (static_cast<unsigned long>(s) * s <= d * t) throw ParameterError("parameters violate s^2 > d t");
  const auto D = static_cast<unsigned>(d);

  SeparationReport r;
  r.theorem_id = 2;
  r.parameters = {{"p", p}, {"eps", eps.get_str()}, {"d", d}, {"s", s}, {"t", t}};
  Stopwatch sw;

  const Graph g = kneser(D, s, {t});
  r.n = g.size();
  r.timings["graph"] = sw.lap();

  const auto cert = make_certificate(D, s, t, CertificateMode::equality);
  r.certificate = verify_certificate(cert, false);
  r.kappa = cert.kappa;
  r.certificate_mode = "eq";
  r.timings["certificate"] = sw.lap();

  const BiRepresentation rep = birep_gp(D, mod);
  r.representation_dimension = rep.dimension();
  const FpMatrix prod = rep.product();
  r.timings["matrix"] = sw.lap();
  r.represents = represents(prod, g);
  r.timings["represents"] = sw.lap();
  r.rank_actual = rank_fp(prod);
  r.timings["rank"] = sw.lap();
  r.rank_bound = binomial_prefix_sum(d, p - 1);
  r.minrank_lower = ceil_div(r.n, r.rank_actual);

  const mpq_class envelope = 2 * (4 - eps) / eps;
  const mpq_class pp(static_cast<unsigned long>(p) * p);
  const bool hypothesis = eps * pp / 2 <= eps * pp - eps * p + 1;
  r.details["envelope"] = envelope.get_str();
  r.details["envelope_hypothesis_holds"] = hypothesis;
  r.details["kappa_within_envelope"] = cert.kappa <= envelope;
  r.details["p_over_log2_n"] = static_cast<double>(p) / std::log2(static_cast<double>(r.n));
  r.details["rank_vs_dimension"] = {{"dimension", rep.dimension()}, {"rank", r.rank_actual}};

  const std::string stem = "theorem2_p" + std::to_string(p) + "_eps" + std::to_string(eps_num) + "_" +
                           std::to_string(eps_den);
  r.artifacts.push_back(matrix_artifact(rep.a, "factor_a", stem + "_a", opts));
  r.artifacts.push_back(matrix_artifact(rep.b, "factor_b", stem + "_b", opts));
  r.artifacts.push_back(graph_artifact(g, stem + "_graph", opts));
  r.timings["artifacts"] = sw.lap();

  r.exponents.push_back(exponent_context(2, p, eps));
  r.exponents.push_back(exponent_theorem2_limit());
  assert_report_invariants(r);
  if (r.representation_dimension != r.rank_bound) throw IntegrityError("bi-representation dimension mismatch");
  return r;
}

SeparationReport run_theorem3(unsigned t, unsigned p, const RunOptions& opts) {
  const PrimeModulus mod(p);
  if (t < 1) throw ParameterError("separation 3 needs t >= 1");
  if (t > 7) throw ParameterError("separation 3 is limited to t <= 7");
  const unsigned d = 8 * t;
  const unsigned s = 4 * t;
  if (p <= s) throw ParameterError("separation 3 needs p > 4t");
  const auto T = all_below_or_equal(t);

  SeparationReport r;
  r.theorem_id = 3;
  r.parameters = {{"p", p}, {"t", t}, {"d", d}, {"s", s}, {"T", T}};
  Stopwatch sw;

  const Graph g = kneser(d, s, T);
  r.n = g.size();
  r.timings["graph"] = sw.lap();

  const auto cert = make_certificate(d, s, t, CertificateMode::inequality);
  r.certificate = verify_certificate(cert, r.n <= 4096);
  r.kappa = cert.kappa;
  r.certificate_mode = "ineq";
  r.timings["certificate"] = sw.lap();

  const FpMatrix m = rep_matrix_kneser(d, s, T, mod);
  r.representation_dimension = m.rows();
  r.timings["matrix"] = sw.lap();
  r.represents = represents(m, g);
  r.timings["represents"] = sw.lap();
  r.rank_actual = rank_fp(m);
  r.timings["rank"] = sw.lap();
  r.rank_bound = binomial(d, s - static_cast<unsigned>(T.size()));
  r.minrank_lower = ceil_div(r.n, r.rank_actual);
  r.details["polynomial_bound"] = binomial_prefix_sum(d, s - T.size());

  if (r.n <= 2000) {
    // the polynomial bi-representation computes the same m(|A n B|) table
    const BiRepresentation rep = birep_kneser(d, s, T, mod);
    const FpMatrix prod = rep.product();
    r.details["birep_dimension"] = rep.dimension();
    r.details["birep_matches_matrix"] = prod == m;
    r.timings["cross_check"] = sw.lap();
    if (!(prod == m)) throw IntegrityError("bi-representation product differs from the inclusion matrix");
  }

  const std::string stem = "theorem3_t" + std::to_string(t) + "_p" + std::to_string(p);
  r.artifacts.push_back(matrix_artifact(m, "representing_matrix", stem + "_matrix", opts));
  r.artifacts.push_back(graph_artifact(g, stem + "_graph", opts));
  r.timings["artifacts"] = sw.lap();

  r.exponents.push_back(exponent_context(3));
  assert_report_invariants(r);
  return r;
}

json to_json(const ExponentContext& e) {
  return {{"expression", e.expression},
          {"lower", to_decimal(e.value.lo, 8)},
          {"upper", to_decimal(e.value.hi, 8)},
          {"lower_exact", e.value.lo.get_str()},
          {"upper_exact", e.value.hi.get_str()},
          {"assertable", false}};
}

json to_json(const SeparationReport& r, bool with_timings) {
  json j;
  j["schema"] = kReportSchema;
  j["theorem"] = r.theorem_id;
  j["parameters"] = r.parameters;
  j["n"] = r.n;
  j["kappa"] = rational_text(r.kappa);
  j["certificate"] = {{"mode", r.certificate_mode},
                      {"verified", r.certificate.verified},
                      {"classes_checked", r.certificate.classes_checked},
                      {"pairs_audited", r.certificate.pairs_audited}};
  j["rank_bound"] = r.rank_bound;
  j["rank_actual"] = r.rank_actual;
  j["representation_dimension"] = r.representation_dimension;
  j["represents"] = r.represents;
  j["minrank_lower"] = r.minrank_lower;
  j["exponents"] = json::array();
  for (const auto& e : r.exponents) j["exponents"].push_back(to_json(e));
  j["details"] = r.details;
  j["artifacts"] = json::array();
  for (const auto& a : r.artifacts) j["artifacts"].push_back({{"kind", a.kind}, {"path", a.path}, {"sha256", a.sha256}});
  if (with_timings) j["timings"] = r.timings;
  return j;
}

json run_sidequests() {
  json out;
  out["schema"] = kReportSchema;

  // G_1: Gram matrix upper bound against the basis-vector independent set.
  json g1s = json::array();
  for (auto [d, p] : {std::pair{3u, 2u}, {4u, 2u}, {3u, 3u}}) {
    const PrimeModulus mod(p);
    const Graph g = g1(d, p);
    FpMatrix rows(g.size(), d, mod);
    std::vector<std::size_t> basis;
    for (std::size_t v = 0; v < g.size(); ++v) {
      const auto& c = std::get<FieldVectorVertex>(g.labels()[v]).coords;
      unsigned weight = 0;
      for (unsigned i = 0; i < d; ++i) {
        if (c[i]) rows.set(v, i, c[i]);
        weight += c[i] != 0;
      }
      if (weight == 1 && std::find(c.begin(), c.end(), 1u) != c.end()) basis.push_back(v);
    }
    const FpMatrix gram = matmul_fp(rows, rows.transpose());
    const bool reps = represents(gram, g);
    const std::size_t gram_rank = rank_fp(gram);
    const bool basis_independent = basis.size() == d && is_independent_set(g, basis);
    const auto alpha = independence_number(g);
    if (!reps || gram_rank > d || !basis_independent || !alpha.exact || alpha.lower < d) {
      throw IntegrityError("G_1(" + std::to_string(d) + "," + std::to_string(p) + ") claim failed");
    }
    g1s.push_back({{"d", d},
                   {"p", p},
                   {"n", g.size()},
                   {"gram_represents", reps},
                   {"gram_rank", gram_rank},
                   {"basis_independent", basis_independent},
                   {"alpha", alpha.lower},
                   {"minrank", gram_rank},
                   {"minrank_exact", gram_rank == d && alpha.lower >= d}});
  }
  out["g1"] = g1s;

  json g2s = json::array();
  for (auto [d, p] : {std::pair{4u, 2u}, {6u, 2u}, {4u, 3u}}) {
    const PrimeModulus mod(p);
    const Graph g = g2(d, p);
    const Graph co = complement(g);
    const BiRepresentation rep = birep_g2_complement(d, mod);
    const bool ok = verify_birep(co, rep);
    const std::size_t rank = rank_fp(rep.product());
    const std::uint64_t bound = binomial(d + p - 2, p - 1) + 1;
    std::uint64_t floor_count = 1;
    for (unsigned i = 0; i + p < d + 1; ++i) floor_count *= p;
    if (!ok || rep.dimension() != bound || rank > bound || g.size() < floor_count) {
      throw IntegrityError("G_2(" + std::to_string(d) + "," + std::to_string(p) + ") claim failed");
    }
    g2s.push_back({{"d", d},
                   {"p", p},
                   {"n", g.size()},
                   {"vertex_floor", floor_count},
                   {"bound", bound},
                   {"birep_verified", ok},
                   {"rank_actual", rank},
                   {"minrank_lower_from_bound", ceil_div(g.size(), bound)},
                   {"minrank_lower", ceil_div(g.size(), rank)}});
  }
  out["g2"] = g2s;

  json ternary = json::array();
  for (unsigned d = 1; d <= 3; ++d) {
    const DiGraph g = directed_ternary(d);
    const BiRepresentation rep = birep_directed_ternary(d);
    const bool ok = verify_birep(g, rep);
    const std::size_t rank = rank_fp(rep.product());
    std::vector<std::size_t> binary;
    for (std::size_t v = 0; v < g.size(); ++v) {
      const auto& c = std::get<FieldVectorVertex>(g.labels()[v]).coords;
      if (std::all_of(c.begin(), c.end(), [](auto x) { return x <= 1; })) binary.push_back(v);
    }
    const bool acyclic = is_acyclic(induced_subgraph(g, binary));
    SearchBudget budget;
    budget.max_nodes_expanded = 20'000'000;
    budget.time_limit_seconds = 30;
    const auto mais = max_acyclic_induced(g, budget);
    const std::size_t expect = std::size_t{1} << d;
    if (!ok || rank != expect || !acyclic || binary.size() != expect || mais.lower < expect) {
      throw IntegrityError("directed ternary d=" + std::to_string(d) + " claim failed");
    }
    json entry = {{"d", d},
                  {"n", g.size()},
                  {"birep_verified", ok},
                  {"rank_actual", rank},
                  {"binary_cube_acyclic", acyclic},
                  {"max_acyclic_lower", mais.lower},
                  {"max_acyclic_exact", mais.exact}};
    if (mais.exact) entry["max_acyclic"] = mais.lower;
    ternary.push_back(entry);
  }
  out["ternary"] = ternary;
  return out;
}

}  // namespace minrank
