#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "minrank/certificates.hpp"
#include "minrank/errors.hpp"
#include "minrank/experiments.hpp"
#include "minrank/ff_linalg.hpp"
#include "minrank/graph_io.hpp"
#include "minrank/graphs.hpp"
#include "minrank/inclusion.hpp"
#include "minrank/matrix_io.hpp"
#include "minrank/oracle.hpp"
#include "minrank/polyrep.hpp"

using nlohmann::json;
using namespace minrank;

namespace {

// 0 ok, 1 an internal assertion failed, 2 bad parameters or input
constexpr int kExitIntegrity = 1;
constexpr int kExitUsage = 2;

void emit(const json& j, const std::string& out) {
  const std::string text = j.dump(2) + "\n";
  if (out.empty() || out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) throw FormatError("cannot write " + out);
  f << text;
}

std::vector<unsigned> parse_range(const std::string& spec) {
  std::vector<unsigned> v;
  const auto dots = spec.find("..");
  if (dots == std::string::npos) {
    v.push_back(static_cast<unsigned>(std::stoul(spec)));
    return v;
  }
  const unsigned lo = static_cast<unsigned>(std::stoul(spec.substr(0, dots)));
  const unsigned hi = static_cast<unsigned>(std::stoul(spec.substr(dots + 2)));
  if (hi < lo) throw ParameterError("empty range " + spec);
  for (unsigned x = lo; x <= hi; ++x) v.push_back(x);
  return v;
}

struct FamilyArgs {
  std::string family;
  unsigned d = 0, s = 0, t = 0, q = 0, p = 2;
  std::vector<unsigned> T;
  bool have_t = false;
};

void add_family_options(CLI::App* sub, FamilyArgs& a, bool need_family) {
  auto* fam = sub->add_option("--family", a.family, "graph family");
  if (need_family) fam->required();
  sub->add_option("--d", a.d, "universe size or dimension");
  sub->add_option("--s", a.s, "set size");
  sub->add_option("--T", a.T, "allowed intersection sizes")->delimiter(',');
  sub->add_option("--t", a.t, "intersection residue")->each([&a](const std::string&) { a.have_t = true; });
  sub->add_option("--q", a.q, "modulus of the residue class");
  sub->add_option("--p", a.p, "prime");
}

AnyGraph build_family(const FamilyArgs& a) {
  if (a.family == "kneser") {
    if (a.T.empty() && a.have_t) return kneser(a.d, a.s, {a.t});
    return kneser(a.d, a.s, a.T);
  }
  if (a.family == "kneser-mod") return kneser_mod(a.d, a.s, a.t, a.q);
  if (a.family == "g1") return g1(a.d, a.p);
  if (a.family == "g2") return g2(a.d, a.p);
  if (a.family == "ternary") return directed_ternary(a.d);
  throw ParameterError("unknown family '" + a.family + "'");
}

json outcome_json(const OracleOutcome& o) {
  json j = {{"exact", o.exact}, {"nodes", o.nodes}};
  if (o.exact) {
    j["value"] = o.lower;
  } else {
    j["lower"] = o.lower;
    j["upper"] = o.upper;
    j["abort_reason"] = o.abort_reason;
  }
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"minrank-lab: exact minrank bounds for Kneser-type graph families"};
  app.require_subcommand(1);

  std::string out;

  auto* rank_cmd = app.add_subcommand("rank", "exact rank of a matrix file");
  std::string matrix_path;
  rank_cmd->add_option("matrix", matrix_path, "matrix text file")->required();
  std::optional<unsigned> rank_p;
  rank_cmd->add_option("--p", rank_p, "reduce an integer matrix mod p first");

  auto* gen_cmd = app.add_subcommand("gen-graph", "generate a graph as JSON");
  FamilyArgs gen;
  add_family_options(gen_cmd, gen, true);
  gen_cmd->add_option("--out", out, "output file");

  auto* birep_cmd = app.add_subcommand("birep", "build and verify a functional bi-representation");
  FamilyArgs br;
  add_family_options(birep_cmd, br, true);
  birep_cmd->add_option("--out", out, "output file");

  auto* inc_cmd = app.add_subcommand("inclusion-rep", "inclusion-matrix representing matrix of a Kneser complement");
  FamilyArgs inc;
  add_family_options(inc_cmd, inc, false);
  inc_cmd->add_option("--out", out, "matrix text output")->required();

  auto* cert_cmd = app.add_subcommand("certify-chiv", "verify the vector-chromatic certificate of K(d,s,.)");
  unsigned cd = 0, cs = 0, ct = 0;
  std::string mode = "ineq";
  bool exhaustive = false;
  cert_cmd->add_option("--d", cd)->required();
  cert_cmd->add_option("--s", cs)->required();
  cert_cmd->add_option("--t", ct)->required();
  cert_cmd->add_option("--mode", mode)->check(CLI::IsMember({"ineq", "eq"}));
  cert_cmd->add_flag("--exhaustive", exhaustive, "audit every adjacent pair");

  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force oracles on small graphs");
  std::string graph_path, what;
  unsigned op = 2;
  SearchBudget budget;
  oracle_cmd->add_option("--graph", graph_path)->required();
  oracle_cmd->add_option("--what", what)->required()->check(
      CLI::IsMember({"alpha", "cliquecover", "minrank", "mais", "sandwich"}));
  oracle_cmd->add_option("--p", op);
  oracle_cmd->add_option("--budget", budget.max_nodes_expanded, "node budget");
  oracle_cmd->add_option("--time-limit", budget.time_limit_seconds, "seconds");
  oracle_cmd->add_option("--max-rank", budget.max_rank);

  auto* thm_cmd = app.add_subcommand("theorem", "reproduce one separation instance");
  int which = 0;
  unsigned tp = 2, tl = 3, tt = 1;
  long eps_num = 1, eps_den = 3;
  std::string artifacts;
  bool no_timings = false;
  thm_cmd->add_option("--which", which)->required()->check(CLI::Range(1, 3));
  thm_cmd->add_option("--p", tp);
  thm_cmd->add_option("--l", tl);
  thm_cmd->add_option("--eps-num", eps_num);
  thm_cmd->add_option("--eps-den", eps_den);
  thm_cmd->add_option("--t", tt);
  thm_cmd->add_option("--out", out);
  thm_cmd->add_option("--emit-artifacts", artifacts, "directory for matrix and graph files");
  thm_cmd->add_flag("--no-timings", no_timings, "omit timing fields");

  auto* sweep_cmd = app.add_subcommand("sweep", "run a range of theorem-1 instances");
  std::string l_range = "3..4";
  int sweep_which = 1;
  unsigned sweep_p = 2;
  sweep_cmd->add_option("--which", sweep_which)->check(CLI::Range(1, 1));
  sweep_cmd->add_option("--p", sweep_p);
  sweep_cmd->add_option("--l", l_range, "l or lo..hi");
  sweep_cmd->add_option("--out", out);
  sweep_cmd->add_option("--emit-artifacts", artifacts);
  sweep_cmd->add_flag("--no-timings", no_timings);

  auto* side_cmd = app.add_subcommand("sidequests", "check the G_1, G_2 and ternary side claims");
  side_cmd->add_option("--out", out);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*rank_cmd) {
      AnyMatrix m = read_matrix_file(matrix_path);
      if (rank_p) {
        const PrimeModulus mod(*rank_p);
        if (auto* im = std::get_if<IntMatrix>(&m)) {
          m = mod_reduce(*im, mod);
        } else {
          throw ParameterError("--p only applies to integer matrices");
        }
      }
      json j;
      std::visit(
          [&j](const auto& mm) {
            j["rows"] = mm.rows();
            j["cols"] = mm.cols();
          },
          m);
      j["field"] = std::holds_alternative<FpMatrix>(m) ? "F_" + std::to_string(std::get<FpMatrix>(m).modulus().value())
                                                       : std::string("Q");
      j["rank"] = rank_of(m);
      emit(j, "");
    } else if (*gen_cmd) {
      const AnyGraph g = build_family(gen);
      emit(std::visit([](const auto& gg) { return graph_to_json(gg); }, g), out);
    } else if (*birep_cmd) {
      const PrimeModulus mod(br.family == "ternary" ? 3 : br.p);
      std::optional<BiRepresentation> rep;
      bool ok = false;
      std::size_t n = 0;
      if (br.family == "kneser") {
        const Graph g = kneser(br.d, br.s, br.T);
        rep = birep_kneser(br.d, br.s, br.T, mod);
        ok = verify_birep(g, *rep);
        n = g.size();
      } else if (br.family == "gp") {
        const unsigned s = 2 * br.p - 1;
        const Graph g = kneser(br.d, s, {br.p - 1});
        rep = birep_gp(br.d, mod);
        ok = verify_birep(g, *rep);
        n = g.size();
      } else if (br.family == "g2c") {
        const Graph g = g2(br.d, br.p);
        rep = birep_g2_complement(br.d, mod);
        ok = verify_birep(complement(g), *rep);
        n = g.size();
      } else if (br.family == "ternary") {
        const DiGraph g = directed_ternary(br.d);
        rep = birep_directed_ternary(br.d);
        ok = verify_birep(g, *rep);
        n = g.size();
      } else {
        throw ParameterError("unknown bi-representation family '" + br.family + "'");
      }
      json j = {{"family", br.family},
                {"n", n},
                {"field", mod.value()},
                {"dimension", rep->dimension()},
                {"verified", ok},
                {"rank", rank_fp(rep->product())},
                {"a", to_matrix_text(rep->a)},
                {"b", to_matrix_text(rep->b)}};
      emit(j, out);
      if (!ok) return kExitIntegrity;
    } else if (*inc_cmd) {
      const PrimeModulus mod(inc.p);
      std::optional<FpMatrix> m;
      std::optional<Graph> g;
      std::uint64_t bound = 0;
      if (inc.q != 0) {
        m = rep_matrix_kneser_mod(inc.d, inc.s, inc.t, inc.q, mod);
        g = kneser_mod(inc.d, inc.s, inc.t, inc.q);
        bound = binomial(inc.d, inc.q - 1);
      } else {
        std::vector<unsigned> T = inc.T;
        if (T.empty() && inc.have_t) T = {inc.t};
        m = rep_matrix_kneser(inc.d, inc.s, T, mod);
        g = kneser(inc.d, inc.s, T);
        bound = binomial(inc.d, inc.s - static_cast<unsigned>(T.size()));
      }
      {
        std::ofstream f(out);
        if (!f) throw FormatError("cannot write " + out);
        write_matrix(f, *m);
      }
      const bool ok = represents(*m, *g);
      const std::size_t r = rank_fp(*m);
      json side = {{"n", g->size()}, {"rank_bound", bound}, {"rank_actual", r}, {"represents", ok}};
      emit(side, out + ".json");
      emit(side, "");
      if (!ok || r > bound) return kExitIntegrity;
    } else if (*cert_cmd) {
      const auto c = make_certificate(cd, cs, ct, mode == "eq" ? CertificateMode::equality : CertificateMode::inequality);
      const auto chk = verify_certificate(c, exhaustive);
      emit({{"kappa", c.kappa.get_str()},
            {"z", c.z.get_str()},
            {"mode", mode},
            {"verified", chk.verified},
            {"classes_checked", chk.classes_checked},
            {"pairs_audited", chk.pairs_audited}},
           "");
      if (!chk.verified) return kExitIntegrity;
    } else if (*oracle_cmd) {
      const AnyGraph any = read_graph_file(graph_path);
      const PrimeModulus mod(op);
      json j = {{"what", what}};
      if (what == "mais") {
        const auto* dg = std::get_if<DiGraph>(&any);
        j["result"] = outcome_json(max_acyclic_induced(dg ? *dg : as_digraph(std::get<Graph>(any)), budget));
      } else if (what == "minrank") {
        j["field"] = op;
        j["result"] = std::visit([&](const auto& g) { return outcome_json(minrank_bruteforce(g, mod, budget)); }, any);
      } else {
        const auto* g = std::get_if<Graph>(&any);
        if (!g) throw ParameterError(what + " needs an undirected graph");
        if (what == "alpha") {
          j["result"] = outcome_json(independence_number(*g, budget));
        } else if (what == "cliquecover") {
          j["result"] = outcome_json(clique_cover_number(*g, budget));
        } else {
          const auto rep = check_sandwich(*g, mod, budget);
          j["field"] = op;
          j["n"] = rep.n;
          j["alpha"] = outcome_json(rep.alpha);
          j["clique_cover"] = outcome_json(rep.clique_cover);
          j["minrank"] = outcome_json(rep.minrank);
          j["minrank_complement"] = outcome_json(rep.minrank_complement);
          j["conclusive"] = rep.conclusive;
        }
      }
      emit(j, "");
    } else if (*thm_cmd) {
      RunOptions opts;
      if (!artifacts.empty()) opts.artifact_dir = artifacts;
      SeparationReport r;
      if (which == 1) r = run_theorem1(tp, tl, opts);
      else if (which == 2) r = run_theorem2(tp, eps_num, eps_den, opts);
      else r = run_theorem3(tt, tp, opts);
      emit(to_json(r, !no_timings), out);
    } else if (*sweep_cmd) {
      RunOptions opts;
      if (!artifacts.empty()) opts.artifact_dir = artifacts;
      const auto ls = parse_range(l_range);
      std::vector<std::future<SeparationReport>> cells;
      for (unsigned l : ls) cells.push_back(std::async(std::launch::async, run_theorem1, sweep_p, l, opts));
      json all = {{"schema", kReportSchema}, {"cells", json::array()}};
      // cells were launched in ascending l, so collecting in order keeps the output sorted
      for (auto& c : cells) all["cells"].push_back(to_json(c.get(), !no_timings));
      emit(all, out);
    } else if (*side_cmd) {
      emit(run_sidequests(), out);
    }
  } catch (const IntegrityError& e) {
    std::cerr << "integrity failure: " << e.what() << "\n";
    return kExitIntegrity;
  } catch (const ParameterError& e) {
    std::cerr << "parameter error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DimensionError& e) {
    std::cerr << "dimension error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const FormatError& e) {
    std::cerr << "format error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return 0;
}
