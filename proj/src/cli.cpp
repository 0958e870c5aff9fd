#include "fanoturan/cli.hpp"

#include <omp.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "fanoturan/claims.hpp"
#include "fanoturan/detect.hpp"
#include "fanoturan/error.hpp"
#include "fanoturan/io.hpp"
#include "fanoturan/multigraph.hpp"
#include "fanoturan/report.hpp"
#include "fanoturan/search.hpp"

namespace fanoturan {
namespace {

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
  } else {
    std::ifstream file(path);
    if (!file) throw ParameterError("cannot read " + path);
    buf << file.rdbuf();
  }
  return buf.str();
}

std::string valid_claims() {
  std::string out;
  for (const auto& c : claim_registry()) out += (out.empty() ? "" : ", ") + c.id;
  return out + ", all";
}

int default_jobs() {
  if (const char* env = std::getenv("FANOTURAN_JOBS")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      throw ParameterError(std::string("FANOTURAN_JOBS is not an integer: ") + env);
    }
  }
  return 0;
}

struct Options {
  std::string format = "text";
  // construct
  std::string family;
  int n = 0;
  // check
  std::string file;
  std::string pattern = "fano";
  std::string method = "embedding";
  // search / verify
  std::string what;
  bool long_run = false;
  std::string checkpoint;
  int jobs = 0;
  std::uint64_t seed = 42;
  // multigraph
  int p = 0;
  std::uint64_t budget = MaxEdgesOptions{}.node_budget;
};

int do_construct(const Options& o, std::ostream& out) {
  const auto family = family_from_name(o.family);
  if (!family) throw ParameterError("unknown family " + o.family + "; expected complete, balanced_bipartite, j7, fano or pasch");
  const auto h = construct(*family, o.n);
  if (o.format == "json")
    out << to_json(h).dump() << '\n';
  else
    out << to_text(h);
  return kExitPass;
}

int do_check(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  const auto h = parse_hypergraph(read_input(o.file, in));
  nlohmann::ordered_json report{{"pattern", o.pattern}};
  bool found = false;
  if (o.pattern != "fano") {
    const int k = o.pattern[1] - '0';
    const auto clique = find_clique(h, k);
    found = clique.has_value();
    report["contains"] = found;
    if (clique) {
      auto vs = nlohmann::json::array();
      for (Vertex v = 0; v < h.n(); ++v)
        if (*clique >> v & 1) vs.push_back(v);
      report["witness"] = vs;
    }
  } else {
    std::vector<DetectionMethod> methods;
    if (o.method == "all")
      methods = {DetectionMethod::embedding, DetectionMethod::crossing_pairs, DetectionMethod::pasch_matching};
    else
      methods = {*method_from_name(o.method)};
    std::optional<bool> agreed;
    bool disagreement = false;
    for (auto m : methods) {
      const auto copy = find_fano(h, m);
      nlohmann::ordered_json r{{"method", method_name(m)}, {"contains", copy.has_value()}};
      if (copy) {
        auto lines = nlohmann::json::array();
        for (const auto& t : *copy) lines.push_back({t.a, t.b, t.c});
        r["witness"] = lines;
      }
      report["results"].push_back(r);
      if (agreed && *agreed != copy.has_value()) disagreement = true;
      agreed = copy.has_value();
    }
    found = *agreed && !disagreement;
    if (disagreement) {
      err << "detectors disagree\n";
      report["disagreement"] = true;
    }
  }
  if (o.format == "json") {
    out << report.dump(2) << '\n';
  } else if (report.contains("results")) {
    for (const auto& r : report["results"]) out << r["method"].get<std::string>() << ": " << r["contains"] << '\n';
  } else {
    out << o.pattern << ": " << report["contains"];
    if (report.contains("witness")) out << " " << report["witness"].dump();
    out << '\n';
  }
  return found ? kExitPass : kExitFail;
}

int do_search(const Options& o, std::ostream& out) {
  if (o.what != "ex") throw ParameterError("unknown search target " + o.what + "; expected ex");
  ExtremalOptions e;
  if (!o.checkpoint.empty()) e.checkpoint_dir = o.checkpoint;
  const auto r = max_fano_free_edges(o.n, e);
  if (o.format == "json") {
    nlohmann::ordered_json j{{"n", o.n}, {"ex", r.edges}};
    j["classes"] = nlohmann::json::array();
    for (const auto& c : r.classes) j["classes"].push_back({{"code", c.hex()}, {"hypergraph", to_json(c.hypergraph())}});
    j["scans"] = nlohmann::json::array();
    for (const auto& s : r.scans)
      j["scans"].push_back({{"complement_size", s.complement_size}, {"space", s.space}, {"visited", s.visited},
                            {"survivors", s.survivors}});
    out << j.dump(2) << '\n';
    return kExitPass;
  }
  out << "ex(" << o.n << ", Fano) = " << r.edges << '\n';
  for (const auto& s : r.scans)
    out << "  complement size " << s.complement_size << ": " << s.visited << "/" << s.space << " states, "
        << s.survivors << " Fano-free\n";
  for (const auto& c : r.classes) out << "  class " << c.hex() << '\n';
  return kExitPass;
}

int do_verify(const Options& o, std::ostream& out, std::ostream& err) {
  const int jobs = o.jobs > 0 ? o.jobs : default_jobs();
  if (jobs > 0) omp_set_num_threads(jobs);
  ClaimOptions co;
  co.seed = o.seed;
  co.long_run = o.long_run;
  if (!o.checkpoint.empty()) co.checkpoint_dir = o.checkpoint;

  std::vector<std::string> ids;
  if (o.what == "all") {
    for (const auto& c : claim_registry())
      if (!c.long_run || o.long_run) ids.push_back(c.id);
  } else {
    const auto& reg = claim_registry();
    if (std::none_of(reg.begin(), reg.end(), [&](const auto& c) { return c.id == o.what; })) {
      err << "unknown claim id '" << o.what << "'; valid ids: " << valid_claims() << '\n';
      return kExitUsage;
    }
    ids.push_back(o.what);
  }
  std::vector<Certificate> certs;
  for (const auto& id : ids) certs.push_back(run_claim(id, co));
  const int failures = emit_report(certs, o.format == "json" ? ReportFormat::json : ReportFormat::text, out);
  return failures == 0 ? kExitPass : kExitFail;
}

int do_multigraph(const std::string& sub, const Options& o, std::istream& in, std::ostream& out) {
  if (sub == "f4") {
    out << f4_formula(o.n) << '\n';
    return kExitPass;
  }
  if (sub == "extremal") {
    out << to_json(extremal_4multigraph(o.n)).dump() << '\n';
    return kExitPass;
  }
  if (sub == "f5-constructions") {
    const auto [turan, bipartite] = f5_lower_constructions(o.n);
    if (o.format == "json") {
      out << nlohmann::json{to_json(turan), to_json(bipartite)}.dump() << '\n';
    } else {
      out << "turan " << turan.total_edges() << (has_three_crossing_pairs(turan) ? " crossing" : " crossing-free")
          << '\n'
          << "bipartite " << bipartite.total_edges()
          << (has_three_crossing_pairs(bipartite) ? " crossing" : " crossing-free") << '\n';
    }
    return kExitPass;
  }
  if (sub == "max") {
    MaxEdgesOptions mo;
    mo.long_run = o.long_run;
    mo.node_budget = o.budget;
    const auto r = max_edges_no_crossing(o.p, o.n, mo);
    if (o.format == "json")
      out << nlohmann::ordered_json{{"p", o.p}, {"n", o.n}, {"edges", r.edges}, {"nodes", r.nodes},
                                    {"witness", to_json(r.witness)}}
                 .dump()
          << '\n';
    else
      out << "f" << o.p << "(" << o.n << ") = " << r.edges << "  (" << r.nodes << " nodes)\n";
    return kExitPass;
  }
  // crossing
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(read_input(o.file, in));
  } catch (const nlohmann::json::exception& e) {
    throw ParameterError(std::string("invalid multigraph JSON: ") + e.what());
  }
  const auto w = has_three_crossing_pairs(pmultigraph_from_json(j));
  if (w)
    out << "crossing pairs: layers " << w->i << " " << w->j << " " << w->k << ", vertices " << w->w << " " << w->x
        << " " << w->y << " " << w->z << '\n';
  else
    out << "no crossing pairs\n";
  return w ? kExitPass : kExitFail;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fano Turán constructions, detectors and exhaustive verifiers", "fanoturan"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);
  Options o;
  const auto format_option = [&o](CLI::App* cmd) {
    cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };

  auto* construct_cmd = app.add_subcommand("construct", "Print a named hypergraph");
  construct_cmd->add_option("family", o.family, "complete, balanced_bipartite, j7, fano or pasch")->required();
  construct_cmd->add_option("n", o.n, "Vertex count")->required();
  format_option(construct_cmd);

  auto* check_cmd = app.add_subcommand("check", "Test a hypergraph file for a Fano copy or a clique");
  check_cmd->add_option("file", o.file, "Hypergraph file, or - for standard input")->required();
  check_cmd->add_option("--pattern", o.pattern)->check(CLI::IsMember({"fano", "k4", "k5", "k6"}));
  check_cmd->add_option("--method", o.method)->check(CLI::IsMember({"embedding", "crossing", "pasch", "all"}));
  format_option(check_cmd);

  auto* search_cmd = app.add_subcommand("search", "Exact extremal search");
  search_cmd->add_option("target", o.what, "ex")->required();
  search_cmd->add_option("--n", o.n, "Vertex count, 4..8")->required();
  search_cmd->add_flag("--long-run", o.long_run, "Accepted for symmetry with verify; every n in [4, 8] runs without it");
  search_cmd->add_option("--checkpoint", o.checkpoint, "Directory for checkpoint files");
  format_option(search_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "Run one verifier or all of them");
  verify_cmd->add_option("claim", o.what, "Claim id or all")->required();
  verify_cmd->add_option("--jobs", o.jobs, "Worker threads (default: FANOTURAN_JOBS, else all cores)")
      ->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--seed", o.seed, "Seed for sampled claims");
  verify_cmd->add_flag("--long-run", o.long_run, "Include long-running claims");
  verify_cmd->add_option("--checkpoint", o.checkpoint, "Directory for checkpoint files");
  format_option(verify_cmd);

  auto* mg = app.add_subcommand("multigraph", "p-multigraph formulas, constructions and searches");
  mg->require_subcommand(1);
  auto* mg_f4 = mg->add_subcommand("f4", "Closed form for f4(n)");
  mg_f4->add_option("n", o.n)->required();
  auto* mg_ext = mg->add_subcommand("extremal", "Extremal crossing-free 4-multigraph as JSON");
  mg_ext->add_option("n", o.n)->required();
  auto* mg_f5 = mg->add_subcommand("f5-constructions", "Both crossing-free 5-multigraph constructions");
  mg_f5->add_option("n", o.n)->required();
  format_option(mg_f5);
  auto* mg_max = mg->add_subcommand("max", "Exact f_p(n) by branch and bound");
  mg_max->add_option("--p", o.p)->required();
  mg_max->add_option("--n", o.n)->required();
  mg_max->add_option("--budget", o.budget, "Node budget");
  mg_max->add_flag("--long-run", o.long_run, "Allow (p, n) = (5, 6)");
  format_option(mg_max);
  auto* mg_cross = mg->add_subcommand("crossing", "Find three crossing pairs in a multigraph JSON file");
  mg_cross->add_option("file", o.file, "Multigraph JSON, or - for standard input")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*construct_cmd) return do_construct(o, out);
    if (*check_cmd) return do_check(o, in, out, err);
    if (*search_cmd) return do_search(o, out);
    if (*verify_cmd) return do_verify(o, out, err);
    for (const auto* sub : mg->get_subcommands()) return do_multigraph(sub->get_name(), o, in, out);
  } catch (const CapabilityError& e) {
    err << "capability error: " << e.what() << '\n';
    if (e.best_lower_bound()) err << "best lower bound found: " << *e.best_lower_bound() << '\n';
    return kExitCapability;
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace fanoturan
