#include <gtest/gtest.h>

#include <regex>
#include <set>
#include <sstream>

#include "fanoturan/claims.hpp"
#include "fanoturan/cli.hpp"
#include "fanoturan/error.hpp"
#include "fanoturan/io.hpp"
#include "fanoturan/multigraph.hpp"
#include "fanoturan/report.hpp"

using namespace fanoturan;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome cli(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = run(args, in, out, err);
  return {code, out.str(), err.str()};
}

Certificate make_cert(const std::string& claim, bool pass) {
  Certificate c;
  c.claim = claim;
  c.pass = pass;
  c.space = c.visited = 10;
  if (!pass) c.witnesses.push_back({{"n", 1}});
  return c;
}

std::string strip_elapsed(const std::string& s) {
  return std::regex_replace(s, std::regex(R"("elapsed_ms": [0-9]+)"), "\"elapsed_ms\": 0");
}

}  // namespace

TEST(Certificate, JsonSchemaAndRoundTrip) {
  auto c = make_cert("demo", false);
  c.seed = 9;
  c.elapsed_ms = 12;
  const auto j = to_json(c);
  EXPECT_EQ(j.dump(),
            R"({"claim":"demo","elapsed_ms":12,"seed":9,"space":10,"tool_version":")" + std::string(kToolVersion) +
                R"(","verdict":"fail","visited":10,"witnesses":[{"n":1}]})");
  const auto back = certificate_from_json(j);
  EXPECT_EQ(back.claim, "demo");
  EXPECT_FALSE(back.pass);
  EXPECT_EQ(back.witnesses, c.witnesses);
}

TEST(Certificate, ProblemsAreReported) {
  auto c = make_cert("demo", false);
  c.witnesses = nlohmann::json::array();
  EXPECT_NE(certificate_problem(c), "");
  auto p = make_cert("demo", true);
  p.visited = 9;
  EXPECT_NE(certificate_problem(p), "");
  EXPECT_EQ(certificate_problem(make_cert("demo", true)), "");
}

TEST(Report, EmptyList) {
  std::ostringstream text, json;
  EXPECT_EQ(emit_report({}, ReportFormat::text, text), 0);
  EXPECT_EQ(text.str(), "no claims run\n");
  EXPECT_EQ(emit_report({}, ReportFormat::json, json), 0);
  EXPECT_EQ(json.str(), "[]\n");
}

TEST(Report, MixedVerdicts) {
  const std::vector<Certificate> certs{make_cert("a", true), make_cert("b", false)};
  std::ostringstream out;
  EXPECT_EQ(emit_report(certs, ReportFormat::text, out), 1);
  EXPECT_NE(out.str().find("pass  a"), std::string::npos);
  EXPECT_NE(out.str().find("FAIL  b"), std::string::npos);
  EXPECT_NE(out.str().find("2 claim(s), 1 failure(s)"), std::string::npos);
  std::ostringstream json;
  emit_report(certs, ReportFormat::json, json);
  const auto parsed = nlohmann::json::parse(json.str());
  ASSERT_EQ(parsed.size(), 2U);
  EXPECT_EQ(parsed[1]["verdict"], "fail");
}

TEST(Cli, ConstructJson) {
  const auto r = cli({"construct", "balanced_bipartite", "7", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["edges"].size(), 30U);
}

TEST(Cli, ConstructThenCheckRoundTrip) {
  const auto fano = cli({"construct", "fano", "7"});
  ASSERT_EQ(fano.code, 0);
  const auto all = cli({"check", "-", "--pattern", "fano", "--method", "all"}, fano.out);
  EXPECT_EQ(all.code, 0);
  EXPECT_EQ(all.out, "embedding: true\ncrossing: true\npasch: true\n");

  const auto j7 = cli({"construct", "j7", "7", "--format", "json"});
  const auto none = cli({"check", "-", "--pattern", "fano", "--method", "all"}, j7.out);
  EXPECT_EQ(none.code, 1);
  EXPECT_EQ(none.out, "embedding: false\ncrossing: false\npasch: false\n");
  EXPECT_EQ(cli({"check", "-", "--pattern", "k6"}, j7.out).code, 0);
  EXPECT_EQ(cli({"check", "-", "--pattern", "k5"}, cli({"construct", "balanced_bipartite", "9"}).out).code, 1);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(cli({}).code, 2);
  EXPECT_EQ(cli({"construct", "petersen", "10"}).code, 2);
  EXPECT_EQ(cli({"construct", "j7", "8"}).code, 2);
  EXPECT_EQ(cli({"check", "-", "--pattern", "k7"}, "4 0\n").code, 2);
  EXPECT_EQ(cli({"check", "-"}, "not a hypergraph").code, 2);
  EXPECT_EQ(cli({"check", "/nonexistent/file"}).code, 2);
  const auto unknown = cli({"verify", "lemma-99"});
  EXPECT_EQ(unknown.code, 2);
  for (const auto& c : claim_registry()) EXPECT_NE(unknown.err.find(c.id), std::string::npos);
}

TEST(Cli, CapabilityErrors) {
  EXPECT_EQ(cli({"search", "ex", "--n", "9"}).code, 3);
  EXPECT_EQ(cli({"multigraph", "max", "--p", "5", "--n", "6"}).code, 3);
  const auto budget = cli({"multigraph", "max", "--p", "5", "--n", "5", "--budget", "10"});
  EXPECT_EQ(budget.code, 3);
}

TEST(Cli, Search) {
  const auto r = cli({"search", "ex", "--n", "7"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, 20), "ex(7, Fano) = 30\n  c");
  const auto j = nlohmann::json::parse(cli({"search", "ex", "--n", "6", "--format", "json"}).out);
  EXPECT_EQ(j["ex"], 20);
}

TEST(Cli, VerifySevenVertexClaim) {
  const auto r = cli({"verify", "lemma-n7", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j.size(), 1U);
  EXPECT_EQ(j[0]["verdict"], "pass");
  EXPECT_EQ(j[0]["witnesses"].size(), 2U);
}

TEST(Cli, VerifyIsDeterministicModuloElapsed) {
  const std::vector<std::string> args{"verify", "detector-agreement", "--seed", "42", "--jobs", "1", "--format", "json"};
  const auto a = cli(args);
  const auto b = cli(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(strip_elapsed(a.out), strip_elapsed(b.out));
  EXPECT_EQ(nlohmann::json::parse(a.out)[0]["seed"], 42);
}

TEST(Cli, Multigraph) {
  EXPECT_EQ(cli({"multigraph", "f4", "8"}).out, "88\n");
  const auto ext = cli({"multigraph", "extremal", "6"});
  EXPECT_EQ(pmultigraph_from_json(nlohmann::json::parse(ext.out)).total_edges(), 48);
  EXPECT_EQ(cli({"multigraph", "crossing", "-"}, ext.out).code, 1);
  EXPECT_EQ(cli({"multigraph", "f5-constructions", "5"}).out, "turan 40 crossing-free\nbipartite 38 crossing-free\n");
  EXPECT_EQ(cli({"multigraph", "max", "--p", "5", "--n", "4"}).out.substr(0, 10), "f5(4) = 25");

  PMultigraph g(3, 4);
  g.add_edge(0, 0, 1), g.add_edge(0, 2, 3);
  g.add_edge(1, 0, 2), g.add_edge(1, 1, 3);
  g.add_edge(2, 0, 3), g.add_edge(2, 1, 2);
  const auto hit = cli({"multigraph", "crossing", "-"}, to_json(g).dump());
  EXPECT_EQ(hit.code, 0);
  EXPECT_EQ(hit.out, "crossing pairs: layers 0 1 2, vertices 0 1 2 3\n");
}

TEST(Claims, RegistryAndRunClaim) {
  std::set<std::string> ids;
  for (const auto& c : claim_registry()) ids.insert(c.id);
  for (const char* id : {"lemma-n7", "lemma-2-3", "fact-2-4", "fact-tetra", "lemma-4vertex", "corollary-bf",
                         "section4-arith", "matching-facts", "ex-7", "ex-8"})
    EXPECT_TRUE(ids.contains(id)) << id;
  EXPECT_THROW(run_claim("nope"), ParameterError);
  const auto c = run_claim("matching-facts");
  EXPECT_TRUE(c.pass);
  EXPECT_EQ(c.claim, "matching-facts");
}
