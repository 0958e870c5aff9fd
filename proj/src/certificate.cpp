#include "fanoturan/certificate.hpp"

#include "fanoturan/error.hpp"

namespace fanoturan {

nlohmann::json to_json(const Certificate& c) {
  return {{"claim", c.claim},         {"verdict", c.pass ? "pass" : "fail"},
          {"space", c.space},         {"visited", c.visited},
          {"witnesses", c.witnesses}, {"seed", c.seed},
          {"elapsed_ms", c.elapsed_ms}, {"tool_version", c.tool_version}};
}

Certificate certificate_from_json(const nlohmann::json& j) {
  try {
    Certificate c;
    c.claim = j.at("claim").get<std::string>();
    const auto verdict = j.at("verdict").get<std::string>();
    if (verdict != "pass" && verdict != "fail") throw ParameterError("certificate: bad verdict");
    c.pass = verdict == "pass";
    c.space = j.at("space").get<std::uint64_t>();
    c.visited = j.at("visited").get<std::uint64_t>();
    c.witnesses = j.at("witnesses");
    c.seed = j.at("seed").get<std::uint64_t>();
    c.elapsed_ms = j.at("elapsed_ms").get<std::int64_t>();
    c.tool_version = j.at("tool_version").get<std::string>();
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw ParameterError(std::string("certificate json: ") + e.what());
  }
}

std::string certificate_problem(const Certificate& c) {
  if (c.claim.empty()) return "missing claim id";
  if (!c.witnesses.is_array()) return "witnesses must be an array";
  if (!c.pass && c.witnesses.empty()) return "fail verdict without a witness";
  if (c.pass && c.visited != c.space) return "pass verdict with visited != space";
  return {};
}

}  // namespace fanoturan
