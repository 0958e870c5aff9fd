#pragma once

#include <chrono>
#include <cstdint>
#include <string>

#include "json.hpp"

namespace fanoturan {

inline constexpr const char* kToolVersion = "fanoturan " FANOTURAN_VERSION;

/// Outcome of one finite verification.
///
/// JSON schema: {"claim", "verdict": "pass"|"fail", "space", "visited", "witnesses", "seed",
/// "elapsed_ms", "tool_version"}. A fail verdict always carries at least one witness; a passing
/// exhaustive claim has visited == space (pruned states are accounted as visited).
struct Certificate {
  std::string claim;
  bool pass = false;
  std::uint64_t space = 0;
  std::uint64_t visited = 0;
  nlohmann::json witnesses = nlohmann::json::array();
  std::uint64_t seed = 0;
  std::int64_t elapsed_ms = 0;
  std::string tool_version = kToolVersion;
  // One-line human summary for text reports; not part of the JSON schema.
  std::string detail;
};

nlohmann::json to_json(const Certificate& c);
Certificate certificate_from_json(const nlohmann::json& j);

/// Empty string when c satisfies the invariants above, else a description of the violation.
std::string certificate_problem(const Certificate& c);

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  [[nodiscard]] std::int64_t elapsed_ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace fanoturan
