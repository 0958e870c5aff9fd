#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fanoturan/certificate.hpp"

namespace fanoturan {

struct ClaimInfo {
  std::string id;
  std::string statement;
  bool long_run = false;  // excluded from `verify all` unless long runs are enabled
};

/// Every verifiable claim, in the order `verify all` runs them.
const std::vector<ClaimInfo>& claim_registry();

struct ClaimOptions {
  std::uint64_t seed = 42;
  bool long_run = false;
  std::optional<std::filesystem::path> checkpoint_dir;
};

/// Throws ParameterError for an unknown id and CapabilityError for a long-run claim without
/// options.long_run.
Certificate run_claim(std::string_view id, const ClaimOptions& options = {});

}  // namespace fanoturan
