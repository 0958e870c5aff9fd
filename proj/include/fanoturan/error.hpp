#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace fanoturan {

/// An argument violates an operation's precondition (bad vertex, bad family size, ...).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The request is well-formed but outside what the exact engines accept
/// (vertex caps, search regimes, exhausted node budgets).
class CapabilityError : public std::runtime_error {
 public:
  explicit CapabilityError(const std::string& what,
                           std::optional<long long> best_lower_bound = std::nullopt)
      : std::runtime_error(what), best_lower_bound_(best_lower_bound) {}

  // Set when a search ran out of budget after finding a feasible solution.
  [[nodiscard]] std::optional<long long> best_lower_bound() const { return best_lower_bound_; }

 private:
  std::optional<long long> best_lower_bound_;
};

}  // namespace fanoturan
