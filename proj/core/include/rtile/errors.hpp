#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace rtile {

/// Thrown when an exhaustive operation's work estimate exceeds its budget.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, double estimate, double budget)
      : std::runtime_error(what + " (estimated work " + std::to_string(estimate) +
                           " exceeds budget " + std::to_string(budget) + ")"),
        estimate_(estimate),
        budget_(budget) {}

  double estimate() const { return estimate_; }
  double budget() const { return budget_; }

 private:
  double estimate_;
  double budget_;
};

/// Default work ceiling for brute-force operations.
inline constexpr double kDefaultBudget = 1e10;

}  // namespace rtile
