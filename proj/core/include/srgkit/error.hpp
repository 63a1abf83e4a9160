// Error types shared across the toolkit.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace srg {

// Base class for all rejection paths (bad input, violated preconditions,
// parse failures). Carries a plain human-readable message.
class SrgError : public std::runtime_error {
 public:
  explicit SrgError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a requested formula expansion exceeds the clause budget.
// Carries the exact required count so callers (CLI, tests) can report it.
class BudgetError : public SrgError {
 public:
  BudgetError(const std::string& what, std::uint64_t required,
              std::uint64_t budget)
      : SrgError(what), required_clauses(required), budget_clauses(budget) {}

  std::uint64_t required_clauses;
  std::uint64_t budget_clauses;
};

}  // namespace srg
