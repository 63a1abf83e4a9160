// Strongly-regular-graph parameter tuples (n, k, lambda, mu).

#pragma once

#include <cstdint>
#include <string>

#include "srgkit/error.hpp"

namespace srg {

// Parameters of a candidate strongly regular graph. Valid tuples exclude
// complete and empty graphs (0 < k < n-1) and satisfy lambda < k, mu <= k.
// No cap on n here: parameter screening works at orders far beyond what the
// Graph type can hold (e.g. n = 494019 in the lambda=1/mu=2 family).
struct SrgParams {
  std::int64_t n = 0;
  std::int64_t k = 0;
  std::int64_t lambda = 0;
  std::int64_t mu = 0;

  bool operator==(const SrgParams&) const = default;
  std::string str() const;
};

// True iff the tuple satisfies the type invariants above (all nonnegative,
// 0 < k < n-1, lambda < k, mu <= k).
bool params_valid(const SrgParams& p);

// Throws SrgError when params_valid fails.
void require_valid(const SrgParams& p);

// Parameters of the complement graph: (n, n-k-1, n-2-2k+mu, n-2k+lambda).
// The result may be degenerate (e.g. negative entries) for tuples whose
// complement cannot be strongly regular; callers check with params_valid.
SrgParams complement_params(const SrgParams& p);

}  // namespace srg
