#include "srgkit/params.hpp"

namespace srg {

std::string SrgParams::str() const {
  return "(" + std::to_string(n) + "," + std::to_string(k) + "," +
         std::to_string(lambda) + "," + std::to_string(mu) + ")";
}

bool params_valid(const SrgParams& p) {
  if (p.n < 0 || p.k < 0 || p.lambda < 0 || p.mu < 0) return false;
  if (!(0 < p.k && p.k < p.n - 1)) return false;  // neither complete nor empty
  if (!(p.lambda < p.k)) return false;
  if (!(p.mu <= p.k)) return false;
  return true;
}

void require_valid(const SrgParams& p) {
  if (!params_valid(p)) {
    throw SrgError("invalid strongly-regular parameter set " + p.str());
  }
}

SrgParams complement_params(const SrgParams& p) {
  return SrgParams{p.n, p.n - p.k - 1, p.n - 2 - 2 * p.k + p.mu,
                   p.n - 2 * p.k + p.lambda};
}

}  // namespace srg
