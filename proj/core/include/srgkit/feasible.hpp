#ifndef SRGKIT_FEASIBLE_HPP
#define SRGKIT_FEASIBLE_HPP

#include <optional>
#include <string>
#include <vector>

#include "srgkit/params.hpp"
#include "srgkit/surd.hpp"

namespace srg {

// Eigenvalue data of a putative (n,k,lambda,mu) graph. Besides the degree
// eigenvalue k (multiplicity 1) the adjacency matrix has exactly two more
// eigenvalues r > 0 > s, the roots of x^2 - (lambda-mu)x - (k-mu):
//
//   r, s = [ (lambda-mu) +- sqrt(D) ] / 2,   D = (lambda-mu)^2 + 4(k-mu).
//
// Multiplicities satisfy m_r + m_s = n - 1 and the trace condition
// m_r*r + m_s*s + k = 0.
struct Spectrum {
  std::int64_t k = 0;  // degree eigenvalue, multiplicity 1
  Surd r, s;
  std::int64_t m_r = 0, m_s = 0;
  std::int64_t disc = 0;     // D above
  bool conference = false;   // 2k + (n-1)(lambda-mu) == 0
  bool integral = false;     // D is a perfect square, so r and s are integers

  // "{14^1, 3^54, (-4)^44}" (degree first, then r, then s).
  std::string str() const;
};

// Result of the two Krein inequalities
//   (r+1)(k + r + 2rs) <= (k+r)(s+1)^2
//   (s+1)(k + s + 2rs) <= (k+s)(r+1)^2
// evaluated exactly (surd arithmetic in the conference case). Slack is
// rhs - lhs, nonnegative exactly when the bound holds.
struct KreinReport {
  bool first_ok = false;
  bool second_ok = false;
  Surd first_slack, second_slack;
  bool ok() const { return first_ok && second_ok; }
};

// Outcome of running every screen in order: counting equation, multiplicity
// integrality, Krein bounds. The first failure decides the verdict; a
// feasible verdict means no implemented screen rules the set out (it is not
// an existence claim).
struct FeasibilityReport {
  SrgParams params{};
  bool counting_ok = false;
  bool integrality_ok = false;
  bool conference_case = false;
  bool krein_ok = false;
  std::optional<Spectrum> spectrum;  // present when integrality passed
  std::optional<KreinReport> krein;  // present when Krein was evaluated
  bool feasible = false;
  std::string reason;  // names the failing screen; empty when feasible
};

// True iff (n - k - 1) * mu == k * (k - lambda - 1) holds exactly.
bool counting_check(const SrgParams& p);

// Exact eigenvalues and multiplicities. Requires counting_check(p).
// Conference case (2k + (n-1)(lambda-mu) == 0): multiplicities are both
// (n-1)/2, which requires odd n; r and s may be irrational. Otherwise D
// must be a perfect square and the multiplicities
//   m_{r,s} = [ (n-1) -+ (2k + (n-1)(lambda-mu)) / sqrt(D) ] / 2
// must come out as positive integers. Any violation throws SrgError with an
// "integrality" message. The independent display
//   m_s = ((n-1)r + k)/(r - s),  m_r = ((n-1)s + k)/(s - r)
// is evaluated as a cross-check on every call.
Spectrum spectrum_of(const SrgParams& p);

// Evaluates both Krein bounds exactly. Requires spectrum_of(p) to succeed.
KreinReport krein_check(const SrgParams& p);

// Runs all screens; never throws on infeasible input.
FeasibilityReport feasibility_report(const SrgParams& p);

// All parameter sets with lambda = 1, mu = 2. The counting equation gives
// n = k^2/2 + 1, and the multiplicity divisibility forces 4k - 7 = t^2 for
// a positive divisor t of 63; t = 1 (k = 2) is excluded since that graph
// would be the complete graph K3, which has no non-adjacent pairs. Exactly
// five sets remain, returned in increasing order of k.
std::vector<SrgParams> enumerate_lambda1_mu2();

}  // namespace srg

#endif  // SRGKIT_FEASIBLE_HPP
