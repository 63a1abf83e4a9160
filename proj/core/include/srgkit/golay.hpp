#ifndef SRGKIT_GOLAY_HPP
#define SRGKIT_GOLAY_HPP

#include <array>

#include "srgkit/graph.hpp"

namespace srg {

// The ternary Golay code [11, 6, 5] over GF(3) in systematic form
// G = [I6 | P], with the companion parity-check matrix H = [-P^T | I5].
// The entries are fixed data: every codeword w*G has H*c^T = 0 and weight
// at least 5 (both are re-verified exhaustively in the tests).
extern const std::array<std::array<int, 11>, 6> kGolayG;
extern const std::array<std::array<int, 11>, 5> kGolayH;

// w*G over GF(3). Entries of w must be trits (0, 1 or 2).
std::array<int, 11> golay_encode(const std::array<int, 6>& w);

// H*c over GF(3); zero exactly on codewords. Entries must be trits.
std::array<int, 5> golay_syndrome(const std::array<int, 11>& c);

// The Berlekamp-Van Lint-Seidel graph: vertices are the 3^5 = 243 vectors
// of V(5,3) (indexed by base-3 value, most significant trit first), with
// u ~ v iff u - v = +-x_i for some column x_i of the parity matrix H.
// A (243, 22, 1, 2) strongly regular graph. Construction re-checks that
// the 242 difference vectors {+-x_i} u {+-x_i +- x_j} are pairwise
// distinct and throws SrgError if not.
Graph bvls_construct();

}  // namespace srg

#endif  // SRGKIT_GOLAY_HPP
