#ifndef SRGKIT_FAMILIES_HPP
#define SRGKIT_FAMILIES_HPP

#include "srgkit/graph.hpp"

namespace srg {

// Paley graph on GF(q): vertices are the field elements (ordered by base-p
// coefficient value), u ~ v iff u - v is a nonzero square. Requires q a
// prime power with q = 1 (mod 4), which makes the relation symmetric.
// A (q, (q-1)/2, (q-5)/4, (q-1)/4) strongly regular graph.
Graph paley(int q);

// Rook's graph on an m x m board, vertices (i, j) |-> i*m + j, adjacency
// iff same row or same column. Requires m >= 2; strongly regular
// (m^2, 2m-2, m-2, 2) for m >= 3.
Graph rook(int m);

// Triangular graph T(m): vertices are the 2-subsets of [0, m) in
// lexicographic order, adjacent iff the subsets intersect. The line graph
// of K_m. Requires m >= 5; strongly regular (C(m,2), 2(m-2), m-2, 4).
Graph triangular(int m);

// Kneser graph K(m, t): vertices are the t-subsets of [0, m) in
// lexicographic order, adjacent iff disjoint. Requires m >= 2t. For t = 2
// this is the complement of triangular(m) vertex-for-vertex.
Graph kneser(int m, int t);

}  // namespace srg

#endif  // SRGKIT_FAMILIES_HPP
