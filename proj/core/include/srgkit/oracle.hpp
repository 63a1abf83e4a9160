// Brute-force backtracking search for graphs meeting exact pair conditions.
//
// This is the reference oracle the SAT/PB encoders are tested against: it
// never touches formulas or variable maps, only adjacency bitmasks and
// direct counting, so agreement between the two paths is meaningful.

#pragma once

#include <vector>

#include "srgkit/graph.hpp"
#include "srgkit/params.hpp"

namespace srg {

// All graphs on p.n vertices that are k-regular and satisfy the lambda/mu
// pair conditions, with vertex 0's neighborhood normalized to {1..k}
// (every such graph can be relabeled into this form, so the search loses
// no isomorphism classes, only redundant labelings). Backtracks over edge
// decisions in id order, pruning on degree bounds and on pairs whose
// common-neighbor count can no longer reach (or already exceeds) its
// target. Requires n <= 13.
std::vector<Graph> brute_force_srg(const SrgParams& p);

// All graphs on n vertices (2 <= n <= 13) whose adjacent pairs share
// exactly `lambda` neighbors and whose non-adjacent pairs share exactly
// `mu` neighbors — no regularity constraint, no normalization. Used to
// test regularity consequences of the pair conditions by exhaustion.
std::vector<Graph> enumerate_pair_condition_graphs(int n, int lambda, int mu);

}  // namespace srg
