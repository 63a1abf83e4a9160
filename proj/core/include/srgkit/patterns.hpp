// Paley(9) substructure detection. Around a vertex v of a graph that is
// locally lambda=1, mu=2, every vertex outside the closed neighborhood
// N[v] attaches to exactly one non-matching pair {i, j} of N(v); that pair
// is its label. Pairs of distinct matching edges of N(v) then span
// 9-vertex candidate sets, and the graph follows the Paley(9) pattern at v
// when each candidate induces a Paley(9) subgraph. A global anchored
// search finds all induced Paley(9) subgraphs without trying every
// 9-subset.

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "srgkit/graph.hpp"

namespace srg {

// Vertex outside N[v] together with the unique non-matching pair of N(v)
// it is attached to: adjacent to both pair members and to nothing else in
// N[v].
struct PairLabel {
  int vertex;
  Edge pair;

  friend bool operator==(const PairLabel& a, const PairLabel& b) {
    return a.vertex == b.vertex && a.pair == b.pair;
  }
};

// Labels every vertex of V - N[v] by its pair, sorted by pair. Requires
// the local lambda=1, mu=2 structure: every non-adjacent pair of N(v) has
// exactly one common neighbor outside N[v] (the violating pair is named
// otherwise), and the resulting labeling must cover V - N[v] exactly once
// (the uncovered or multiply covered vertex is named otherwise).
std::vector<PairLabel> pair_labels(const Graph& g, int v);

struct Paley9PatternReport {
  bool pattern_present = false;
  // First pair of distinct matching edges of N(v) whose 9-vertex candidate
  // set does not induce Paley(9); empty when the pattern holds.
  std::optional<std::pair<Edge, Edge>> failing_edges;
};

// Tests the Paley(9) pattern at v: for every unordered pair of distinct
// matching edges {v1,v2}, {v3,v4} of N(v), the set {v, v1..v4} plus the
// four labeled vertices of the cross pairs must induce a Paley(9)
// subgraph. Requires pair_labels(g, v) to succeed and the neighborhood
// N(v) to induce a perfect matching; both are errors otherwise.
Paley9PatternReport check_paley9_pattern(const Graph& g, int v);

// All 9-subsets of vertices (sorted ascending, the list itself sorted)
// whose induced subgraph is isomorphic to Paley(9). Anchored search: each
// candidate is grown from a triangle acting as a "row" of the 3x3 rook
// structure, extending by the forced column triangles, so only triangles
// are enumerated rather than all 9-subsets.
std::vector<std::vector<int>> find_paley9_subgraphs(const Graph& g);

// Subgraph induced by the given distinct vertices; vertex i of the result
// is vertices[i], so the order doubles as an explicit relabeling.
Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

// Exact isomorphism test for small graphs (order <= 64), by backtracking
// over vertex maps in degree-compatible order with adjacency consistency
// checks at every extension.
bool graphs_isomorphic(const Graph& a, const Graph& b);

}  // namespace srg
