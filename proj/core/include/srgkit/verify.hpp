// Exact strongly-regular verification and graph-level analyses:
// pair-condition scans, the adjacency-matrix identity check, neighborhood
// structure, claw counting, and the triangle ("triangular view") transform.

#pragma once

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "srgkit/graph.hpp"
#include "srgkit/params.hpp"

namespace srg {

struct VerifyReport {
  // Degree condition: every vertex has degree k. The observed degree
  // multiset (degree -> vertex count) is always filled in.
  bool is_regular = false;
  std::map<int, int> degree_multiset;

  // Pair conditions: adjacent pairs share exactly lambda neighbors,
  // non-adjacent pairs share exactly mu. First violating pair reported.
  bool lambda_ok = false;
  std::optional<Edge> lambda_violation;
  bool mu_ok = false;
  std::optional<Edge> mu_violation;

  // Connectivity of the graph and of its complement; a disconnected side
  // marks the trivial strongly regular graphs (unions of cliques and
  // complete multipartite graphs).
  bool is_connected = false;
  bool complement_connected = false;

  // Independent route: A^2 = kI + lambda*A + mu*(J - I - A) checked by
  // literal integer matrix multiplication. Agrees with the combinatorial
  // flags by the defining theorem; the toolkit computes both anyway.
  bool matrix_identity_ok = false;

  // Regularity plus both pair conditions (the strongly-regular definition).
  bool srg_ok() const { return is_regular && lambda_ok && mu_ok; }
};

// Verify g against p two independent ways (pair scan and matrix identity).
// g.n must equal p.n. Graphs on fewer than 3 vertices get a report with
// every structural flag false (no SrgParams tuple is valid for them).
VerifyReport verify_srg(const Graph& g, const SrgParams& p);

// One vertex per triangle of g, edges between triangles sharing a vertex
// of g. Requires every edge of g to lie in exactly one triangle (the
// lambda = 1 condition); rejects other inputs. Output vertices are ordered
// by the lexicographically smallest vertex triple of each triangle, and for
// a k-regular input the result has nk/6 vertices and is (3k-6)/2-regular.
Graph triangular_view(const Graph& g);

// The triangles backing triangular_view's vertex order, sorted.
std::vector<std::array<int, 3>> triangle_list(const Graph& g);

struct NeighborhoodComponent {
  int size = 0;
  bool complete = false;  // induced component is a complete graph
};

// Connected components of the subgraph induced by N(v), sorted by size.
std::vector<NeighborhoodComponent> neighborhood_components(const Graph& g,
                                                           int v);

// Number of claws (induced K_{1,3}) centered at v: independent 3-subsets of
// N(v), by direct enumeration.
long long count_claws_at(const Graph& g, int v);

// Claw count of a 14-vertex neighborhood that splits into c1 + c2 + c3 + c4
// complete components of sizes 1..4:
//   C(14,3) - 12*c2 - 11*(3*c3) - 10*(6*c4) - c3 - 4*c4.
// Component counts must cover all 14 vertices (c1 + 2c2 + 3c3 + 4c4 = 14).
long long claw_count_formula(int c1, int c2, int c3, int c4);

}  // namespace srg
