#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "srgkit/graph.hpp"
#include "srgkit/params.hpp"
#include "srgkit/verify.hpp"

using namespace srg;

namespace {

// The 3x3 rook graph: vertices r*3+c, edges within rows and columns.
// This is the unique (9,4,1,2) strongly regular graph.
Graph rook3x3() {
  return build_graph(9, {{0, 1}, {0, 2}, {0, 3}, {0, 6}, {1, 2}, {1, 4},
                         {1, 7}, {2, 5}, {2, 8}, {3, 4}, {3, 5}, {3, 6},
                         {4, 5}, {4, 7}, {5, 8}, {6, 7}, {6, 8}, {7, 8}});
}

Graph k4() {
  return build_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

}  // namespace

TEST_CASE("build_graph constructs and validates") {
  const Graph k3 = build_graph(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(k3.edge_count() == 3);
  CHECK(k3.adjacent(0, 1));
  CHECK(k3.adjacent(2, 0));
  CHECK(k3.degree(1) == 2);

  CHECK_THROWS_AS(build_graph(2, {{0, 0}}), SrgError);
  CHECK_THROWS_AS(build_graph(3, {{0, 3}}), SrgError);
  CHECK_THROWS_AS(build_graph(3, {{1, 0}}), SrgError);
  CHECK_THROWS_AS(build_graph(3, {{0, 1}, {0, 1}}), SrgError);
  CHECK_THROWS_AS(Graph(0), SrgError);
  CHECK_THROWS_AS(Graph(1025), SrgError);
}

TEST_CASE("petersen verifies as (10,3,0,1)") {
  const Graph g = petersen();
  CHECK(g.edge_count() == 15);
  const VerifyReport rep = verify_srg(g, {10, 3, 0, 1});
  CHECK(rep.is_regular);
  CHECK(rep.lambda_ok);
  CHECK(rep.mu_ok);
  CHECK(rep.is_connected);
  CHECK(rep.complement_connected);
  CHECK(rep.matrix_identity_ok);
  CHECK(rep.srg_ok());
  CHECK(rep.degree_multiset == std::map<int, int>{{3, 10}});
}

TEST_CASE("verify_srg flags a wrong lambda") {
  const VerifyReport rep = verify_srg(petersen(), {10, 3, 1, 1});
  CHECK(rep.is_regular);
  CHECK_FALSE(rep.lambda_ok);
  CHECK(rep.lambda_violation.has_value());
  CHECK_FALSE(rep.matrix_identity_ok);
}

TEST_CASE("star K_{1,9} meets the pair conditions but is irregular") {
  const VerifyReport rep = verify_srg(star(9), {10, 3, 0, 1});
  CHECK(rep.lambda_ok);
  CHECK(rep.mu_ok);
  CHECK_FALSE(rep.is_regular);
  CHECK_FALSE(rep.srg_ok());
  CHECK_FALSE(rep.matrix_identity_ok);
  CHECK(rep.degree_multiset == std::map<int, int>{{1, 9}, {9, 1}});
}

TEST_CASE("verify_srg rejects dimension mismatch and tolerates tiny graphs") {
  CHECK_THROWS_AS(verify_srg(petersen(), {9, 3, 0, 1}), SrgError);
  const VerifyReport rep = verify_srg(build_graph(2, {{0, 1}}), {2, 1, 0, 0});
  CHECK_FALSE(rep.is_regular);
  CHECK_FALSE(rep.matrix_identity_ok);
}

TEST_CASE("complement is an involution; K3 complement is empty") {
  CHECK(complement(build_graph(3, {{0, 1}, {1, 2}, {0, 2}})).edge_count() == 0);
  const Graph g = petersen();
  CHECK(complement(complement(g)) == g);
  // Petersen's complement is the (10,6,3,4) triangular graph T(5).
  CHECK(verify_srg(complement(g), {10, 6, 3, 4}).srg_ok());
}

TEST_CASE("complement_params matches the displays and is an involution") {
  CHECK(complement_params({10, 3, 0, 1}) == SrgParams{10, 6, 3, 4});
  CHECK(complement_params({13, 6, 2, 3}) == SrgParams{13, 6, 2, 3});
  CHECK(complement_params({9, 4, 1, 2}) == SrgParams{9, 4, 1, 2});
  CHECK(complement_params({99, 14, 1, 2}) == SrgParams{99, 84, 71, 72});
  CHECK(complement_params(complement_params({16, 5, 0, 2})) ==
        SrgParams{16, 5, 0, 2});
}

TEST_CASE("common_neighbors counts by bit intersection") {
  const Graph g = petersen();
  CHECK(g.common_neighbors(0, 1) == 0);   // adjacent: lambda = 0
  CHECK(g.common_neighbors(0, 2) == 1);   // non-adjacent: mu = 1
  const Graph k3 = build_graph(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(k3.common_neighbors(0, 1) == 1);
  CHECK_THROWS_AS(g.common_neighbors(4, 4), SrgError);
}

TEST_CASE("combinatorial and matrix verification agree on random graphs") {
  std::mt19937 rng(20260823);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 18);  // 3..20
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (rng() % 2) edges.emplace_back(i, j);
      }
    }
    const Graph g(n, edges);
    const std::int64_t k = 1 + static_cast<std::int64_t>(rng() % (n - 2));
    const SrgParams p{n, k, static_cast<std::int64_t>(rng() % k),
                      static_cast<std::int64_t>(rng() % (k + 1))};
    const VerifyReport rep = verify_srg(g, p);
    CHECK(rep.matrix_identity_ok == (rep.is_regular && rep.lambda_ok &&
                                     rep.mu_ok));
  }
}

TEST_CASE("triangular view of the (9,4,1,2) graph is K_{3,3}") {
  const Graph g = rook3x3();
  REQUIRE(verify_srg(g, {9, 4, 1, 2}).srg_ok());
  const Graph tv = triangular_view(g);
  CHECK(tv.n() == 6);  // 9*4/6 triangles
  int deg = -1;
  CHECK(tv.is_regular(&deg));
  CHECK(deg == 3);  // (3*4-6)/2
  // Triangle-free and connected 3-regular on 6 vertices: that is K_{3,3}.
  CHECK(verify_srg(tv, {6, 3, 0, 3}).srg_ok());
  CHECK(tv.connected());
}

TEST_CASE("triangular view rejects graphs that are not lambda=1") {
  CHECK_THROWS_AS(triangular_view(petersen()), SrgError);  // lambda = 0
  CHECK_THROWS_AS(triangular_view(k4()), SrgError);        // lambda = 2
}

TEST_CASE("neighborhood components") {
  const Graph g = rook3x3();
  for (int v = 0; v < 9; ++v) {
    const auto comps = neighborhood_components(g, v);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].size == 2);
    CHECK(comps[1].size == 2);
    CHECK(comps[0].complete);
    CHECK(comps[1].complete);
  }
  const auto pet = neighborhood_components(petersen(), 0);
  REQUIRE(pet.size() == 3);
  for (const auto& c : pet) {
    CHECK(c.size == 1);
    CHECK(c.complete);
  }
}

TEST_CASE("claw counts by direct enumeration") {
  for (int v = 0; v < 10; ++v) CHECK(count_claws_at(petersen(), v) == 1);
  for (int v = 0; v < 9; ++v) CHECK(count_claws_at(rook3x3(), v) == 0);
  for (int v = 0; v < 4; ++v) CHECK(count_claws_at(k4(), v) == 0);
}

TEST_CASE("claw count formula") {
  CHECK(claw_count_formula(0, 7, 0, 0) == 280);
  CHECK(claw_count_formula(14, 0, 0, 0) == 364);
  CHECK_THROWS_AS(claw_count_formula(1, 7, 0, 0), SrgError);

  // Minimum over component profiles realizable for a lambda=1 neighborhood
  // of size 14: the 14 vertices split into complete components carrying
  // exactly 7 internal edges (each neighbor has exactly one neighbor
  // inside). Exactly four profiles qualify; the all-matching one wins.
  long long best = 1000;
  int profiles = 0;
  for (int c4 = 0; 4 * c4 <= 14; ++c4) {
    for (int c3 = 0; 3 * c3 + 4 * c4 <= 14; ++c3) {
      for (int c2 = 0; 2 * c2 + 3 * c3 + 4 * c4 <= 14; ++c2) {
        const int c1 = 14 - 2 * c2 - 3 * c3 - 4 * c4;
        if (c2 + 3 * c3 + 6 * c4 != 7) continue;
        ++profiles;
        best = std::min(best, claw_count_formula(c1, c2, c3, c4));
      }
    }
  }
  CHECK(profiles == 4);
  CHECK(best == 280);
  CHECK(best == claw_count_formula(0, 7, 0, 0));
}

TEST_CASE("graph text format round-trips") {
  const Graph g = petersen();
  std::stringstream ss;
  write_graph(ss, g);
  const std::string text = ss.str();
  CHECK(text.substr(0, 5) == "10 15");
  std::stringstream in(text);
  CHECK(read_graph(in) == g);

  std::stringstream bad1("x y");
  CHECK_THROWS_AS(read_graph(bad1), SrgError);
  std::stringstream bad2("3 2\n0 1\n");
  CHECK_THROWS_AS(read_graph(bad2), SrgError);
  std::stringstream bad3("3 1\n1 0\n");
  CHECK_THROWS_AS(read_graph(bad3), SrgError);
}

TEST_CASE("triangle list covers each edge exactly once for lambda=1") {
  const auto tris = triangle_list(rook3x3());
  CHECK(tris.size() == 6);  // nk/6 = 9*4/6
  // Rows {0,1,2},{3,4,5},{6,7,8} and columns are exactly the triangles.
  CHECK(tris.front() == std::array<int, 3>{0, 1, 2});
  CHECK_THROWS_AS(triangle_list(petersen()), SrgError);
}
