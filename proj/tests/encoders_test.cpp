#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "srgkit/encode.hpp"
#include "srgkit/families.hpp"
#include "srgkit/graph.hpp"
#include "srgkit/oracle.hpp"
#include "srgkit/verify.hpp"

using namespace srg;

namespace {

// True iff g agrees with every pair the preset assigns.
bool matches_preset(const Graph& g, const Preset& preset) {
  for (const auto& [edge, value] : preset.assignments()) {
    if (g.adjacent(edge.first, edge.second) != value) return false;
  }
  return true;
}

// Evaluates one PB constraint in isolation.
bool constraint_ok(const PbConstraint& c, int var_count,
                   const std::vector<char>& assignment) {
  PbFormula f;
  f.var_count = var_count;
  f.constraints.push_back(c);
  return pb_satisfied(f, assignment);
}

// Evaluates a contiguous constraint range in isolation.
bool range_ok(const PbFormula& f, std::size_t first, std::size_t last,
              const std::vector<char>& assignment) {
  PbFormula sub;
  sub.var_count = f.var_count;
  sub.constraints.assign(f.constraints.begin() + first,
                         f.constraints.begin() + last);
  return pb_satisfied(sub, assignment);
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char ch : text) {
    if (ch == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) lines.push_back(cur);
  return lines;
}

// The six free pairs of the degree-4 star preset (all between labeled
// vertices 5..8), in lexicographic order.
const std::vector<Edge> kFreePairs4 = {{5, 6}, {5, 7}, {5, 8},
                                       {6, 7}, {6, 8}, {7, 8}};

Graph star_completion(const Preset& preset, unsigned mask) {
  std::vector<Edge> edges;
  for (const auto& [edge, value] : preset.assignments()) {
    if (value) edges.push_back(edge);
  }
  for (std::size_t b = 0; b < kFreePairs4.size(); ++b) {
    if (mask >> b & 1u) edges.push_back(kFreePairs4[b]);
  }
  std::sort(edges.begin(), edges.end());
  return Graph(9, edges);
}

}  // namespace

TEST_CASE("binomial coefficients are exact and guard against overflow") {
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(5, 7) == 0);
  CHECK(binomial(13, 5) == 1287);
  CHECK(binomial(13, 10) == 286);
  CHECK(binomial(14, 3) == 364);
  CHECK(binomial(52, 5) == 2598960);
  CHECK(binomial(97, 2) == 4656);
  CHECK(binomial(97, 3) == 147440);
  // Pascal consistency at the sizes the budget reports rely on.
  CHECK(binomial(98, 13) == binomial(97, 12) + binomial(97, 13));
  CHECK(binomial(98, 15) == binomial(97, 14) + binomial(97, 15));
  CHECK_THROWS_AS((void)binomial(98, 49), SrgError);
  CHECK_THROWS_AS((void)binomial(200, 100), SrgError);
}

TEST_CASE("edge variable ids are the row-major pair numbering") {
  const VarMap vm = VarMap::edges_only(4);
  CHECK(vm.edge_vars() == 6);
  CHECK(vm.var_count() == 6);
  CHECK(vm.edge_id(0, 1) == 1);
  CHECK(vm.edge_id(0, 2) == 2);
  CHECK(vm.edge_id(0, 3) == 3);
  CHECK(vm.edge_id(1, 2) == 4);
  CHECK(vm.edge_id(1, 3) == 5);
  CHECK(vm.edge_id(2, 3) == 6);

  const VarMap vm9 = VarMap::edges_only(9);
  int expect = 1;
  for (int i = 0; i < 9; ++i) {
    for (int j = i + 1; j < 9; ++j) {
      CHECK(vm9.edge_id(i, j) == expect);
      CHECK(vm9.edge_of(expect) == Edge{i, j});
      ++expect;
    }
  }

  CHECK_THROWS_AS((void)vm.edge_id(2, 2), SrgError);
  CHECK_THROWS_AS((void)vm.edge_id(-1, 3), SrgError);
  CHECK_THROWS_AS((void)vm.edge_id(1, 4), SrgError);
  CHECK_THROWS_AS((void)vm.edge_of(0), SrgError);
  CHECK_THROWS_AS((void)vm.edge_of(7), SrgError);
  CHECK_THROWS_AS((void)vm.cherry_id(0, 1, 2), SrgError);
  CHECK_THROWS_AS(VarMap::edges_only(2), SrgError);
}

TEST_CASE("auxiliary variable blocks sit after the edge block") {
  const VarMap vm = VarMap::with_cherries(9);
  CHECK(vm.var_count() == 36 + 36 * 7);
  CHECK(vm.cherry_id(0, 1, 2) == 37);
  CHECK(vm.cherry_id(0, 1, 8) == 43);
  CHECK(vm.cherry_id(2, 3, 0) == 36 + 15 * 7 + 1);
  CHECK_THROWS_AS((void)vm.cherry_id(0, 1, 1), SrgError);
  CHECK_THROWS_AS((void)vm.angle_id(0, 1, 2), SrgError);

  const VarMap at = VarMap::with_angles_triangles(9);
  CHECK(at.var_count() == 36 + 2 * 36 * 7);
  CHECK(at.angle_id(0, 1, 2) == 37);
  CHECK(at.triangle_id(0, 1, 2) == 36 + 252 + 1);
  CHECK_THROWS_AS((void)at.cherry_id(0, 1, 2), SrgError);

  const VarMap big = VarMap::with_angles_triangles(231);
  CHECK(big.var_count() == 12193335);

  const VarMap cl =
      VarMap::with_claws(6, {{0, {1, 2, 3}}, {4, {0, 1, 5}}});
  CHECK(cl.var_count() == 15 + 2);
  CHECK(cl.claw_id(0) == 16);
  CHECK(cl.claw_id(1) == 17);
  CHECK_THROWS_AS((void)cl.claw_id(2), SrgError);
  CHECK_THROWS_AS(VarMap::with_claws(6, {{0, {2, 1, 3}}}), SrgError);
  CHECK_THROWS_AS(VarMap::with_claws(6, {{1, {1, 2, 3}}}), SrgError);
  CHECK_THROWS_AS(VarMap::with_claws(6, {{0, {1, 2, 6}}}), SrgError);
}

TEST_CASE("cardinality constraints expand to binomial clause sets") {
  const auto am = cnf_at_most({1, 2, 3}, 1);
  REQUIRE(am.size() == 3);
  CHECK(am[0] == std::vector<int>{-1, -2});
  CHECK(am[1] == std::vector<int>{-1, -3});
  CHECK(am[2] == std::vector<int>{-2, -3});

  CHECK(cnf_at_most({1, 2, 3}, 3).empty());
  CHECK(cnf_at_most({1, 2, 3}, 7).empty());

  const auto ex = cnf_exactly({4, 5, 6, 7}, 2);
  CHECK(ex.size() == 8);  // C(4,3) negative + C(4,3) positive
  CHECK(ex.front() == std::vector<int>{-4, -5, -6});
  CHECK(ex.back() == std::vector<int>{5, 6, 7});

  // Guard literal lands at the end of every clause.
  const auto guarded = cnf_exactly({5, 6, 7}, 1, -9);
  for (const auto& clause : guarded) CHECK(clause.back() == -9);
  CHECK(guarded.size() == 3 + 1);  // C(3,2) + C(3,3)

  // Exactly-all reduces to positive singletons.
  const auto all = cnf_exactly({1, 2}, 2);
  REQUIRE(all.size() == 2);
  CHECK(all[0] == std::vector<int>{1});
  CHECK(all[1] == std::vector<int>{2});

  std::vector<int> thirteen(13);
  for (int i = 0; i < 13; ++i) thirteen[i] = i + 1;
  CHECK(cnf_exactly(thirteen, 4).size() == 1287 + 286);

  CHECK_THROWS_AS(cnf_at_most({1, 2}, -1), SrgError);
  CHECK_THROWS_AS(cnf_exactly({1, 2}, 3), SrgError);
  CHECK_THROWS_AS(cnf_exactly({1, 2}, -1), SrgError);
}

TEST_CASE("oversized cardinality expansions are refused with exact counts") {
  std::vector<int> sixty(60);
  for (int i = 0; i < 60; ++i) sixty[i] = i + 1;
  try {
    (void)cnf_exactly(sixty, 30);
    FAIL("expected BudgetError");
  } catch (const BudgetError& e) {
    CHECK(e.required_clauses == 2 * binomial(60, 31));
    CHECK(e.budget_clauses == kClauseBudget);
  }
}

TEST_CASE("presets hold consistent partial assignments") {
  Preset pre;
  pre.add(3, 1, true);
  CHECK(pre.size() == 1);
  CHECK(pre.lookup(1, 3) == true);
  CHECK(pre.lookup(3, 1) == true);
  CHECK(!pre.lookup(0, 1).has_value());
  pre.add(1, 3, true);  // same value twice is fine
  CHECK(pre.size() == 1);
  CHECK_THROWS_AS(pre.add(1, 3, false), SrgError);
  CHECK_THROWS_AS(pre.add(2, 2, true), SrgError);
  CHECK_THROWS_AS(pre.add(-1, 2, true), SrgError);
}

TEST_CASE("star normalization pins exactly the edges at vertex 0") {
  const Preset pre = star_normalization({27, 16, 10, 8});
  CHECK(pre.size() == 26);
  for (int u = 1; u <= 16; ++u) CHECK(pre.lookup(0, u) == true);
  for (int u = 17; u <= 26; ++u) CHECK(pre.lookup(0, u) == false);
  CHECK(!pre.lookup(1, 2).has_value());
  CHECK(!pre.lookup(17, 26).has_value());

  // Agrees with the family-specific preset on every vertex-0 pair.
  const Preset strong = symmetry_break_star({9, 4, 1, 2});
  const Preset weak = star_normalization({9, 4, 1, 2});
  CHECK(weak.size() == 8);
  for (int u = 1; u <= 8; ++u) {
    CHECK(weak.lookup(0, u) == strong.lookup(0, u));
  }

  CHECK_THROWS_AS(star_normalization({5, 4, 3, 2}), SrgError);
}

TEST_CASE("star preset pins the neighborhood, matching and labels") {
  const Preset pre = symmetry_break_star({9, 4, 1, 2});
  CHECK(pre.size() == 30);  // C(9,2) minus the 6 labeled-labeled pairs

  for (int u = 1; u <= 4; ++u) CHECK(pre.lookup(0, u) == true);
  for (int u = 5; u <= 8; ++u) CHECK(pre.lookup(0, u) == false);
  CHECK(pre.lookup(1, 2) == true);
  CHECK(pre.lookup(3, 4) == true);
  CHECK(pre.lookup(1, 3) == false);
  CHECK(pre.lookup(2, 4) == false);
  // Vertices 5..8 carry labels {1,3}, {1,4}, {2,3}, {2,4}.
  CHECK(pre.lookup(1, 5) == true);
  CHECK(pre.lookup(3, 5) == true);
  CHECK(pre.lookup(2, 5) == false);
  CHECK(pre.lookup(4, 5) == false);
  CHECK(pre.lookup(2, 8) == true);
  CHECK(pre.lookup(4, 8) == true);
  CHECK(pre.lookup(1, 8) == false);
  for (const Edge& e : kFreePairs4) {
    CHECK(!pre.lookup(e.first, e.second).has_value());
  }

  CHECK_THROWS_AS(symmetry_break_star({10, 3, 0, 1}), SrgError);
  CHECK_THROWS_AS(symmetry_break_star({16, 6, 2, 2}), SrgError);
  CHECK_THROWS_AS(symmetry_break_star({100, 14, 1, 2}), SrgError);
}

TEST_CASE("star preset at the degree-14 and degree-22 orders") {
  const Preset p99 = symmetry_break_star({99, 14, 1, 2});
  CHECK(p99.size() == 1365);  // C(99,2) - C(84,2) free labeled pairs
  CHECK(p99.lookup(0, 14) == true);
  CHECK(p99.lookup(0, 15) == false);
  CHECK(p99.lookup(1, 2) == true);
  CHECK(p99.lookup(13, 14) == true);
  CHECK(p99.lookup(2, 3) == false);
  // First label {1,3} on vertex 15, last label {12,14} on vertex 98.
  CHECK(p99.lookup(1, 15) == true);
  CHECK(p99.lookup(3, 15) == true);
  CHECK(p99.lookup(2, 15) == false);
  CHECK(p99.lookup(12, 98) == true);
  CHECK(p99.lookup(14, 98) == true);
  CHECK(p99.lookup(13, 98) == false);
  CHECK(!p99.lookup(15, 16).has_value());
  CHECK(!p99.lookup(15, 98).has_value());

  const Preset p243 = symmetry_break_star({243, 22, 1, 2});
  CHECK(p243.size() == 29403 - 24090);  // C(243,2) - C(220,2)
}

TEST_CASE("exactly one strongly regular completion matches the star preset") {
  const Preset pre = symmetry_break_star({9, 4, 1, 2});
  const auto all = brute_force_srg({9, 4, 1, 2});
  REQUIRE(all.size() == 72);
  std::vector<Graph> hits;
  for (const Graph& g : all) {
    if (matches_preset(g, pre)) hits.push_back(g);
  }
  REQUIRE(hits.size() == 1);
  CHECK(verify_srg(hits[0], {9, 4, 1, 2}).srg_ok());
  // Free labeled-labeled edges of the completion: the 4-cycle 5-6-8-7-5.
  CHECK(hits[0].adjacent(5, 6));
  CHECK(hits[0].adjacent(5, 7));
  CHECK(hits[0].adjacent(6, 8));
  CHECK(hits[0].adjacent(7, 8));
  CHECK(!hits[0].adjacent(5, 8));
  CHECK(!hits[0].adjacent(6, 7));
}

TEST_CASE("paley block preset copies the 9-vertex pattern per block") {
  const Preset pre = preset_paley9_blocks(11, 99);
  CHECK(pre.size() == 396);  // 11 blocks of C(9,2) pairs
  const Graph pattern = paley(9);
  for (int b : {0, 4, 10}) {
    for (int i = 0; i < 9; ++i) {
      for (int j = i + 1; j < 9; ++j) {
        CHECK(pre.lookup(9 * b + i, 9 * b + j) == pattern.adjacent(i, j));
      }
    }
  }
  CHECK(!pre.lookup(0, 9).has_value());
  CHECK(!pre.lookup(8, 9).has_value());
  CHECK(preset_paley9_blocks(27, 243).size() == 972);
  CHECK(preset_paley9_blocks(0, 99).size() == 0);
  CHECK_THROWS_AS(preset_paley9_blocks(12, 99), SrgError);
  CHECK_THROWS_AS(preset_paley9_blocks(-1, 99), SrgError);
}

TEST_CASE("CNF encoding has the closed-form clause counts") {
  const auto enc = encode_cnf({9, 4, 1, 2});
  CHECK(enc.formula.var_count == 288);
  // 3*36*7 cherry definitions + 36 pairs * (22 lambda + 42 mu) guards.
  CHECK(enc.formula.clauses.size() == 756 + 36 * (22 + 42));

  // mu = 1 pulls in the degree constraints by default.
  const auto pet = encode_cnf({10, 3, 0, 1});
  CHECK(pet.formula.var_count == 405);
  CHECK(pet.formula.clauses.size() == 1080 + 45 * (8 + 29) + 10 * 162);

  EncodeOpts off;
  off.regularity = Regularity::off;
  CHECK(encode_cnf({10, 3, 0, 1}, off).formula.clauses.size() == 4365 - 1620);

  EncodeOpts on;
  on.regularity = Regularity::on;
  CHECK(encode_cnf({9, 4, 1, 2}, on).formula.clauses.size() ==
        3060 + 9 * 112);

  const Preset star = symmetry_break_star({9, 4, 1, 2});
  EncodeOpts withp;
  withp.preset = &star;
  const auto pinned = encode_cnf({9, 4, 1, 2}, withp);
  CHECK(pinned.formula.clauses.size() == 3060 + 30);
  // Unit clauses come first, in preset (lexicographic pair) order.
  CHECK(pinned.formula.clauses[0] == std::vector<int>{1});  // edge (0,1)

  Preset bad;
  bad.add(0, 20, true);
  EncodeOpts badopts;
  badopts.preset = &bad;
  CHECK_THROWS_AS(encode_cnf({9, 4, 1, 2}, badopts), SrgError);
}

TEST_CASE("CNF clause shapes: cherry definitions and guarded cardinalities") {
  const auto enc = encode_cnf({4, 2, 1, 2});
  CHECK(enc.formula.var_count == 18);
  REQUIRE(enc.formula.clauses.size() == 60);
  // First cherry: pair (0,1), apex 2 -> edges x2, x4, cherry x7.
  CHECK(enc.formula.clauses[0] == std::vector<int>{-2, -4, 7});
  CHECK(enc.formula.clauses[1] == std::vector<int>{-7, 2});
  CHECK(enc.formula.clauses[2] == std::vector<int>{-7, 4});
  // Pair (0,1) cardinalities start after the 36 cherry clauses: exactly-1
  // of {7,8} guarded by -x1, then exactly-2 guarded by +x1.
  CHECK(enc.formula.clauses[36] == std::vector<int>{-7, -8, -1});
  CHECK(enc.formula.clauses[37] == std::vector<int>{7, 8, -1});
  CHECK(enc.formula.clauses[38] == std::vector<int>{7, 1});
  CHECK(enc.formula.clauses[39] == std::vector<int>{8, 1});
}

TEST_CASE("cherry definition clauses are exactly the AND truth table") {
  const auto enc = encode_cnf({3, 1, 0, 1});
  // Clause triple 0..2 defines cherry x4 = (x2 AND x3) for pair (0,1).
  CnfFormula defs;
  defs.var_count = enc.formula.var_count;
  defs.clauses.assign(enc.formula.clauses.begin(),
                      enc.formula.clauses.begin() + 3);
  for (unsigned bits = 0; bits < 16; ++bits) {
    std::vector<char> assign(static_cast<std::size_t>(defs.var_count) + 1, 0);
    assign[1] = bits & 1u ? 1 : 0;
    assign[2] = bits >> 1 & 1u ? 1 : 0;
    assign[3] = bits >> 2 & 1u ? 1 : 0;
    assign[4] = bits >> 3 & 1u ? 1 : 0;
    const bool expect = assign[4] == (assign[2] && assign[3] ? 1 : 0);
    CHECK(cnf_satisfied(defs, assign) == expect);
  }
}

TEST_CASE("whole-formula and single-expansion budgets refuse the order-99 CNF") {
  try {
    (void)encode_cnf({99, 14, 1, 2});
    FAIL("expected BudgetError");
  } catch (const BudgetError& e) {
    CHECK(e.required_clauses == 739704735);
    CHECK(e.budget_clauses == kClauseBudget);
  }
  // Forcing degree constraints trips the per-expansion check instead, at
  // C(98,15) + C(98,13) clauses for a single exactly-14 expansion.
  EncodeOpts on;
  on.regularity = Regularity::on;
  try {
    (void)encode_cnf({99, 14, 1, 2}, on);
    FAIL("expected BudgetError");
  } catch (const BudgetError& e) {
    CHECK(e.required_clauses == binomial(98, 15) + binomial(98, 13));
  }
}

TEST_CASE("known graphs satisfy their CNF encodings and non-examples fail") {
  const auto enc = encode_cnf({9, 4, 1, 2});
  CHECK(cnf_satisfied(enc.formula,
                      assignment_from_graph(enc.vars, paley(9))));
  CHECK(cnf_satisfied(enc.formula, assignment_from_graph(enc.vars, rook(3))));
  CHECK(cnf_satisfied(enc.formula,
                      assignment_from_graph(enc.vars, complement(paley(9)))));
  CHECK(!cnf_satisfied(enc.formula,
                       assignment_from_graph(enc.vars, star(8))));

  const auto pet = encode_cnf({10, 3, 0, 1});
  CHECK(cnf_satisfied(pet.formula,
                      assignment_from_graph(pet.vars, petersen())));
  CHECK(!cnf_satisfied(pet.formula,
                       assignment_from_graph(pet.vars, complement(petersen()))));

  // Under the star preset the natural labeling of paley(9) is excluded,
  // but the preset-matching completion passes.
  const Preset pre = symmetry_break_star({9, 4, 1, 2});
  EncodeOpts opts;
  opts.preset = &pre;
  const auto pinned = encode_cnf({9, 4, 1, 2}, opts);
  CHECK(!cnf_satisfied(pinned.formula,
                       assignment_from_graph(pinned.vars, paley(9))));
  const Graph completion = star_completion(pre, 0b110011);
  CHECK(cnf_satisfied(pinned.formula,
                      assignment_from_graph(pinned.vars, completion)));
}

TEST_CASE("non-linear PB encoding shapes match the worked pair") {
  const auto enc = encode_pb_nonlinear({4, 2, 1, 2});
  CHECK(enc.formula.var_count == 6);
  REQUIRE(enc.formula.constraints.size() == 12);
  CHECK(!enc.formula.is_linear());

  const PbConstraint& lam = enc.formula.constraints[0];
  CHECK(lam.rel == PbRel::eq);
  CHECK(lam.rhs == 0);
  REQUIRE(lam.terms.size() == 3);
  CHECK(lam.terms[0] == pb_term(-1, {1}));
  CHECK(lam.terms[1] == pb_term(1, {1, 2, 4}));
  CHECK(lam.terms[2] == pb_term(1, {1, 3, 5}));

  const PbConstraint& mu = enc.formula.constraints[1];
  CHECK(mu.rel == PbRel::eq);
  CHECK(mu.rhs == 2);
  REQUIRE(mu.terms.size() == 5);
  CHECK(mu.terms[0] == pb_term(1, {2, 4}));
  CHECK(mu.terms[1] == pb_term(1, {3, 5}));
  CHECK(mu.terms[2] == pb_term(-1, {1, 2, 4}));
  CHECK(mu.terms[3] == pb_term(-1, {1, 3, 5}));
  CHECK(mu.terms[4] == pb_term(2, {1}));

  // lambda = 0 drops the linear term entirely.
  const auto pet = encode_pb_nonlinear({10, 3, 0, 1});
  CHECK(pet.formula.constraints.size() == 45 * 2 + 10);
  for (const PbTerm& t : pet.formula.constraints[0].terms) {
    CHECK(t.len == 3);
  }

  CHECK(encode_pb_nonlinear({9, 4, 1, 2}).formula.constraints.size() == 72);
}

TEST_CASE("pb_term validates and normalizes its variables") {
  const PbTerm t = pb_term(2, {9, 4, 7});
  CHECK(t.coef == 2);
  CHECK(t.len == 3);
  CHECK(t.vars[0] == 4);
  CHECK(t.vars[1] == 7);
  CHECK(t.vars[2] == 9);
  CHECK_THROWS_AS(pb_term(0, {1}), SrgError);
  CHECK_THROWS_AS(pb_term(1, {}), SrgError);
  CHECK_THROWS_AS(pb_term(1, {1, 2, 3, 4}), SrgError);
  CHECK_THROWS_AS(pb_term(1, {3, 3}), SrgError);
  CHECK_THROWS_AS(pb_term(1, {0}), SrgError);
  CHECK_THROWS_AS(pb_term(1, {-2}), SrgError);
  CHECK_THROWS_AS(pb_term(std::int64_t{1} << 40, {1}), SrgError);
}

TEST_CASE("linear PB encoding counts and the angle/triangle truth tables") {
  const auto enc = encode_pb_linear({9, 4, 1, 2});
  CHECK(enc.formula.var_count == 540);
  CHECK(enc.formula.constraints.size() == 36 * (8 * 7 + 2));
  CHECK(enc.formula.is_linear());

  const auto pet = encode_pb_linear({10, 3, 0, 1});
  CHECK(pet.formula.var_count == 765);
  CHECK(pet.formula.constraints.size() == 45 * (8 * 8 + 2) + 10);

  // On 3 vertices the first 8 constraints define angle x4 and triangle x7
  // for pair (0,1) with apex 2: satisfiable exactly at the definitional
  // values.
  const auto tiny = encode_pb_linear({3, 1, 0, 1});
  for (unsigned bits = 0; bits < 32; ++bits) {
    std::vector<char> assign(
        static_cast<std::size_t>(tiny.formula.var_count) + 1, 0);
    const bool e01 = bits & 1u;
    const bool e02 = bits >> 1 & 1u;
    const bool e12 = bits >> 2 & 1u;
    assign[1] = e01;
    assign[2] = e02;
    assign[3] = e12;
    assign[4] = bits >> 3 & 1u;  // angle candidate
    assign[7] = bits >> 4 & 1u;  // triangle candidate
    const bool expect = (assign[4] == ((!e01 && e02 && e12) ? 1 : 0)) &&
                        (assign[7] == ((e01 && e02 && e12) ? 1 : 0));
    CHECK(range_ok(tiny.formula, 0, 8, assign) == expect);
  }
}

TEST_CASE("all three encodings accept the same known graphs") {
  const auto cnf = encode_cnf({10, 3, 0, 1});
  const auto nl = encode_pb_nonlinear({10, 3, 0, 1});
  const auto lin = encode_pb_linear({10, 3, 0, 1});
  const Graph good = petersen();
  CHECK(cnf_satisfied(cnf.formula, assignment_from_graph(cnf.vars, good)));
  CHECK(pb_satisfied(nl.formula, assignment_from_graph(nl.vars, good)));
  CHECK(pb_satisfied(lin.formula, assignment_from_graph(lin.vars, good)));

  // Move one edge: all three reject.
  std::vector<Edge> edges = good.edges();
  edges[0] = {0, 2};  // replaces (0,1); 0-2 are non-adjacent in the cycle
  std::sort(edges.begin(), edges.end());
  const Graph bent(10, edges);
  CHECK(!cnf_satisfied(cnf.formula, assignment_from_graph(cnf.vars, bent)));
  CHECK(!pb_satisfied(nl.formula, assignment_from_graph(nl.vars, bent)));
  CHECK(!pb_satisfied(lin.formula, assignment_from_graph(lin.vars, bent)));
}

TEST_CASE("under the star preset all encodings agree on every completion") {
  const SrgParams p{9, 4, 1, 2};
  const Preset pre = symmetry_break_star(p);
  EncodeOpts opts;
  opts.preset = &pre;
  const auto cnf = encode_cnf(p, opts);
  const auto nl = encode_pb_nonlinear(p, opts);
  const auto lin = encode_pb_linear(p, opts);

  int models = 0;
  unsigned winner = 0;
  for (unsigned mask = 0; mask < 64; ++mask) {
    const Graph g = star_completion(pre, mask);
    const bool c = cnf_satisfied(cnf.formula,
                                 assignment_from_graph(cnf.vars, g));
    const bool n = pb_satisfied(nl.formula,
                                assignment_from_graph(nl.vars, g));
    const bool l = pb_satisfied(lin.formula,
                                assignment_from_graph(lin.vars, g));
    CAPTURE(mask);
    CHECK(c == n);
    CHECK(c == l);
    if (c) {
      ++models;
      winner = mask;
    }
  }
  CHECK(models == 1);
  CHECK(winner == 0b110011);  // the 5-6-8-7-5 cycle on the labeled block
  CHECK(verify_srg(star_completion(pre, winner), p).srg_ok());
}

TEST_CASE("view systems relax the mu side to an upper bound") {
  // Complete bipartite 3+3: 3-regular, no common neighbors across edges,
  // three across non-edges.
  std::vector<Edge> k33;
  for (int i = 0; i < 3; ++i) {
    for (int j = 3; j < 6; ++j) k33.push_back({i, j});
  }
  const Graph bip(6, k33);
  const auto view6 = encode_view_system(6, 3, 0, 3);
  CHECK(pb_satisfied(view6.formula,
                     assignment_from_graph(view6.vars, bip)));
  const auto tight6 = encode_view_system(6, 3, 0, 2);
  CHECK(!pb_satisfied(tight6.formula,
                      assignment_from_graph(tight6.vars, bip)));

  const auto view10 = encode_view_system(10, 3, 0, 3);
  CHECK(pb_satisfied(view10.formula,
                     assignment_from_graph(view10.vars, petersen())));

  const auto view9 = encode_view_system(9, 4, 1, 2);
  CHECK(pb_satisfied(view9.formula,
                     assignment_from_graph(view9.vars, rook(3))));
  const auto cap1 = encode_view_system(9, 4, 1, 1);
  CHECK(!pb_satisfied(cap1.formula,
                      assignment_from_graph(cap1.vars, rook(3))));

  const auto view21 = encode_view_system(21, 10, 5, 4);
  CHECK(pb_satisfied(view21.formula,
                     assignment_from_graph(view21.vars, triangular(7))));
  const auto cap3 = encode_view_system(21, 10, 5, 3);
  CHECK(!pb_satisfied(cap3.formula,
                      assignment_from_graph(cap3.vars, triangular(7))));

  CHECK_THROWS_AS(encode_view_system(2, 1, 0, 1), SrgError);
  CHECK_THROWS_AS(encode_view_system(6, 5, 0, 3), SrgError);
  CHECK_THROWS_AS(encode_view_system(6, 3, 5, -1), SrgError);
  CHECK_THROWS_AS(encode_view_system(6, 3, 9, 3), SrgError);
}

TEST_CASE("triangle-view system has the per-kind constraint counts") {
  const auto enc = encode_triangular_view();
  CHECK(enc.formula.var_count == 26565);
  REQUIRE(enc.formula.constraints.size() == 2 * 26565 + 231);
  std::size_t lambda_rows = 0;
  std::size_t cap_rows = 0;
  std::size_t degree_rows = 0;
  std::size_t terms = 0;
  for (const auto& c : enc.formula.constraints) {
    terms += c.terms.size();
    if (c.rel == PbRel::le) {
      ++cap_rows;
      CHECK(c.rhs == 3);
    } else if (std::any_of(c.terms.begin(), c.terms.end(),
                           [](const PbTerm& t) { return t.len == 3; })) {
      ++lambda_rows;
      CHECK(c.rhs == 0);
    } else {
      ++degree_rows;
      CHECK(c.rhs == 18);
      CHECK(c.terms.size() == 230);
    }
  }
  CHECK(lambda_rows == 26565);
  CHECK(cap_rows == 26565);
  CHECK(degree_rows == 231);
  CHECK(terms == 18356415);
}

TEST_CASE("claw system materializes indicators over known neighborhoods") {
  const auto enc = encode_maxsat_claw(4);
  CHECK(enc.vars.n() == 9);
  REQUIRE(enc.vars.claw_tuples().size() == 20);
  CHECK(enc.formula.var_count == 36 + 20);
  // 30 preset rows + 9 degrees + 36 mu rows + 7 rows per indicator.
  CHECK(enc.formula.constraints.size() == 30 + 9 + 36 + 7 * 20);
  CHECK(enc.formula.has_objective);
  CHECK(enc.formula.objective.size() == 20);
  CHECK(!enc.formula.is_linear());

  CHECK(enc.vars.claw_tuples()[0] == ClawTuple{0, {1, 2, 3}});
  CHECK(enc.vars.claw_tuples()[4] == ClawTuple{1, {0, 2, 5}});
  CHECK(enc.vars.claw_tuples()[19] == ClawTuple{4, {3, 6, 8}});

  CHECK_THROWS_AS(encode_maxsat_claw(3), SrgError);
  CHECK_THROWS_AS(encode_maxsat_claw(2), SrgError);
  CHECK_THROWS_AS(encode_maxsat_claw(46), SrgError);
}

TEST_CASE("claw indicator rows are exactly the claw truth table") {
  const auto enc = encode_maxsat_claw(4);
  // Rows for tuple 0 (center 0, leaves 1,2,3) start after 30 preset + 9
  // degree + 36 mu rows; variables: spokes x1,x2,x3, pairs x9,x10,x16,
  // indicator x37.
  const std::size_t base = 30 + 9 + 36;
  for (unsigned bits = 0; bits < 128; ++bits) {
    std::vector<char> assign(
        static_cast<std::size_t>(enc.formula.var_count) + 1, 0);
    assign[1] = bits & 1u;
    assign[2] = bits >> 1 & 1u;
    assign[3] = bits >> 2 & 1u;
    assign[9] = bits >> 3 & 1u;
    assign[10] = bits >> 4 & 1u;
    assign[16] = bits >> 5 & 1u;
    assign[37] = bits >> 6 & 1u;
    const bool claw = assign[1] && assign[2] && assign[3] && !assign[9] &&
                      !assign[10] && !assign[16];
    const bool expect = assign[37] == (claw ? 1 : 0);
    CHECK(range_ok(enc.formula, base, base + 7, assign) == expect);
  }
}

TEST_CASE("claw objective counts claws and vanishes on the real completion") {
  const auto enc = encode_maxsat_claw(4);
  const Preset pre = symmetry_break_star({9, 4, 1, 2});
  const Graph completion = star_completion(pre, 0b110011);
  const auto good = assignment_from_graph(enc.vars, completion);
  // Hard constraints (preset, degrees, mu counts, indicator rows) hold,
  // and matching neighborhoods leave no claw.
  CHECK(pb_satisfied(enc.formula, good));
  CHECK(pb_objective_value(enc.formula, good) == 0);

  // A bare 4-star is infeasible for the hard rows but its objective value
  // is the claw count at the center.
  const Graph spider(9, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  const auto sparse = assignment_from_graph(enc.vars, spider);
  CHECK(!pb_satisfied(enc.formula, sparse));
  CHECK(pb_objective_value(enc.formula, sparse) == 4);
  CHECK(count_claws_at(spider, 0) == 4);
}

TEST_CASE("claw system at the full degree-14 order") {
  const auto enc = encode_maxsat_claw();
  CHECK(enc.vars.n() == 99);
  CHECK(enc.vars.claw_tuples().size() == 5460);
  CHECK(enc.formula.var_count == 4851 + 5460);
  CHECK(enc.formula.constraints.size() == 1365 + 99 + 4851 + 7 * 5460);
  CHECK(enc.formula.objective.size() == 5460);
  // Only the 15 fully determined centers 0..14 contribute, C(14,3) each;
  // that per-center total is claw_count_formula at an independent
  // neighborhood.
  std::vector<int> per_center(99, 0);
  for (const auto& t : enc.vars.claw_tuples()) ++per_center[t.center];
  for (int v = 0; v <= 14; ++v) CHECK(per_center[v] == 364);
  for (int v = 15; v < 99; ++v) CHECK(per_center[v] == 0);
  CHECK(claw_count_formula(14, 0, 0, 0) == 364);
}

TEST_CASE("DIMACS output is byte-exact") {
  CnfEncoding enc{VarMap::edges_only(3), CnfFormula{3, {{1, -2}, {3}}}};
  std::ostringstream out;
  write_dimacs(out, enc);
  CHECK(out.str() ==
        "c edge variables: id = i*n - i*(i+1)/2 + (j-i) for pairs i < j, "
        "n = 3\n"
        "c edge 1 = (0,1)\n"
        "c edge 2 = (0,2)\n"
        "c edge 3 = (1,2)\n"
        "p cnf 3 2\n"
        "1 -2 0\n"
        "3 0\n");
}

TEST_CASE("DIMACS output of a generated formula lines up with its clauses") {
  const auto enc = encode_cnf({4, 2, 1, 2});
  std::ostringstream out;
  write_dimacs(out, enc);
  const auto lines = lines_of(out.str());
  REQUIRE(lines.size() == 8 + 60);
  CHECK(lines[1] == "c edge 1 = (0,1)");
  CHECK(lines[6] == "c edge 6 = (2,3)");
  CHECK(lines[7] == "p cnf 18 60");
  CHECK(lines[8] == "-2 -4 7 0");
  CHECK(lines[9] == "-7 2 0");
  CHECK(lines[10] == "-7 4 0");
  // Pair (2,3) block: guarded exactly-1 then exactly-2 over cherries 17,18.
  CHECK(lines[64] == "-17 -18 -6 0");
  CHECK(lines[65] == "17 18 -6 0");
  CHECK(lines[66] == "17 6 0");
  CHECK(lines[67] == "18 6 0");
}

TEST_CASE("OPB output is byte-exact for the order-4 non-linear system") {
  const auto enc = encode_pb_nonlinear({4, 2, 1, 2});
  std::ostringstream out;
  write_opb(out, enc);
  CHECK(out.str() ==
        "* #variable= 6 #constraint= 12\n"
        "-1 x1 +1 x1 x2 x4 +1 x1 x3 x5 = 0 ;\n"
        "+1 x2 x4 +1 x3 x5 -1 x1 x2 x4 -1 x1 x3 x5 +2 x1 = 2 ;\n"
        "-1 x2 +1 x1 x2 x4 +1 x2 x3 x6 = 0 ;\n"
        "+1 x1 x4 +1 x3 x6 -1 x1 x2 x4 -1 x2 x3 x6 +2 x2 = 2 ;\n"
        "-1 x3 +1 x1 x3 x5 +1 x2 x3 x6 = 0 ;\n"
        "+1 x1 x5 +1 x2 x6 -1 x1 x3 x5 -1 x2 x3 x6 +2 x3 = 2 ;\n"
        "-1 x4 +1 x1 x2 x4 +1 x4 x5 x6 = 0 ;\n"
        "+1 x1 x2 +1 x5 x6 -1 x1 x2 x4 -1 x4 x5 x6 +2 x4 = 2 ;\n"
        "-1 x5 +1 x1 x3 x5 +1 x4 x5 x6 = 0 ;\n"
        "+1 x1 x3 +1 x4 x6 -1 x1 x3 x5 -1 x4 x5 x6 +2 x5 = 2 ;\n"
        "-1 x6 +1 x2 x3 x6 +1 x4 x5 x6 = 0 ;\n"
        "+1 x2 x3 +1 x4 x5 -1 x2 x3 x6 -1 x4 x5 x6 +2 x6 = 2 ;\n");
}

TEST_CASE("OPB writer negates le rows and renders objectives") {
  PbFormula f;
  f.var_count = 3;
  f.has_objective = true;
  f.objective = {pb_term(1, {2}), pb_term(3, {3})};
  f.constraints.push_back(
      PbConstraint{{pb_term(1, {1}), pb_term(1, {2})}, PbRel::le, 1});
  f.constraints.push_back(
      PbConstraint{{pb_term(-2, {1, 3})}, PbRel::ge, -2});
  PbEncoding enc{VarMap::edges_only(3), std::move(f)};
  std::ostringstream out;
  write_opb(out, enc);
  CHECK(out.str() ==
        "* #variable= 3 #constraint= 2\n"
        "min: +1 x2 +3 x3 ;\n"
        "-1 x1 -1 x2 >= -1 ;\n"
        "-2 x1 x3 >= -2 ;\n");
}

TEST_CASE("constraint and assignment evaluators reject size mismatches") {
  const auto enc = encode_pb_nonlinear({4, 2, 1, 2});
  CHECK_THROWS_AS(assignment_from_graph(enc.vars, Graph(5)), SrgError);
  std::vector<char> tiny(3, 0);
  CHECK_THROWS_AS(pb_satisfied(enc.formula, tiny), SrgError);
  CHECK_THROWS_AS(pb_objective_value(enc.formula, tiny), SrgError);
  const auto cnf = encode_cnf({4, 2, 1, 2});
  CHECK_THROWS_AS(cnf_satisfied(cnf.formula, tiny), SrgError);
  // No objective on plain constraint systems.
  std::vector<char> full(
      static_cast<std::size_t>(enc.formula.var_count) + 1, 0);
  CHECK_THROWS_AS(pb_objective_value(enc.formula, full), SrgError);
}
