// Constraint encodings of the strong-regularity conditions.
//
// Three interchangeable edge-variable encodings are provided:
//
//   * CNF over edge + cherry indicator variables, with cardinality
//     constraints expanded binomially (guarded by a hard clause budget);
//   * non-linear pseudo-Boolean constraints over edge variables only, using
//     product terms of degree up to 3;
//   * linear pseudo-Boolean constraints over edge + angle + triangle
//     indicator variables.
//
// All three project to the same edge-variable solution set for the same
// parameters and options. Auxiliary variables (cherries, angles, triangles,
// claw indicators) are definitionally tied to the edge variables, so a
// total edge assignment extends uniquely; assignment_from_graph builds that
// extension for evaluation and round-trip tests.

#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "srgkit/error.hpp"
#include "srgkit/graph.hpp"
#include "srgkit/params.hpp"

namespace srg {

// Exact binomial coefficient C(n, k). Throws SrgError when the value does
// not fit in 64 bits (internal budget checks saturate instead).
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

// ---------------------------------------------------------------------------
// Variable numbering
// ---------------------------------------------------------------------------

// A claw candidate: center v with a leaf triple a < b < c (all distinct
// from v). The indicator variable is true iff v-a, v-b, v-c are edges and
// a-b, a-c, b-c are not.
struct ClawTuple {
  int center = 0;
  std::array<int, 3> leaves{};

  bool operator==(const ClawTuple&) const = default;
};

// Deterministic 1-based variable ids shared by every encoding and by the
// model decoder.
//
//   edges     1 .. E                      E = C(n,2), pair (i<j) at
//                                         i*n - i*(i+1)/2 + (j-i)
//   cherries  E+1 .. E + E*(n-2)          per edge block of n-2 apexes in
//                                         increasing vertex order
//   angles    same layout as cherries     (linear PB encoding)
//   triangles E + E*(n-2) + same offset   (linear PB encoding)
//   claws     E+1 .. E + #tuples          explicit tuple list, in order
//
// A map carries at most one auxiliary block family (cherries, the
// angle/triangle pair, or claws); ids below E always mean edges.
class VarMap {
 public:
  enum class Aux { none, cherries, angles_triangles, claws };

  static VarMap edges_only(int n);
  static VarMap with_cherries(int n);
  static VarMap with_angles_triangles(int n);
  static VarMap with_claws(int n, std::vector<ClawTuple> tuples);

  int n() const { return n_; }
  Aux aux() const { return aux_; }
  int edge_vars() const { return edge_vars_; }
  int var_count() const { return var_count_; }

  // Pair (i, j) with 0 <= i < j < n to its edge variable id.
  int edge_id(int i, int j) const;
  // Inverse of edge_id; id must lie in [1, edge_vars()].
  Edge edge_of(int id) const;

  int cherry_id(int i, int j, int apex) const;
  int angle_id(int i, int j, int apex) const;
  int triangle_id(int i, int j, int apex) const;

  int claw_id(int tuple_index) const;
  const std::vector<ClawTuple>& claw_tuples() const { return claw_tuples_; }

 private:
  VarMap(int n, Aux aux, std::vector<ClawTuple> tuples);

  // Position of apex among [0, n) \ {i, j}, in increasing vertex order.
  int apex_rank(int i, int j, int apex) const;
  int aux_offset(int i, int j, int apex, const char* kind) const;

  int n_ = 0;
  Aux aux_ = Aux::none;
  int edge_vars_ = 0;
  int var_count_ = 0;
  std::vector<ClawTuple> claw_tuples_;
};

// ---------------------------------------------------------------------------
// CNF
// ---------------------------------------------------------------------------

// Clauses are literal lists (positive/negative 1-based variable ids,
// never zero, no variable repeated within a clause).
struct CnfFormula {
  int var_count = 0;
  std::vector<std::vector<int>> clauses;
};

// Hard ceiling on clauses, applied both to each single cardinality
// expansion and to a whole generated formula. Exceeding it raises
// BudgetError with the exact required count.
inline constexpr std::uint64_t kClauseBudget = 10'000'000;

// "At most theta of vars are true": one all-negative clause per
// (theta+1)-subset, subsets in lexicographic order. theta >= |vars| yields
// no clauses. A nonzero guard literal is appended to every clause, turning
// the constraint into "guard-literal-true OR cardinality holds".
std::vector<std::vector<int>> cnf_at_most(const std::vector<int>& vars,
                                          int theta, int guard = 0);

// "Exactly theta of vars are true" (0 <= theta <= |vars|): the at-most
// clauses followed by one all-positive clause per (|vars|-theta+1)-subset.
// The budget check covers both halves together.
std::vector<std::vector<int>> cnf_exactly(const std::vector<int>& vars,
                                          int theta, int guard = 0);

// ---------------------------------------------------------------------------
// Pseudo-Boolean
// ---------------------------------------------------------------------------

// coef * (product of up to three distinct variables, ids ascending).
// Every product degree that occurs in this toolkit is <= 3, so the ids are
// stored inline to keep multi-million-term systems compact.
struct PbTerm {
  std::int32_t coef = 0;
  std::uint8_t len = 0;
  std::array<std::int32_t, 3> vars{};

  bool operator==(const PbTerm&) const = default;
};

// Validating constructor: coef != 0, 1 <= |vars| <= 3, ids positive; the
// ids are sorted ascending and must be distinct.
PbTerm pb_term(std::int64_t coef, std::initializer_list<int> vars);

enum class PbRel { eq, ge, le };

struct PbConstraint {
  std::vector<PbTerm> terms;
  PbRel rel = PbRel::eq;
  std::int64_t rhs = 0;
};

// Constraint system with an optional linear minimization objective.
// le-constraints are kept as such in memory; the OPB writer emits them
// negated as >=.
struct PbFormula {
  int var_count = 0;
  std::vector<PbConstraint> constraints;
  bool has_objective = false;
  std::vector<PbTerm> objective;

  // True iff every term everywhere has degree 1.
  bool is_linear() const;
};

// ---------------------------------------------------------------------------
// Presets (partial edge assignments)
// ---------------------------------------------------------------------------

// A consistent partial assignment of edges, applied to encodings as unit
// clauses (CNF) or single-term equalities (PB). add() rejects a pair
// already set to the opposite value.
class Preset {
 public:
  void add(int i, int j, bool present);
  std::optional<bool> lookup(int i, int j) const;
  std::size_t size() const { return assignments_.size(); }

  // Deterministic iteration order: pairs ascending lexicographically.
  const std::map<Edge, bool>& assignments() const { return assignments_; }

 private:
  std::map<Edge, bool> assignments_;
};

// Pins N(0) = {1..k}: every edge at vertex 0 is decided, nothing else.
// Sound for any parameter set, because vertices of a witness graph can
// always be relabeled to put the first neighborhood there. Requires
// 1 <= k < n.
Preset star_normalization(const SrgParams& p);

// Symmetry-normalized start for lambda=1, mu=2 targets with n = k^2/2 + 1
// (throws otherwise). Fixes N(0) = {1..k}, the perfect matching
// {2i-1, 2i} inside it, and one labeled vertex per non-matching pair
// {i, j} of N(0) (vertices k+1, k+2, ... in lexicographic label order)
// adjacent to i and j and to nothing else in N[0]. Only edges between two
// labeled vertices remain free: C(C(k,2) - k/2, 2) of them.
Preset symmetry_break_star(const SrgParams& p);

// Forces the first `count` blocks of 9 vertices ([9b, 9b+9)) to each induce
// the Paley graph on GF(9). Requires 0 <= 9*count <= n.
Preset preset_paley9_blocks(int count, int n);

// ---------------------------------------------------------------------------
// Encoders
// ---------------------------------------------------------------------------

enum class Regularity {
  automatic,  // include degree constraints only when mu <= 1, where the
              // pair conditions alone do not force regularity
  on,
  off,
};

struct EncodeOpts {
  Regularity regularity = Regularity::automatic;
  const Preset* preset = nullptr;
};

struct CnfEncoding {
  VarMap vars;
  CnfFormula formula;
};

struct PbEncoding {
  VarMap vars;
  PbFormula formula;
};

// CNF encoding of the pair conditions over edge + cherry variables.
// Per pair (i, j): three clauses tying each cherry c_{ij}^k to
// e_ik AND e_jk, then exactly-lambda over the cherries guarded by -e_ij
// and exactly-mu guarded by +e_ij. Degree constraints per Regularity.
// Emission order: preset units, cherry definitions (pairs by edge id, apex
// ascending), per-pair cardinalities (lambda then mu), degrees (vertex
// ascending). Throws BudgetError when any single expansion or the whole
// formula would exceed kClauseBudget.
CnfEncoding encode_cnf(const SrgParams& p, const EncodeOpts& opts = {});

// Edge-variable-only system with product terms. Per pair (i, j):
//   -lambda e_ij + sum_k e_ij e_ik e_kj                  = 0
//    sum_k e_ik e_kj - sum_k e_ij e_ik e_kj + mu e_ij    = mu
// (zero-coefficient terms omitted). Degree constraints per Regularity.
PbEncoding encode_pb_nonlinear(const SrgParams& p, const EncodeOpts& opts = {});

// Linear system over edge + angle + triangle variables. Per pair and apex,
// four inequalities define the angle (path i-k-j with ij absent) and four
// the triangle; per pair, the sums  -lambda e_ij + sum_k t = 0  and
// mu e_ij + sum_k a = mu  enforce the counts. Degree constraints per
// Regularity.
PbEncoding encode_pb_linear(const SrgParams& p, const EncodeOpts& opts = {});

// Relaxed system for a derived "view" graph: exact common-neighbor count
// lambda_view on edges, only an upper bound mu_cap on non-edges, plus
// degree-k_view equalities (not redundant here, since the mu side is just
// a bound). Non-linear terms as in encode_pb_nonlinear.
PbEncoding encode_view_system(int n_view, int k_view, int lambda_view,
                              int mu_cap);

// The triangle-view system of the (99,14,1,2) target: 231 triangles,
// 18-regular, 5 common neighbors across each shared corner, at most 3 for
// disjoint triangle pairs. Equivalent to encode_view_system(231, 18, 5, 3).
PbEncoding encode_triangular_view();

// Claw-minimization system for the lambda=1/mu=2 member with degree k
// (n = k^2/2 + 1). Hard constraints: the symmetry_break_star preset,
// degree-k equalities, and the mu=2 count per pair -- but no lambda
// constraint, so triangle-free neighborhoods stay feasible and the
// objective measures their cost in claws. Claw indicator variables are
// materialized for every leaf triple inside a center's preset-known
// neighborhood (7 defining inequalities each); the objective minimizes
// their sum. The default k = 14 is the (99,14,1,2) target.
PbEncoding encode_maxsat_claw(int k = 14);

// ---------------------------------------------------------------------------
// Writers
// ---------------------------------------------------------------------------

// DIMACS CNF: comment legend for the edge-variable block (one line per
// edge), "p cnf V C" header, then clauses space-separated and
// 0-terminated, LF line endings.
void write_dimacs(std::ostream& out, const CnfEncoding& enc);

// OPB: "* #variable= V #constraint= C" header, optional "min:" line, then
// one constraint per line as signed-coefficient terms ("+1 x3 x7"),
// relation = or >= (le-constraints are emitted negated), " ;" terminator.
void write_opb(std::ostream& out, const PbEncoding& enc);

// ---------------------------------------------------------------------------
// Evaluation (plug a known graph into a formula)
// ---------------------------------------------------------------------------

// Total assignment (index = variable id; slot 0 unused) extending g's edge
// set to the auxiliary block by the indicators' defining semantics.
std::vector<char> assignment_from_graph(const VarMap& vm, const Graph& g);

bool cnf_satisfied(const CnfFormula& f, const std::vector<char>& assignment);

// Checks constraints only (ignores the objective).
bool pb_satisfied(const PbFormula& f, const std::vector<char>& assignment);

std::int64_t pb_objective_value(const PbFormula& f,
                                const std::vector<char>& assignment);

}  // namespace srg
