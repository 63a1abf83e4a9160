// Variable numbering, CNF encoding, presets, the DIMACS writer, and the
// assignment evaluators. The pseudo-Boolean builders live in encode_pb.cpp.

#include "srgkit/encode.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <ostream>
#include <string>
#include <utility>

#include "encode_detail.hpp"
#include "srgkit/families.hpp"

namespace srg {

namespace {

constexpr std::uint64_t kU64Max = std::numeric_limits<std::uint64_t>::max();

// C(n, k) computed exactly with 128-bit intermediates, clamped to the
// uint64 maximum on overflow. The running product C(n-k+i, i) is
// nondecreasing in i, so once it clears 2^96 the final value cannot fit
// and we can stop early.
std::uint64_t binomial_saturated(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  const unsigned __int128 all = ~static_cast<unsigned __int128>(0);
  const unsigned __int128 early = static_cast<unsigned __int128>(1) << 96;
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    const unsigned __int128 factor = n - k + i;
    if (r > all / factor) return kU64Max;
    r = r * factor / i;
    if (r > early) return kU64Max;
  }
  return r > kU64Max ? kU64Max : static_cast<std::uint64_t>(r);
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  return a > kU64Max - b ? kU64Max : a + b;
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return a > kU64Max / b ? kU64Max : a * b;
}

void check_expansion_budget(std::uint64_t required) {
  if (required > kClauseBudget) {
    throw BudgetError("cardinality expansion needs " + std::to_string(required) +
                          " clauses (budget " + std::to_string(kClauseBudget) +
                          ")",
                      required, kClauseBudget);
  }
}

// Appends one clause per r-subset of vars, in lexicographic subset order,
// with every literal negated or not as requested, plus the optional guard.
void append_subset_clauses(std::vector<std::vector<int>>& out,
                           const std::vector<int>& vars, int r, bool negate,
                           int guard) {
  const int m = static_cast<int>(vars.size());
  if (r > m) return;
  std::vector<int> idx(static_cast<std::size_t>(r));
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    std::vector<int> clause;
    clause.reserve(static_cast<std::size_t>(r) + (guard != 0 ? 1 : 0));
    for (int t : idx) clause.push_back(negate ? -vars[t] : vars[t]);
    if (guard != 0) clause.push_back(guard);
    out.push_back(std::move(clause));
    int pos = r - 1;
    while (pos >= 0 && idx[pos] == m - r + pos) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int t = pos + 1; t < r; ++t) idx[t] = idx[t - 1] + 1;
  }
}

std::string pair_str(int i, int j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace

namespace detail {

bool degrees_included(const SrgParams& p, const EncodeOpts& opts) {
  switch (opts.regularity) {
    case Regularity::on:
      return true;
    case Regularity::off:
      return false;
    case Regularity::automatic:
      return p.mu <= 1;
  }
  return true;
}

void check_preset_range(const Preset* preset, int n) {
  if (preset == nullptr) return;
  for (const auto& [edge, value] : preset->assignments()) {
    (void)value;
    if (edge.second >= n) {
      throw SrgError("preset pair " + pair_str(edge.first, edge.second) +
                     " out of range for n=" + std::to_string(n));
    }
  }
}

int require_graph_order(const SrgParams& p) {
  require_valid(p);
  if (p.n > Graph::kMaxVertices) {
    throw SrgError("encoding capped at n <= " +
                   std::to_string(Graph::kMaxVertices) + ", got n=" +
                   std::to_string(p.n));
  }
  return static_cast<int>(p.n);
}

}  // namespace detail

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  const std::uint64_t v = binomial_saturated(n, k);
  if (v == kU64Max) {
    throw SrgError("binomial(" + std::to_string(n) + "," + std::to_string(k) +
                   ") overflows 64 bits");
  }
  return v;
}

// ---------------------------------------------------------------------------
// VarMap
// ---------------------------------------------------------------------------

VarMap::VarMap(int n, Aux aux, std::vector<ClawTuple> tuples)
    : n_(n), aux_(aux), claw_tuples_(std::move(tuples)) {
  if (n < 3 || n > Graph::kMaxVertices) {
    throw SrgError("variable map needs 3 <= n <= " +
                   std::to_string(Graph::kMaxVertices) + ", got n=" +
                   std::to_string(n));
  }
  edge_vars_ = n * (n - 1) / 2;
  std::int64_t total = edge_vars_;
  switch (aux_) {
    case Aux::none:
      break;
    case Aux::cherries:
      total += static_cast<std::int64_t>(edge_vars_) * (n - 2);
      break;
    case Aux::angles_triangles:
      total += 2 * static_cast<std::int64_t>(edge_vars_) * (n - 2);
      break;
    case Aux::claws:
      total += static_cast<std::int64_t>(claw_tuples_.size());
      break;
  }
  if (total > std::numeric_limits<int>::max()) {
    throw SrgError("variable map exceeds 32-bit id space");
  }
  var_count_ = static_cast<int>(total);
  for (const ClawTuple& t : claw_tuples_) {
    const auto& l = t.leaves;
    const bool ordered = l[0] < l[1] && l[1] < l[2];
    const bool in_range = t.center >= 0 && t.center < n && l[0] >= 0 &&
                          l[2] < n && l[0] != t.center && l[1] != t.center &&
                          l[2] != t.center;
    if (!ordered || !in_range) {
      throw SrgError("malformed claw tuple at center " +
                     std::to_string(t.center));
    }
  }
}

VarMap VarMap::edges_only(int n) { return VarMap(n, Aux::none, {}); }

VarMap VarMap::with_cherries(int n) { return VarMap(n, Aux::cherries, {}); }

VarMap VarMap::with_angles_triangles(int n) {
  return VarMap(n, Aux::angles_triangles, {});
}

VarMap VarMap::with_claws(int n, std::vector<ClawTuple> tuples) {
  return VarMap(n, Aux::claws, std::move(tuples));
}

int VarMap::edge_id(int i, int j) const {
  if (i < 0 || j <= i || j >= n_) {
    throw SrgError("edge_id needs 0 <= i < j < n, got " + pair_str(i, j));
  }
  return i * n_ - i * (i + 1) / 2 + (j - i);
}

Edge VarMap::edge_of(int id) const {
  if (id < 1 || id > edge_vars_) {
    throw SrgError("edge variable id out of range: " + std::to_string(id));
  }
  int i = 0;
  int base = 0;
  while (base + (n_ - 1 - i) < id) {
    base += n_ - 1 - i;
    ++i;
  }
  return {i, i + (id - base)};
}

int VarMap::apex_rank(int i, int j, int apex) const {
  if (apex < 0 || apex >= n_ || apex == i || apex == j) {
    throw SrgError("apex " + std::to_string(apex) +
                   " invalid for pair " + pair_str(i, j));
  }
  return apex - (apex > i ? 1 : 0) - (apex > j ? 1 : 0);
}

int VarMap::aux_offset(int i, int j, int apex, const char* kind) const {
  (void)kind;
  return (edge_id(i, j) - 1) * (n_ - 2) + apex_rank(i, j, apex) + 1;
}

int VarMap::cherry_id(int i, int j, int apex) const {
  if (aux_ != Aux::cherries) {
    throw SrgError("variable map carries no cherry block");
  }
  return edge_vars_ + aux_offset(i, j, apex, "cherry");
}

int VarMap::angle_id(int i, int j, int apex) const {
  if (aux_ != Aux::angles_triangles) {
    throw SrgError("variable map carries no angle block");
  }
  return edge_vars_ + aux_offset(i, j, apex, "angle");
}

int VarMap::triangle_id(int i, int j, int apex) const {
  if (aux_ != Aux::angles_triangles) {
    throw SrgError("variable map carries no triangle block");
  }
  return edge_vars_ + edge_vars_ * (n_ - 2) + aux_offset(i, j, apex, "triangle");
}

int VarMap::claw_id(int tuple_index) const {
  if (aux_ != Aux::claws) {
    throw SrgError("variable map carries no claw block");
  }
  if (tuple_index < 0 ||
      tuple_index >= static_cast<int>(claw_tuples_.size())) {
    throw SrgError("claw tuple index out of range: " +
                   std::to_string(tuple_index));
  }
  return edge_vars_ + tuple_index + 1;
}

// ---------------------------------------------------------------------------
// Cardinality expansions
// ---------------------------------------------------------------------------

std::vector<std::vector<int>> cnf_at_most(const std::vector<int>& vars,
                                          int theta, int guard) {
  if (theta < 0) throw SrgError("cardinality bound must be nonnegative");
  const int m = static_cast<int>(vars.size());
  std::vector<std::vector<int>> clauses;
  if (theta >= m) return clauses;
  check_expansion_budget(
      binomial_saturated(static_cast<std::uint64_t>(m),
                         static_cast<std::uint64_t>(theta) + 1));
  append_subset_clauses(clauses, vars, theta + 1, /*negate=*/true, guard);
  return clauses;
}

std::vector<std::vector<int>> cnf_exactly(const std::vector<int>& vars,
                                          int theta, int guard) {
  const int m = static_cast<int>(vars.size());
  if (theta < 0 || theta > m) {
    throw SrgError("exactly-" + std::to_string(theta) + " over " +
                   std::to_string(m) + " variables is unsatisfiable");
  }
  // At most theta: every (theta+1)-subset has a false member. At least
  // theta: every (m-theta+1)-subset has a true member. Budgeted together.
  const std::uint64_t um = static_cast<std::uint64_t>(m);
  check_expansion_budget(
      sat_add(binomial_saturated(um, static_cast<std::uint64_t>(theta) + 1),
              binomial_saturated(um, um - static_cast<std::uint64_t>(theta) +
                                         1)));
  std::vector<std::vector<int>> clauses;
  append_subset_clauses(clauses, vars, theta + 1, /*negate=*/true, guard);
  append_subset_clauses(clauses, vars, m - theta + 1, /*negate=*/false, guard);
  return clauses;
}

// ---------------------------------------------------------------------------
// Presets
// ---------------------------------------------------------------------------

void Preset::add(int i, int j, bool present) {
  if (i < 0 || j < 0 || i == j) {
    throw SrgError("preset pair must be two distinct vertices, got " +
                   pair_str(i, j));
  }
  const Edge e{std::min(i, j), std::max(i, j)};
  const auto [it, inserted] = assignments_.emplace(e, present);
  if (!inserted && it->second != present) {
    throw SrgError("conflicting preset values for pair " +
                   pair_str(e.first, e.second));
  }
}

std::optional<bool> Preset::lookup(int i, int j) const {
  const auto it = assignments_.find({std::min(i, j), std::max(i, j)});
  if (it == assignments_.end()) return std::nullopt;
  return it->second;
}

Preset star_normalization(const SrgParams& p) {
  require_valid(p);
  const int n = static_cast<int>(p.n);
  const int k = static_cast<int>(p.k);
  Preset pre;
  for (int u = 1; u < n; ++u) pre.add(0, u, u <= k);
  return pre;
}

Preset symmetry_break_star(const SrgParams& p) {
  require_valid(p);
  if (p.lambda != 1 || p.mu != 2 || p.k % 2 != 0 || p.k < 4 ||
      p.n != p.k * p.k / 2 + 1) {
    throw SrgError(
        "star preset needs lambda=1, mu=2, even k >= 4, n=k^2/2+1; got " +
        p.str());
  }
  const int n = static_cast<int>(p.n);
  const int k = static_cast<int>(p.k);
  Preset pre;
  // Normalize N(0) = {1..k}.
  for (int u = 1; u < n; ++u) pre.add(0, u, u <= k);
  // lambda = 1 makes N(0) a perfect matching; normalize it to {2i-1, 2i}.
  for (int i = 1; i <= k; ++i) {
    for (int j = i + 1; j <= k; ++j) {
      pre.add(i, j, i % 2 == 1 && j == i + 1);
    }
  }
  // mu = 2 gives every non-matching pair {i, j} of N(0) exactly one common
  // neighbor outside N[0]; label them k+1, k+2, ... in lexicographic pair
  // order. Each labeled vertex touches N[0] in exactly its two label
  // members (one more neighbor would break a mu or lambda count there).
  int next = k + 1;
  for (int i = 1; i <= k; ++i) {
    for (int j = i + 1; j <= k; ++j) {
      if (i % 2 == 1 && j == i + 1) continue;
      const int v = next++;
      for (int u = 1; u <= k; ++u) pre.add(u, v, u == i || u == j);
    }
  }
  if (next != n) {
    throw SrgError("internal error: star preset labeled " +
                   std::to_string(next - (k + 1)) + " vertices for " +
                   p.str());
  }
  return pre;
}

Preset preset_paley9_blocks(int count, int n) {
  if (count < 0 || 9 * count > n) {
    throw SrgError("need 0 <= 9*count <= n, got count=" +
                   std::to_string(count) + ", n=" + std::to_string(n));
  }
  const Graph pattern = paley(9);
  Preset pre;
  for (int b = 0; b < count; ++b) {
    for (int i = 0; i < 9; ++i) {
      for (int j = i + 1; j < 9; ++j) {
        pre.add(9 * b + i, 9 * b + j, pattern.adjacent(i, j));
      }
    }
  }
  return pre;
}

// ---------------------------------------------------------------------------
// CNF encoder
// ---------------------------------------------------------------------------

CnfEncoding encode_cnf(const SrgParams& p, const EncodeOpts& opts) {
  const int n = detail::require_graph_order(p);
  const int k = static_cast<int>(p.k);
  const int lambda = static_cast<int>(p.lambda);
  const int mu = static_cast<int>(p.mu);
  const bool degrees = detail::degrees_included(p, opts);
  detail::check_preset_range(opts.preset, n);

  VarMap vm = VarMap::with_cherries(n);
  const std::uint64_t edge_count = static_cast<std::uint64_t>(vm.edge_vars());
  const std::uint64_t m = static_cast<std::uint64_t>(n) - 2;

  // Budget the largest single expansion first, so a refusal reports the
  // count that makes this encoding shape hopeless; then the exact total.
  const std::uint64_t lambda_need =
      sat_add(binomial_saturated(m, static_cast<std::uint64_t>(lambda) + 1),
              binomial_saturated(m, m - lambda + 1));
  const std::uint64_t mu_need =
      sat_add(binomial_saturated(m, static_cast<std::uint64_t>(mu) + 1),
              binomial_saturated(m, m - mu + 1));
  const std::uint64_t degree_need =
      degrees ? sat_add(binomial_saturated(static_cast<std::uint64_t>(n) - 1,
                                           static_cast<std::uint64_t>(k) + 1),
                        binomial_saturated(static_cast<std::uint64_t>(n) - 1,
                                           static_cast<std::uint64_t>(n) - k))
              : 0;
  check_expansion_budget(std::max({lambda_need, mu_need, degree_need}));

  std::uint64_t total = opts.preset != nullptr ? opts.preset->size() : 0;
  total = sat_add(total, sat_mul(3, sat_mul(edge_count, m)));
  total = sat_add(total, sat_mul(edge_count, sat_add(lambda_need, mu_need)));
  if (degrees) {
    total = sat_add(total, sat_mul(static_cast<std::uint64_t>(n), degree_need));
  }
  if (total > kClauseBudget) {
    throw BudgetError("CNF formula needs " + std::to_string(total) +
                          " clauses (budget " + std::to_string(kClauseBudget) +
                          ")",
                      total, kClauseBudget);
  }

  CnfFormula f;
  f.var_count = vm.var_count();
  f.clauses.reserve(total);

  if (opts.preset != nullptr) {
    for (const auto& [edge, value] : opts.preset->assignments()) {
      const int id = vm.edge_id(edge.first, edge.second);
      f.clauses.push_back({value ? id : -id});
    }
  }

  // Cherry definitions: c <-> (e_ia AND e_ja).
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int a = 0; a < n; ++a) {
        if (a == i || a == j) continue;
        const int eia = vm.edge_id(std::min(i, a), std::max(i, a));
        const int eja = vm.edge_id(std::min(j, a), std::max(j, a));
        const int c = vm.cherry_id(i, j, a);
        f.clauses.push_back({-eia, -eja, c});
        f.clauses.push_back({-c, eia});
        f.clauses.push_back({-c, eja});
      }
    }
  }

  // Pair conditions: exactly lambda cherries when the edge is present,
  // exactly mu when absent, via guard literals.
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const int eij = vm.edge_id(i, j);
      std::vector<int> cherries;
      cherries.reserve(m);
      for (int a = 0; a < n; ++a) {
        if (a != i && a != j) cherries.push_back(vm.cherry_id(i, j, a));
      }
      for (auto& cl : cnf_exactly(cherries, lambda, -eij)) {
        f.clauses.push_back(std::move(cl));
      }
      for (auto& cl : cnf_exactly(cherries, mu, eij)) {
        f.clauses.push_back(std::move(cl));
      }
    }
  }

  if (degrees) {
    for (int v = 0; v < n; ++v) {
      std::vector<int> incident;
      incident.reserve(n - 1);
      for (int u = 0; u < n; ++u) {
        if (u != v) incident.push_back(vm.edge_id(std::min(u, v),
                                                  std::max(u, v)));
      }
      for (auto& cl : cnf_exactly(incident, k, 0)) {
        f.clauses.push_back(std::move(cl));
      }
    }
  }

  if (f.clauses.size() != total) {
    throw SrgError("internal error: CNF clause count mismatch (" +
                   std::to_string(f.clauses.size()) + " vs " +
                   std::to_string(total) + ")");
  }
  return {std::move(vm), std::move(f)};
}

// ---------------------------------------------------------------------------
// DIMACS writer
// ---------------------------------------------------------------------------

void write_dimacs(std::ostream& out, const CnfEncoding& enc) {
  const VarMap& vm = enc.vars;
  out << "c edge variables: id = i*n - i*(i+1)/2 + (j-i) for pairs i < j, n = "
      << vm.n() << "\n";
  for (int id = 1; id <= vm.edge_vars(); ++id) {
    const Edge e = vm.edge_of(id);
    out << "c edge " << id << " = (" << e.first << "," << e.second << ")\n";
  }
  out << "p cnf " << enc.formula.var_count << " " << enc.formula.clauses.size()
      << "\n";
  for (const auto& clause : enc.formula.clauses) {
    for (const int lit : clause) out << lit << " ";
    out << "0\n";
  }
}

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

std::vector<char> assignment_from_graph(const VarMap& vm, const Graph& g) {
  if (g.n() != vm.n()) {
    throw SrgError("graph order " + std::to_string(g.n()) +
                   " does not match variable map order " +
                   std::to_string(vm.n()));
  }
  const int n = vm.n();
  std::vector<char> assign(static_cast<std::size_t>(vm.var_count()) + 1, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      assign[vm.edge_id(i, j)] = g.adjacent(i, j) ? 1 : 0;
    }
  }
  switch (vm.aux()) {
    case VarMap::Aux::none:
      break;
    case VarMap::Aux::cherries:
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
          for (int a = 0; a < n; ++a) {
            if (a == i || a == j) continue;
            assign[vm.cherry_id(i, j, a)] =
                (g.adjacent(i, a) && g.adjacent(j, a)) ? 1 : 0;
          }
        }
      }
      break;
    case VarMap::Aux::angles_triangles:
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
          const bool edge = g.adjacent(i, j);
          for (int a = 0; a < n; ++a) {
            if (a == i || a == j) continue;
            const bool arms = g.adjacent(i, a) && g.adjacent(j, a);
            assign[vm.angle_id(i, j, a)] = (arms && !edge) ? 1 : 0;
            assign[vm.triangle_id(i, j, a)] = (arms && edge) ? 1 : 0;
          }
        }
      }
      break;
    case VarMap::Aux::claws: {
      const auto& tuples = vm.claw_tuples();
      for (std::size_t t = 0; t < tuples.size(); ++t) {
        const auto& [v, l] = tuples[t];
        const bool claw = g.adjacent(v, l[0]) && g.adjacent(v, l[1]) &&
                          g.adjacent(v, l[2]) && !g.adjacent(l[0], l[1]) &&
                          !g.adjacent(l[0], l[2]) && !g.adjacent(l[1], l[2]);
        assign[vm.claw_id(static_cast<int>(t))] = claw ? 1 : 0;
      }
      break;
    }
  }
  return assign;
}

bool cnf_satisfied(const CnfFormula& f, const std::vector<char>& assignment) {
  if (assignment.size() < static_cast<std::size_t>(f.var_count) + 1) {
    throw SrgError("assignment too short for formula");
  }
  for (const auto& clause : f.clauses) {
    bool sat = false;
    for (const int lit : clause) {
      const int var = std::abs(lit);
      if ((assignment[var] != 0) == (lit > 0)) {
        sat = true;
        break;
      }
    }
    if (!sat) return false;
  }
  return true;
}

}  // namespace srg
