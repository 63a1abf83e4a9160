// Pseudo-Boolean encoders (non-linear, linear, relaxed view, claw
// minimization), the OPB writer, and the PB evaluators.

#include <algorithm>
#include <limits>
#include <ostream>
#include <string>
#include <utility>

#include "encode_detail.hpp"
#include "srgkit/encode.hpp"

namespace srg {

namespace {

// Edge id regardless of endpoint order.
int eid(const VarMap& vm, int u, int v) {
  return vm.edge_id(std::min(u, v), std::max(u, v));
}

void add_constraint(PbFormula& f, std::vector<PbTerm> terms, PbRel rel,
                    std::int64_t rhs) {
  f.constraints.push_back(PbConstraint{std::move(terms), rel, rhs});
}

// Preset pairs become single-term equalities +1 x = 1 or +1 x = 0.
void append_preset_constraints(PbFormula& f, const VarMap& vm,
                               const Preset* preset) {
  if (preset == nullptr) return;
  for (const auto& [edge, value] : preset->assignments()) {
    add_constraint(f, {pb_term(1, {vm.edge_id(edge.first, edge.second)})},
                   PbRel::eq, value ? 1 : 0);
  }
}

// One degree equality per vertex: sum of incident edges = k.
void append_degree_constraints(PbFormula& f, const VarMap& vm, int k) {
  const int n = vm.n();
  for (int v = 0; v < n; ++v) {
    std::vector<PbTerm> terms;
    terms.reserve(n - 1);
    for (int u = 0; u < n; ++u) {
      if (u != v) terms.push_back(pb_term(1, {eid(vm, v, u)}));
    }
    add_constraint(f, std::move(terms), PbRel::eq, k);
  }
}

// -lambda e_ij + sum_a e_ij e_ia e_ja = 0: when the edge is present its
// common-neighbor count is exactly lambda; vacuous otherwise.
PbConstraint lambda_count_constraint(const VarMap& vm, int i, int j,
                                     int lambda) {
  PbConstraint c;
  c.rel = PbRel::eq;
  c.rhs = 0;
  const int e = vm.edge_id(i, j);
  if (lambda != 0) c.terms.push_back(pb_term(-lambda, {e}));
  for (int a = 0; a < vm.n(); ++a) {
    if (a == i || a == j) continue;
    c.terms.push_back(pb_term(1, {e, eid(vm, i, a), eid(vm, j, a)}));
  }
  return c;
}

// sum_a e_ia e_ja - sum_a e_ij e_ia e_ja + bound*e_ij (rel) bound: with
// rel = eq this forces exactly `bound` common neighbors on non-edges; with
// rel = le it only caps them. Present edges make it vacuous either way.
PbConstraint common_count_constraint(const VarMap& vm, int i, int j, int bound,
                                     PbRel rel) {
  PbConstraint c;
  c.rel = rel;
  c.rhs = bound;
  const int e = vm.edge_id(i, j);
  for (int a = 0; a < vm.n(); ++a) {
    if (a == i || a == j) continue;
    c.terms.push_back(pb_term(1, {eid(vm, i, a), eid(vm, j, a)}));
  }
  for (int a = 0; a < vm.n(); ++a) {
    if (a == i || a == j) continue;
    c.terms.push_back(pb_term(-1, {e, eid(vm, i, a), eid(vm, j, a)}));
  }
  if (bound != 0) c.terms.push_back(pb_term(bound, {e}));
  return c;
}

std::int64_t terms_value(const std::vector<PbTerm>& terms,
                         const std::vector<char>& assignment) {
  std::int64_t sum = 0;
  for (const PbTerm& t : terms) {
    bool all = true;
    for (int x = 0; x < t.len; ++x) {
      if (assignment[static_cast<std::size_t>(t.vars[x])] == 0) {
        all = false;
        break;
      }
    }
    if (all) sum += t.coef;
  }
  return sum;
}

}  // namespace

PbTerm pb_term(std::int64_t coef, std::initializer_list<int> vars) {
  if (coef == 0) throw SrgError("pseudo-Boolean term with zero coefficient");
  if (coef < std::numeric_limits<std::int32_t>::min() ||
      coef > std::numeric_limits<std::int32_t>::max()) {
    throw SrgError("pseudo-Boolean coefficient out of range: " +
                   std::to_string(coef));
  }
  if (vars.size() < 1 || vars.size() > 3) {
    throw SrgError("pseudo-Boolean term degree must be 1..3, got " +
                   std::to_string(vars.size()));
  }
  PbTerm t;
  t.coef = static_cast<std::int32_t>(coef);
  t.len = static_cast<std::uint8_t>(vars.size());
  int pos = 0;
  for (const int v : vars) t.vars[pos++] = v;
  std::sort(t.vars.begin(), t.vars.begin() + t.len);
  for (int x = 0; x < t.len; ++x) {
    if (t.vars[x] <= 0 || (x > 0 && t.vars[x] == t.vars[x - 1])) {
      throw SrgError("pseudo-Boolean term variables must be positive and "
                     "distinct");
    }
  }
  return t;
}

bool PbFormula::is_linear() const {
  for (const auto& c : constraints) {
    for (const auto& t : c.terms) {
      if (t.len != 1) return false;
    }
  }
  for (const auto& t : objective) {
    if (t.len != 1) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Encoders
// ---------------------------------------------------------------------------

PbEncoding encode_pb_nonlinear(const SrgParams& p, const EncodeOpts& opts) {
  const int n = detail::require_graph_order(p);
  const bool degrees = detail::degrees_included(p, opts);
  detail::check_preset_range(opts.preset, n);
  VarMap vm = VarMap::edges_only(n);
  PbFormula f;
  f.var_count = vm.var_count();
  append_preset_constraints(f, vm, opts.preset);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      f.constraints.push_back(
          lambda_count_constraint(vm, i, j, static_cast<int>(p.lambda)));
      f.constraints.push_back(common_count_constraint(
          vm, i, j, static_cast<int>(p.mu), PbRel::eq));
    }
  }
  if (degrees) append_degree_constraints(f, vm, static_cast<int>(p.k));
  return {std::move(vm), std::move(f)};
}

PbEncoding encode_pb_linear(const SrgParams& p, const EncodeOpts& opts) {
  const int n = detail::require_graph_order(p);
  const int lambda = static_cast<int>(p.lambda);
  const int mu = static_cast<int>(p.mu);
  const bool degrees = detail::degrees_included(p, opts);
  detail::check_preset_range(opts.preset, n);
  VarMap vm = VarMap::with_angles_triangles(n);
  PbFormula f;
  f.var_count = vm.var_count();
  append_preset_constraints(f, vm, opts.preset);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const int e = vm.edge_id(i, j);
      for (int a = 0; a < n; ++a) {
        if (a == i || a == j) continue;
        const int arm1 = eid(vm, i, a);
        const int arm2 = eid(vm, j, a);
        const int ang = vm.angle_id(i, j, a);
        const int tri = vm.triangle_id(i, j, a);
        // Angle: path i-a-j with the chord ij absent.
        add_constraint(f, {pb_term(-1, {ang}), pb_term(-1, {e})}, PbRel::ge,
                       -1);
        add_constraint(f, {pb_term(-1, {ang}), pb_term(1, {arm1})}, PbRel::ge,
                       0);
        add_constraint(f, {pb_term(-1, {ang}), pb_term(1, {arm2})}, PbRel::ge,
                       0);
        add_constraint(f,
                       {pb_term(1, {ang}), pb_term(1, {e}),
                        pb_term(-1, {arm1}), pb_term(-1, {arm2})},
                       PbRel::ge, -1);
        // Triangle: all three sides present.
        add_constraint(f, {pb_term(-1, {tri}), pb_term(1, {e})}, PbRel::ge, 0);
        add_constraint(f, {pb_term(-1, {tri}), pb_term(1, {arm1})}, PbRel::ge,
                       0);
        add_constraint(f, {pb_term(-1, {tri}), pb_term(1, {arm2})}, PbRel::ge,
                       0);
        add_constraint(f,
                       {pb_term(1, {tri}), pb_term(-1, {e}),
                        pb_term(-1, {arm1}), pb_term(-1, {arm2})},
                       PbRel::ge, -2);
      }
      // Count sums: lambda triangles through an edge, mu angles across a
      // non-edge (each side vacuous in the other case, by the caps above).
      PbConstraint lam;
      lam.rel = PbRel::eq;
      lam.rhs = 0;
      if (lambda != 0) lam.terms.push_back(pb_term(-lambda, {e}));
      for (int a = 0; a < n; ++a) {
        if (a != i && a != j) {
          lam.terms.push_back(pb_term(1, {vm.triangle_id(i, j, a)}));
        }
      }
      f.constraints.push_back(std::move(lam));
      PbConstraint mu_sum;
      mu_sum.rel = PbRel::eq;
      mu_sum.rhs = mu;
      if (mu != 0) mu_sum.terms.push_back(pb_term(mu, {e}));
      for (int a = 0; a < n; ++a) {
        if (a != i && a != j) {
          mu_sum.terms.push_back(pb_term(1, {vm.angle_id(i, j, a)}));
        }
      }
      f.constraints.push_back(std::move(mu_sum));
    }
  }
  if (degrees) append_degree_constraints(f, vm, static_cast<int>(p.k));
  return {std::move(vm), std::move(f)};
}

PbEncoding encode_view_system(int n_view, int k_view, int lambda_view,
                              int mu_cap) {
  if (n_view < 3 || n_view > Graph::kMaxVertices) {
    throw SrgError("view order out of range: " + std::to_string(n_view));
  }
  if (k_view <= 0 || k_view >= n_view - 1 || lambda_view < 0 ||
      lambda_view > n_view - 2 || mu_cap < 0) {
    throw SrgError("malformed view parameters (" + std::to_string(n_view) +
                   "," + std::to_string(k_view) + "," +
                   std::to_string(lambda_view) + ",<=" +
                   std::to_string(mu_cap) + ")");
  }
  VarMap vm = VarMap::edges_only(n_view);
  PbFormula f;
  f.var_count = vm.var_count();
  for (int i = 0; i < n_view; ++i) {
    for (int j = i + 1; j < n_view; ++j) {
      f.constraints.push_back(lambda_count_constraint(vm, i, j, lambda_view));
      f.constraints.push_back(
          common_count_constraint(vm, i, j, mu_cap, PbRel::le));
    }
  }
  // With mu only bounded, the pair conditions no longer force regularity,
  // so the degree equalities carry real content here.
  append_degree_constraints(f, vm, k_view);
  return {std::move(vm), std::move(f)};
}

PbEncoding encode_triangular_view() {
  // The 99*14/2 = 693 edges of the degree-14 target partition into 231
  // triangles (lambda = 1: every edge lies in exactly one). Triangles
  // sharing a corner v see each other there: 6 per corner from the other
  // k/2 - 1 = 6 triangles at each of 3 corners (18-regular), and two
  // triangles with a common corner share the remaining 5 at that corner.
  // Disjoint triangles share at most 3 (one per cross pairing, mu = 2
  // limits each); that side is only a bound, not an exact count.
  return encode_view_system(231, 18, 5, 3);
}

PbEncoding encode_maxsat_claw(int k) {
  if (k < 4 || k % 2 != 0) {
    throw SrgError("claw system needs even k >= 4, got k=" +
                   std::to_string(k));
  }
  const std::int64_t order = static_cast<std::int64_t>(k) * k / 2 + 1;
  if (order > Graph::kMaxVertices) {
    throw SrgError("claw system order " + std::to_string(order) +
                   " exceeds the graph cap");
  }
  const int n = static_cast<int>(order);
  const SrgParams p{n, k, 1, 2};
  const Preset pre = symmetry_break_star(p);

  // Claw indicators for every leaf triple inside a center's preset-known
  // neighborhood. Centers in N[0] have all k neighbors fixed by the preset
  // (C(k,3) triples each); labeled vertices know only their two label
  // members, so they contribute none.
  std::vector<ClawTuple> tuples;
  for (int v = 0; v < n; ++v) {
    std::vector<int> known;
    for (int u = 0; u < n; ++u) {
      if (u != v && pre.lookup(v, u).value_or(false)) known.push_back(u);
    }
    const int s = static_cast<int>(known.size());
    for (int a = 0; a < s; ++a) {
      for (int b = a + 1; b < s; ++b) {
        for (int c = b + 1; c < s; ++c) {
          tuples.push_back(ClawTuple{v, {known[a], known[b], known[c]}});
        }
      }
    }
  }
  VarMap vm = VarMap::with_claws(n, std::move(tuples));

  PbFormula f;
  f.var_count = vm.var_count();
  append_preset_constraints(f, vm, &pre);
  append_degree_constraints(f, vm, k);
  // mu = 2 exactly on every pair; no lambda constraint, so sparse
  // neighborhoods stay feasible and show up as claws in the objective.
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      f.constraints.push_back(common_count_constraint(vm, i, j, 2, PbRel::eq));
    }
  }
  const auto& claw_tuples = vm.claw_tuples();
  for (std::size_t t = 0; t < claw_tuples.size(); ++t) {
    const auto& [v, l] = claw_tuples[t];
    const int w = vm.claw_id(static_cast<int>(t));
    const int spokes[3] = {eid(vm, v, l[0]), eid(vm, v, l[1]),
                           eid(vm, v, l[2])};
    const int pairs[3] = {eid(vm, l[0], l[1]), eid(vm, l[0], l[2]),
                          eid(vm, l[1], l[2])};
    // w = 1 requires all three spokes and no leaf pair; the trigger row
    // forces w = 1 exactly when that pattern occurs.
    for (const int s : spokes) {
      add_constraint(f, {pb_term(-1, {w}), pb_term(1, {s})}, PbRel::ge, 0);
    }
    for (const int q : pairs) {
      add_constraint(f, {pb_term(-1, {w}), pb_term(-1, {q})}, PbRel::ge, -1);
    }
    add_constraint(f,
                   {pb_term(1, {w}), pb_term(-1, {spokes[0]}),
                    pb_term(-1, {spokes[1]}), pb_term(-1, {spokes[2]}),
                    pb_term(1, {pairs[0]}), pb_term(1, {pairs[1]}),
                    pb_term(1, {pairs[2]})},
                   PbRel::ge, -2);
  }
  f.has_objective = true;
  f.objective.reserve(claw_tuples.size());
  for (std::size_t t = 0; t < claw_tuples.size(); ++t) {
    f.objective.push_back(pb_term(1, {vm.claw_id(static_cast<int>(t))}));
  }
  return {std::move(vm), std::move(f)};
}

// ---------------------------------------------------------------------------
// OPB writer
// ---------------------------------------------------------------------------

namespace {

void write_term(std::ostream& out, const PbTerm& t, bool negate) {
  const std::int64_t c =
      negate ? -static_cast<std::int64_t>(t.coef) : t.coef;
  if (c >= 0) out << "+";
  out << c;
  for (int x = 0; x < t.len; ++x) out << " x" << t.vars[x];
}

}  // namespace

void write_opb(std::ostream& out, const PbEncoding& enc) {
  const PbFormula& f = enc.formula;
  out << "* #variable= " << f.var_count << " #constraint= "
      << f.constraints.size() << "\n";
  if (f.has_objective) {
    out << "min:";
    for (const PbTerm& t : f.objective) {
      out << " ";
      write_term(out, t, false);
    }
    out << " ;\n";
  }
  for (const auto& c : f.constraints) {
    // <= is not in the OPB constraint grammar; emit it negated as >=.
    const bool negate = c.rel == PbRel::le;
    bool first = true;
    for (const PbTerm& t : c.terms) {
      if (!first) out << " ";
      write_term(out, t, negate);
      first = false;
    }
    out << " " << (c.rel == PbRel::eq ? "=" : ">=") << " "
        << (negate ? -c.rhs : c.rhs) << " ;\n";
  }
}

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

bool pb_satisfied(const PbFormula& f, const std::vector<char>& assignment) {
  if (assignment.size() < static_cast<std::size_t>(f.var_count) + 1) {
    throw SrgError("assignment too short for formula");
  }
  for (const auto& c : f.constraints) {
    const std::int64_t lhs = terms_value(c.terms, assignment);
    switch (c.rel) {
      case PbRel::eq:
        if (lhs != c.rhs) return false;
        break;
      case PbRel::ge:
        if (lhs < c.rhs) return false;
        break;
      case PbRel::le:
        if (lhs > c.rhs) return false;
        break;
    }
  }
  return true;
}

std::int64_t pb_objective_value(const PbFormula& f,
                                const std::vector<char>& assignment) {
  if (!f.has_objective) throw SrgError("formula has no objective");
  if (assignment.size() < static_cast<std::size_t>(f.var_count) + 1) {
    throw SrgError("assignment too short for formula");
  }
  return terms_value(f.objective, assignment);
}

}  // namespace srg
