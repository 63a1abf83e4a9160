// Builtin DPLL (solve + exhaustive enumeration), model decoding, and
// solver config parsing. Subprocess driving lives in pipeline.cpp.

#include "srgkit/solve.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <string>
#include <utility>

namespace srg {

namespace {

// Chronological-backtracking DPLL over counter-based clause state: per
// clause we track how many literals are true and how many unassigned;
// occurrence lists drive unit detection. No clause learning -- this is the
// reference solver for small instances and exhaustive enumeration, not a
// competitive one.
class DpllSearch {
 public:
  DpllSearch(const CnfFormula& f, bool enumerate, std::int64_t decision_limit)
      : nvars_(f.var_count),
        enumerate_(enumerate),
        decision_limit_(decision_limit) {
    if (nvars_ < 0) throw SrgError("negative variable count");
    assign_.assign(static_cast<std::size_t>(nvars_) + 1, 0);
    occ_.assign(2 * (static_cast<std::size_t>(nvars_) + 1), {});
    clauses_.reserve(f.clauses.size());
    for (const auto& raw : f.clauses) {
      std::vector<int> clause = raw;
      for (const int lit : clause) {
        if (lit == 0 || std::abs(lit) > nvars_) {
          throw SrgError("literal " + std::to_string(lit) +
                         " outside the declared variable range");
        }
      }
      std::sort(clause.begin(), clause.end(),
                [](int a, int b) { return std::abs(a) != std::abs(b)
                                        ? std::abs(a) < std::abs(b)
                                        : a < b; });
      clause.erase(std::unique(clause.begin(), clause.end()), clause.end());
      bool tautology = false;
      for (std::size_t i = 0; i + 1 < clause.size(); ++i) {
        if (clause[i] == -clause[i + 1]) tautology = true;
      }
      if (tautology) continue;
      if (clause.empty()) {
        trivially_unsat_ = true;
        continue;
      }
      const int ci = static_cast<int>(clauses_.size());
      for (const int lit : clause) occ_[lit_index(lit)].push_back(ci);
      open_.push_back(static_cast<int>(clause.size()));
      trues_.push_back(0);
      if (clause.size() == 1) units_.push_back(ci);
      clauses_.push_back(std::move(clause));
    }
  }

  SolveStatus solve() {
    if (trivially_unsat_) return SolveStatus::unsat;
    if (!propagate()) return SolveStatus::unsat;
    while (true) {
      if (!enumerate_) {
        pure_literal_pass();
        if (satisfied_ == static_cast<int>(clauses_.size())) {
          record_first();
          return SolveStatus::sat;
        }
      }
      const int v = next_unassigned();
      if (v == 0) {
        if (!enumerate_) {
          record_first();
          return SolveStatus::sat;
        }
        models_.push_back(assign_);
        if (!backtrack()) return SolveStatus::unsat;  // enumeration done
        continue;
      }
      if (++decisions_ > decision_limit_) {
        limit_hit_ = true;
        return SolveStatus::unknown;
      }
      if (!try_assign(v, /*decision=*/true)) {
        if (!backtrack()) return SolveStatus::unsat;
      }
    }
  }

  bool limit_hit() const { return limit_hit_; }
  const Model& first_model() const { return first_; }
  std::vector<Model>& models() { return models_; }

 private:
  static std::size_t lit_index(int lit) {
    return 2 * static_cast<std::size_t>(std::abs(lit)) + (lit < 0 ? 1 : 0);
  }

  // Counter updates for one new assignment; detects conflicts and queues
  // clauses that became unit. Returns false on conflict.
  bool assign_lit(int lit, bool decision) {
    const int var = std::abs(lit);
    const signed char val = lit > 0 ? 1 : -1;
    if (assign_[var] != 0) return assign_[var] == val;
    assign_[var] = val;
    trail_.push_back({var, decision});
    bool ok = true;
    for (const int ci : occ_[lit_index(lit)]) {
      if (trues_[ci]++ == 0) ++satisfied_;
      --open_[ci];
    }
    for (const int ci : occ_[lit_index(-lit)]) {
      --open_[ci];
      if (trues_[ci] == 0) {
        if (open_[ci] == 0) {
          ok = false;
        } else if (open_[ci] == 1) {
          units_.push_back(ci);
        }
      }
    }
    return ok;
  }

  void unassign_top() {
    const int var = trail_.back().var;
    trail_.pop_back();
    const int lit = assign_[var] > 0 ? var : -var;
    for (const int ci : occ_[lit_index(lit)]) {
      if (--trues_[ci] == 0) --satisfied_;
      ++open_[ci];
    }
    for (const int ci : occ_[lit_index(-lit)]) ++open_[ci];
    assign_[var] = 0;
  }

  bool propagate() {
    std::size_t head = 0;
    while (head < units_.size()) {
      const int ci = units_[head++];
      if (trues_[ci] > 0 || open_[ci] != 1) continue;  // stale entry
      int unit_lit = 0;
      for (const int lit : clauses_[ci]) {
        if (assign_[std::abs(lit)] == 0) {
          unit_lit = lit;
          break;
        }
      }
      if (unit_lit == 0) continue;
      if (!assign_lit(unit_lit, false)) {
        units_.clear();
        return false;
      }
    }
    units_.clear();
    return true;
  }

  bool try_assign(int lit, bool decision) {
    if (!assign_lit(lit, decision)) {
      units_.clear();
      return false;
    }
    return propagate();
  }

  // Assigning a literal that only ever occurs positively (or only
  // negatively) in the still-unsatisfied clauses can never hurt. Disabled
  // for enumeration, where it would erase models.
  void pure_literal_pass() {
    while (true) {
      std::vector<unsigned char> polarity(
          static_cast<std::size_t>(nvars_) + 1, 0);
      for (std::size_t ci = 0; ci < clauses_.size(); ++ci) {
        if (trues_[ci] > 0) continue;
        for (const int lit : clauses_[ci]) {
          if (assign_[std::abs(lit)] == 0) {
            polarity[std::abs(lit)] |= lit > 0 ? 1 : 2;
          }
        }
      }
      bool any = false;
      for (int v = 1; v <= nvars_; ++v) {
        if (assign_[v] != 0) continue;
        if (polarity[v] == 1 || polarity[v] == 2) {
          any = true;
          // Cannot conflict: every clause touched positively gains a true
          // literal, and no unsatisfied clause contains the opposite.
          try_assign(polarity[v] == 1 ? v : -v, false);
        }
      }
      if (!any) return;
    }
  }

  int next_unassigned() const {
    for (int v = 1; v <= nvars_; ++v) {
      if (assign_[v] == 0) return v;
    }
    return 0;
  }

  // Undo to the most recent decision and take its false branch (decisions
  // start true-first). The flipped assignment re-enters the trail as a
  // forced entry, so deeper backtracks pass over it.
  bool backtrack() {
    while (true) {
      while (!trail_.empty() && !trail_.back().decision) unassign_top();
      if (trail_.empty()) return false;
      const int var = trail_.back().var;
      unassign_top();
      if (try_assign(-var, false)) return true;
    }
  }

  void record_first() {
    first_ = assign_;
    for (int v = 1; v <= nvars_; ++v) {
      if (first_[v] == 0) first_[v] = -1;  // unassigned is irrelevant: fix false
    }
  }

  struct TrailEntry {
    int var;
    bool decision;
  };

  int nvars_;
  bool enumerate_;
  std::int64_t decision_limit_;
  std::int64_t decisions_ = 0;
  bool limit_hit_ = false;
  bool trivially_unsat_ = false;

  std::vector<std::vector<int>> clauses_;
  std::vector<std::vector<int>> occ_;
  std::vector<int> open_;
  std::vector<int> trues_;
  std::vector<int> units_;
  int satisfied_ = 0;
  std::vector<signed char> assign_;
  std::vector<TrailEntry> trail_;
  Model first_;
  std::vector<Model> models_;
};

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

SolveOutcome builtin_solve(const CnfFormula& f, std::int64_t decision_limit) {
  const auto start = std::chrono::steady_clock::now();
  DpllSearch search(f, /*enumerate=*/false, decision_limit);
  SolveOutcome out;
  out.status = search.solve();
  if (out.status == SolveStatus::sat) out.model = search.first_model();
  if (out.status == SolveStatus::unknown) {
    out.note = "decision limit " + std::to_string(decision_limit) +
               " exceeded";
  }
  out.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return out;
}

std::vector<Model> builtin_enumerate(const CnfFormula& f,
                                     std::int64_t decision_limit) {
  DpllSearch search(f, /*enumerate=*/true, decision_limit);
  search.solve();
  if (search.limit_hit()) {
    throw SrgError("model enumeration hit the decision limit " +
                   std::to_string(decision_limit));
  }
  return std::move(search.models());
}

Graph decode_model(const Model& model, const VarMap& vm) {
  const int n = vm.n();
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const int id = vm.edge_id(i, j);
      if (id >= static_cast<int>(model.size()) || model[id] == 0) {
        throw SrgError("model does not assign edge variable x" +
                       std::to_string(id) + " (pair (" + std::to_string(i) +
                       "," + std::to_string(j) + "))");
      }
      if (model[id] > 0) edges.push_back({i, j});
    }
  }
  return Graph(n, edges);
}

SolverConfig parse_solver_config(std::istream& in) {
  SolverConfig cfg;
  bool have_cmd = false;
  bool have_time = false;
  bool have_dialect = false;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string text = trim(line);
    if (text.empty() || text[0] == '#') continue;
    const std::size_t eq = text.find('=');
    if (eq == std::string::npos) {
      throw SrgError("config line " + std::to_string(lineno) +
                     " is not `key = value`: " + text);
    }
    const std::string key = trim(text.substr(0, eq));
    const std::string value = trim(text.substr(eq + 1));
    if (key == "solver_cmd") {
      cfg.solver_cmd = value;
      have_cmd = true;
    } else if (key == "time_limit_s") {
      try {
        std::size_t used = 0;
        cfg.time_limit_s = std::stod(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
      } catch (const std::exception&) {
        throw SrgError("config line " + std::to_string(lineno) +
                       ": bad time_limit_s value: " + value);
      }
      have_time = true;
    } else if (key == "dialect") {
      if (value == "dimacs-sat") {
        cfg.dialect = SolverConfig::Dialect::dimacs_sat;
      } else if (value == "opb-sat") {
        cfg.dialect = SolverConfig::Dialect::opb_sat;
      } else {
        throw SrgError("config line " + std::to_string(lineno) +
                       ": dialect must be dimacs-sat or opb-sat, got " +
                       value);
      }
      have_dialect = true;
    } else {
      throw SrgError("config line " + std::to_string(lineno) +
                     ": unknown key " + key);
    }
  }
  if (!have_cmd || cfg.solver_cmd.empty()) {
    throw SrgError("config is missing solver_cmd");
  }
  if (!have_time) throw SrgError("config is missing time_limit_s");
  if (!have_dialect) throw SrgError("config is missing dialect");
  if (!(cfg.time_limit_s > 0)) {
    throw SrgError("time_limit_s must be positive");
  }
  return cfg;
}

SolverConfig load_solver_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SrgError("cannot open solver config: " + path);
  return parse_solver_config(in);
}

}  // namespace srg
