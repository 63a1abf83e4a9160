// Solver driving: a builtin DPLL for small instances (with exhaustive model
// enumeration for equivalence testing), subprocess plumbing for external
// DIMACS/OPB solvers, model decoding back into graphs, and the
// screen-encode-solve-verify pipeline.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "srgkit/encode.hpp"
#include "srgkit/graph.hpp"
#include "srgkit/params.hpp"
#include "srgkit/verify.hpp"

namespace srg {

enum class SolveStatus { sat, unsat, unknown };

// Truth assignment over variable ids: index = id (slot 0 unused),
// +1 true, -1 false, 0 unassigned.
using Model = std::vector<signed char>;

// How to invoke an external solver.
struct SolverConfig {
  enum class Dialect { dimacs_sat, opb_sat };

  // Command template; every "{input}" is replaced by the formula path
  // (appended as a final argument when the placeholder is absent), then the
  // result is split on whitespace into argv. The special value "builtin"
  // runs the in-process DPLL instead of a subprocess (cnf strategy only;
  // the decision limit applies rather than the time limit).
  std::string solver_cmd;
  double time_limit_s = 0;  // must be > 0
  Dialect dialect = Dialect::dimacs_sat;
};

// Key-value config text, one `key = value` per line; blank lines and lines
// starting with '#' are skipped. Keys: solver_cmd, time_limit_s, dialect
// (dimacs-sat | opb-sat). Unknown keys and missing required keys are
// errors.
SolverConfig parse_solver_config(std::istream& in);
SolverConfig load_solver_config(const std::string& path);

// Environment variable the CLI consults for a default config path.
inline constexpr const char* kSolverConfigEnv = "SRGKIT_SOLVER_CONFIG";

struct SolveOutcome {
  SolveStatus status = SolveStatus::unknown;
  Model model;  // nonempty iff status == sat
  double wall_time_s = 0;
  std::optional<Graph> graph;           // decoded, when a VarMap was in play
  std::optional<VerifyReport> report;   // verification of the decoded graph
  std::string note;        // infeasibility reason / diagnostics, may be empty
  std::string raw_output;  // solver stdout (possibly partial on timeout)
};

// Launches the configured solver on a formula file and parses the
// DIMACS/OPB output conventions: status from the first line starting
// "s " (SATISFIABLE, OPTIMUM FOUND -> sat; UNSATISFIABLE -> unsat; UNKNOWN
// -> unknown), the model from "v " lines (signed variable ids for the
// DIMACS dialect, x<i> / -x<i> tokens for OPB). The process is killed at
// the time limit and the outcome reported unknown with whatever stdout
// arrived. Spawn failures and unparseable output raise SrgError naming the
// offending line.
SolveOutcome run_external(const std::string& formula_path,
                          const SolverConfig& cfg);

// Graph with edge (i, j) iff the model assigns the pair's edge variable
// true. Every edge-block id must be assigned; auxiliary variables are
// ignored.
Graph decode_model(const Model& model, const VarMap& vm);

// DPLL with unit propagation and pure-literal elimination, branching on
// the lowest-id unassigned variable (true first). Exhaustive up to the
// decision limit; exceeding it yields status unknown.
SolveOutcome builtin_solve(const CnfFormula& f,
                           std::int64_t decision_limit = 10'000'000);

// All total satisfying assignments over the formula's declared variables,
// in the deterministic branching order. Pure-literal elimination is
// disabled here (it would drop models). Throws SrgError if the decision
// limit is hit, rather than returning a silent undercount.
std::vector<Model> builtin_enumerate(const CnfFormula& f,
                                     std::int64_t decision_limit = 10'000'000);

enum class Strategy { cnf, pb_nonlinear, pb_linear };

// Full pipeline: feasibility screen, encode, write a temp file, run the
// external solver, decode, re-verify. Infeasible parameters short-circuit
// to unsat with the screening reason in `note`, without invoking any
// solver. A sat answer whose decoded graph fails verification raises
// SrgError (internal error) instead of reporting success. Stage failures
// propagate with a stage label prefix.
SolveOutcome solve_and_verify(const SrgParams& p, Strategy strategy,
                              const SolverConfig& cfg,
                              const EncodeOpts& opts = {});

}  // namespace srg
