// srg: command-line front end for the strongly-regular-graph toolkit.
//
// Subcommands: feasible (parameter screening), construct (known families),
// verify (check a graph file against parameters), encode (write DIMACS/OPB
// formulas), solve (full encode-solve-decode-verify pipeline), pattern
// (local Paley(9) structure analysis), experiment (batch CSV runs).
//
// Exit codes: 0 success / sat / feasible / pattern holds; 1 negative
// outcome (infeasible, verification failure, unsat, refused encoding);
// 2 usage or configuration errors; 3 unknown solver outcome.

#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include <srgkit/encode.hpp>
#include <srgkit/error.hpp>
#include <srgkit/families.hpp>
#include <srgkit/feasible.hpp>
#include <srgkit/golay.hpp>
#include <srgkit/graph.hpp>
#include <srgkit/params.hpp>
#include <srgkit/patterns.hpp>
#include <srgkit/solve.hpp>
#include <srgkit/verify.hpp>

namespace {

using namespace srg;

struct ParamArgs {
  std::int64_t n = 0, k = 0, lambda = 0, mu = 0;
  SrgParams params() const { return {n, k, lambda, mu}; }
};

void add_param_args(CLI::App* cmd, ParamArgs& a) {
  cmd->add_option("n", a.n, "number of vertices")->required();
  cmd->add_option("k", a.k, "degree")->required();
  cmd->add_option("lambda", a.lambda, "common neighbors of adjacent pairs")
      ->required();
  cmd->add_option("mu", a.mu, "common neighbors of non-adjacent pairs")
      ->required();
}

struct StrategyFlags {
  bool cnf = false;
  bool pb_nonlinear = false;
  bool pb_linear = false;

  Strategy pick() const {
    const int chosen = int(cnf) + int(pb_nonlinear) + int(pb_linear);
    if (chosen > 1) {
      throw SrgError("choose exactly one of --cnf, --pb-nonlinear, --pb-linear");
    }
    if (pb_nonlinear) return Strategy::pb_nonlinear;
    if (pb_linear) return Strategy::pb_linear;
    return Strategy::cnf;  // default
  }
};

void add_strategy_flags(CLI::App* cmd, StrategyFlags& s) {
  cmd->add_flag("--cnf", s.cnf, "clause encoding over edge + cherry variables (default)");
  cmd->add_flag("--pb-nonlinear", s.pb_nonlinear,
                "pseudo-Boolean encoding with product terms");
  cmd->add_flag("--pb-linear", s.pb_linear,
                "linearized pseudo-Boolean encoding (angle/triangle variables)");
}

struct PresetFlags {
  bool star_break = false;
  std::int64_t paley_blocks = -1;
  bool force_regularity = false;
};

void add_preset_flags(CLI::App* cmd, PresetFlags& f) {
  cmd->add_flag("--star-break", f.star_break,
                "pin N(0) = {1..k}; in the lambda=1, mu=2 family also the "
                "internal matching and all pair labels");
  cmd->add_option("--paley-blocks", f.paley_blocks,
                  "force the first N blocks of 9 vertices to induce Paley(9)");
  cmd->add_flag("--force-regularity", f.force_regularity,
                "emit degree constraints even where the pair conditions "
                "already force regularity");
}

// The strongest sound star normalization available for these parameters.
Preset star_preset_for(const SrgParams& p) {
  if (p.lambda == 1 && p.mu == 2 && p.k >= 4 && p.k % 2 == 0 &&
      p.n == p.k * p.k / 2 + 1) {
    return symmetry_break_star(p);
  }
  return star_normalization(p);
}

// Merges the requested presets; reports whether any was requested.
bool build_preset(const SrgParams& p, const PresetFlags& f, Preset& pre) {
  bool any = false;
  if (f.star_break) {
    pre = star_preset_for(p);
    any = true;
  }
  if (f.paley_blocks >= 0) {
    const Preset blocks =
        preset_paley9_blocks(static_cast<int>(f.paley_blocks),
                             static_cast<int>(p.n));
    for (const auto& [edge, present] : blocks.assignments()) {
      pre.add(edge.first, edge.second, present);
    }
    any = true;
  }
  return any;
}

std::string default_name(const SrgParams& p, const std::string& ext) {
  std::ostringstream name;
  name << "srg_" << p.n << "_" << p.k << "_" << p.lambda << "_" << p.mu
       << ext;
  return name.str();
}

void write_graph_file(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw SrgError("cannot open " + path + " for writing");
  write_graph(out, g);
  if (!out) throw SrgError("write to " + path + " failed");
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SrgError("cannot open " + path);
  return read_graph(in);
}

const char* pass_fail(bool ok) { return ok ? "pass" : "FAIL"; }

// ---------------------------------------------------------------------------
// feasible

int cmd_feasible(const ParamArgs& args) {
  const FeasibilityReport rep = feasibility_report(args.params());
  std::cout << "parameters    " << rep.params.str() << "\n";
  std::cout << "counting      " << pass_fail(rep.counting_ok) << "\n";
  if (rep.counting_ok) {
    std::cout << "integrality   " << pass_fail(rep.integrality_ok) << "\n";
  }
  if (rep.spectrum) {
    const Spectrum& sp = *rep.spectrum;
    std::cout << "conference    " << (sp.conference ? "yes" : "no") << "\n";
    std::cout << "spectrum      " << sp.str() << "\n";
    std::cout << "  r = " << sp.r.str() << "  (multiplicity " << sp.m_r
              << ")\n";
    std::cout << "  s = " << sp.s.str() << "  (multiplicity " << sp.m_s
              << ")\n";
  }
  if (rep.krein) {
    std::cout << "krein         " << pass_fail(rep.krein_ok) << "  (slack "
              << rep.krein->first_slack.str() << " and "
              << rep.krein->second_slack.str() << ")\n";
  }
  if (rep.feasible) {
    std::cout << "verdict       feasible (no screen rules the set out)\n";
    return 0;
  }
  std::cout << "verdict       infeasible: " << rep.reason << "\n";
  return 1;
}

// ---------------------------------------------------------------------------
// construct

std::int64_t binom2(std::int64_t m) { return m * (m - 1) / 2; }

int cmd_construct(const std::string& family, const std::vector<std::int64_t>& args,
                  std::string output) {
  const auto need = [&](std::size_t count) {
    if (args.size() != count) {
      throw SrgError("family '" + family + "' takes " +
                     std::to_string(count) + " argument(s), got " +
                     std::to_string(args.size()));
    }
  };
  Graph g(1);
  SrgParams p{};
  std::string stem;
  if (family == "paley") {
    need(1);
    const std::int64_t q = args[0];
    g = paley(static_cast<int>(q));
    p = {q, (q - 1) / 2, (q - 5) / 4, (q - 1) / 4};
    stem = "paley" + std::to_string(q);
  } else if (family == "rook") {
    need(1);
    const std::int64_t m = args[0];
    g = rook(static_cast<int>(m));
    p = {m * m, 2 * (m - 1), m - 2, 2};
    stem = "rook" + std::to_string(m);
  } else if (family == "triangular") {
    need(1);
    const std::int64_t m = args[0];
    g = triangular(static_cast<int>(m));
    p = {binom2(m), 2 * (m - 2), m - 2, 4};
    stem = "triangular" + std::to_string(m);
  } else if (family == "kneser") {
    need(2);
    const std::int64_t m = args[0];
    if (args[1] != 2) {
      throw SrgError("kneser graphs are strongly regular only for t = 2");
    }
    g = kneser(static_cast<int>(m), 2);
    p = {binom2(m), binom2(m - 2), binom2(m - 4), binom2(m - 3)};
    stem = "kneser" + std::to_string(m) + "_2";
  } else if (family == "bvls") {
    need(0);
    g = bvls_construct();
    p = {243, 22, 1, 2};
    stem = "bvls";
  } else {
    throw SrgError("unknown family '" + family +
                   "' (expected paley | rook | triangular | kneser | bvls)");
  }

  const VerifyReport rep = verify_srg(g, p);
  if (!rep.srg_ok()) {
    // Should be unreachable for these families; do not write a bad file.
    std::cerr << "srg: constructed graph failed verification against "
              << p.str() << "\n";
    return 1;
  }
  if (output.empty()) output = stem + ".graph";
  write_graph_file(output, g);
  std::cout << "wrote " << output << ": " << g.n() << " vertices, "
            << g.edge_count() << " edges, verified " << p.str() << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// verify

int cmd_verify(const std::string& path, const ParamArgs& args) {
  const Graph g = read_graph_file(path);
  const SrgParams p = args.params();
  const VerifyReport rep = verify_srg(g, p);

  std::cout << "graph         " << path << "  (" << g.n() << " vertices, "
            << g.edge_count() << " edges)\n";
  std::cout << "regular       " << pass_fail(rep.is_regular) << "  degrees {";
  bool first = true;
  for (const auto& [deg, count] : rep.degree_multiset) {
    std::cout << (first ? "" : ", ") << deg << ": " << count;
    first = false;
  }
  std::cout << "}\n";
  std::cout << "lambda        " << pass_fail(rep.lambda_ok);
  if (rep.lambda_violation) {
    std::cout << "  first violation at pair (" << rep.lambda_violation->first
              << "," << rep.lambda_violation->second << ")";
  }
  std::cout << "\n";
  std::cout << "mu            " << pass_fail(rep.mu_ok);
  if (rep.mu_violation) {
    std::cout << "  first violation at pair (" << rep.mu_violation->first
              << "," << rep.mu_violation->second << ")";
  }
  std::cout << "\n";
  std::cout << "connected     " << (rep.is_connected ? "yes" : "no")
            << "  (complement: " << (rep.complement_connected ? "yes" : "no")
            << ")\n";
  std::cout << "matrix check  " << pass_fail(rep.matrix_identity_ok)
            << "  A^2 = kI + lambda A + mu (J - I - A)\n";
  if (rep.srg_ok()) {
    std::cout << "verdict       strongly regular " << p.str() << "\n";
    return 0;
  }
  std::cout << "verdict       not strongly regular " << p.str() << "\n";
  return 1;
}

// ---------------------------------------------------------------------------
// encode

int cmd_encode(const ParamArgs& args, const StrategyFlags& strategy,
               const PresetFlags& preset_flags, std::string output) {
  const SrgParams p = args.params();
  const Strategy st = strategy.pick();

  EncodeOpts opts;
  Preset pre;
  if (build_preset(p, preset_flags, pre)) opts.preset = &pre;
  if (preset_flags.force_regularity) opts.regularity = Regularity::on;

  try {
    if (st == Strategy::cnf) {
      const CnfEncoding enc = encode_cnf(p, opts);
      if (output.empty()) output = default_name(p, ".cnf");
      std::ofstream out(output);
      if (!out) throw SrgError("cannot open " + output + " for writing");
      write_dimacs(out, enc);
      std::cout << "wrote " << output << ": " << enc.vars.var_count()
                << " variables, " << enc.formula.clauses.size()
                << " clauses\n";
    } else {
      const PbEncoding enc = st == Strategy::pb_nonlinear
                                 ? encode_pb_nonlinear(p, opts)
                                 : encode_pb_linear(p, opts);
      if (output.empty()) output = default_name(p, ".opb");
      std::ofstream out(output);
      if (!out) throw SrgError("cannot open " + output + " for writing");
      write_opb(out, enc);
      std::cout << "wrote " << output << ": " << enc.vars.var_count()
                << " variables, " << enc.formula.constraints.size()
                << " constraints\n";
    }
  } catch (const BudgetError& e) {
    std::cerr << "srg: encoding refused: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// solve

SolverConfig resolve_solver_config(const std::string& config_path,
                                   double time_limit) {
  SolverConfig cfg;
  cfg.solver_cmd = "builtin";
  cfg.time_limit_s = 600;
  if (!config_path.empty()) {
    cfg = load_solver_config(config_path);
  } else if (const char* env = std::getenv(kSolverConfigEnv);
             env != nullptr && env[0] != '\0') {
    cfg = load_solver_config(env);
  }
  if (time_limit > 0) cfg.time_limit_s = time_limit;
  return cfg;
}

int cmd_solve(const ParamArgs& args, const StrategyFlags& strategy,
              const PresetFlags& preset_flags, const std::string& config_path,
              double time_limit, std::string output) {
  const SrgParams p = args.params();
  const Strategy st = strategy.pick();

  SolverConfig cfg = resolve_solver_config(config_path, time_limit);
  // The strategy decides the formula language, so it decides the dialect.
  cfg.dialect = st == Strategy::cnf ? SolverConfig::Dialect::dimacs_sat
                                    : SolverConfig::Dialect::opb_sat;

  EncodeOpts opts;
  Preset pre;
  if (build_preset(p, preset_flags, pre)) opts.preset = &pre;
  if (preset_flags.force_regularity) opts.regularity = Regularity::on;

  SolveOutcome out;
  try {
    out = solve_and_verify(p, st, cfg, opts);
  } catch (const BudgetError& e) {
    std::cerr << "srg: encoding refused: " << e.what() << "\n";
    return 2;
  }

  const char* status = out.status == SolveStatus::sat     ? "sat"
                       : out.status == SolveStatus::unsat ? "unsat"
                                                          : "unknown";
  std::cout << "parameters    " << p.str() << "\n";
  std::cout << "status        " << status << "\n";
  {
    std::ostringstream t;
    t.setf(std::ios::fixed);
    t.precision(3);
    t << out.wall_time_s;
    std::cout << "time          " << t.str() << " s\n";
  }
  if (!out.note.empty()) std::cout << "note          " << out.note << "\n";

  if (out.status == SolveStatus::sat) {
    // solve_and_verify only reports sat after re-verification succeeded.
    std::cout << "verified      " << pass_fail(out.report->srg_ok()) << "\n";
    if (output.empty()) output = default_name(p, ".graph");
    write_graph_file(output, *out.graph);
    std::cout << "graph         " << output << "\n";
    return 0;
  }
  if (out.status == SolveStatus::unsat) return 1;
  return 3;
}

// ---------------------------------------------------------------------------
// pattern

int cmd_pattern(const std::string& path) {
  const Graph g = read_graph_file(path);
  std::cout << "graph         " << path << "  (" << g.n() << " vertices, "
            << g.edge_count() << " edges)\n";

  const std::vector<std::vector<int>> subgraphs = find_paley9_subgraphs(g);
  std::cout << "paley9 subgraphs  " << subgraphs.size() << "\n";

  int holds = 0;
  std::optional<int> first_bad;
  std::string first_reason;
  for (int v = 0; v < g.n(); ++v) {
    try {
      const Paley9PatternReport rep = check_paley9_pattern(g, v);
      if (rep.pattern_present) {
        ++holds;
      } else if (!first_bad) {
        first_bad = v;
        std::ostringstream why;
        why << "matching edges (" << rep.failing_edges->first.first << ","
            << rep.failing_edges->first.second << ") and ("
            << rep.failing_edges->second.first << ","
            << rep.failing_edges->second.second
            << ") do not induce Paley(9)";
        first_reason = why.str();
      }
    } catch (const SrgError& e) {
      if (!first_bad) {
        first_bad = v;
        first_reason = e.what();
      }
    }
  }
  std::cout << "pattern       holds at " << holds << " of " << g.n()
            << " vertices\n";
  if (holds == g.n()) {
    std::cout << "verdict       paley9 pattern holds everywhere\n";
    return 0;
  }
  std::cout << "verdict       fails first at vertex " << *first_bad << ": "
            << first_reason << "\n";
  return 1;
}

// ---------------------------------------------------------------------------
// experiment

struct ExperimentRow {
  SrgParams params{};
  Strategy strategy = Strategy::cnf;
  double limit_s = 0;
  int line_number = 0;
};

std::optional<Strategy> strategy_from_name(const std::string& name) {
  if (name == "cnf") return Strategy::cnf;
  if (name == "pb-nonlinear") return Strategy::pb_nonlinear;
  if (name == "pb-linear") return Strategy::pb_linear;
  return std::nullopt;
}

const char* strategy_name(Strategy st) {
  switch (st) {
    case Strategy::cnf: return "cnf";
    case Strategy::pb_nonlinear: return "pb-nonlinear";
    case Strategy::pb_linear: return "pb-linear";
  }
  return "?";
}

std::vector<ExperimentRow> parse_experiment_table(std::istream& in) {
  std::vector<ExperimentRow> rows;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    ExperimentRow row;
    std::string strategy;
    if (!(ls >> row.params.n >> row.params.k >> row.params.lambda >>
          row.params.mu >> strategy >> row.limit_s)) {
      std::cerr << "row " << line_number
                << ": expected `n k lambda mu strategy limit_s`\n";
      continue;
    }
    std::string extra;
    if (ls >> extra) {
      std::cerr << "row " << line_number << ": trailing token '" << extra
                << "'\n";
      continue;
    }
    const auto st = strategy_from_name(strategy);
    if (!st) {
      std::cerr << "row " << line_number << ": unknown strategy '" << strategy
                << "' (expected cnf | pb-nonlinear | pb-linear)\n";
      continue;
    }
    if (!(row.limit_s > 0)) {
      std::cerr << "row " << line_number << ": time limit must be positive\n";
      continue;
    }
    row.strategy = *st;
    row.line_number = line_number;
    rows.push_back(row);
  }
  return rows;
}

int cmd_experiment(const std::string& table_path,
                   const std::string& config_path, int jobs) {
  std::ifstream table(table_path);
  if (!table) throw SrgError("cannot open " + table_path);
  const std::vector<ExperimentRow> rows = parse_experiment_table(table);
  const SolverConfig base = resolve_solver_config(config_path, 0);

  struct RowResult {
    bool ok = false;
    std::string status;
    double time_s = 0;
    std::string error;
  };
  std::vector<RowResult> results(rows.size());

  std::atomic<std::size_t> next{0};
  const auto worker = [&]() {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= rows.size()) return;
      const ExperimentRow& row = rows[i];
      SolverConfig cfg = base;
      cfg.time_limit_s = row.limit_s;
      cfg.dialect = row.strategy == Strategy::cnf
                        ? SolverConfig::Dialect::dimacs_sat
                        : SolverConfig::Dialect::opb_sat;
      try {
        const SolveOutcome out = solve_and_verify(row.params, row.strategy, cfg);
        RowResult& res = results[i];
        res.ok = true;
        res.time_s = out.wall_time_s;
        if (out.note.rfind("infeasible: ", 0) == 0) {
          res.status = "infeasible";
        } else {
          res.status = out.status == SolveStatus::sat     ? "sat"
                       : out.status == SolveStatus::unsat ? "unsat"
                                                          : "unknown";
        }
      } catch (const std::exception& e) {
        results[i].error = e.what();
      }
    }
  };

  const int thread_count =
      std::max(1, std::min<int>(jobs, static_cast<int>(rows.size())));
  std::vector<std::thread> pool;
  for (int t = 0; t < thread_count; ++t) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();

  std::cout << "n,k,lambda,mu,strategy,status,time_s\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const ExperimentRow& row = rows[i];
    if (!results[i].ok) {
      std::cerr << "row " << row.line_number << ": " << results[i].error
                << "\n";
      continue;
    }
    char time_text[64];
    std::snprintf(time_text, sizeof(time_text), "%.3f", results[i].time_s);
    std::cout << row.params.n << "," << row.params.k << "," << row.params.lambda
              << "," << row.params.mu << "," << strategy_name(row.strategy)
              << "," << results[i].status << "," << time_text << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"strongly regular graph toolkit"};
  app.require_subcommand(1);
  int rc = 0;

  ParamArgs feas_args;
  CLI::App* feasible =
      app.add_subcommand("feasible", "screen a parameter set (counting, "
                                     "integrality, Krein)");
  add_param_args(feasible, feas_args);
  feasible->callback([&]() { rc = cmd_feasible(feas_args); });

  std::string construct_family;
  std::vector<std::int64_t> construct_args;
  std::string construct_output;
  CLI::App* construct =
      app.add_subcommand("construct", "build a known family member and "
                                      "write its graph file");
  construct->add_option("family", construct_family,
                        "paley | rook | triangular | kneser | bvls")
      ->required();
  construct->add_option("args", construct_args, "family parameters");
  construct->add_option("-o,--output", construct_output,
                        "output path (default <family><args>.graph)");
  construct->callback([&]() {
    rc = cmd_construct(construct_family, construct_args, construct_output);
  });

  std::string verify_path;
  ParamArgs verify_args;
  CLI::App* verify =
      app.add_subcommand("verify", "check a graph file against parameters");
  verify->add_option("file", verify_path, "graph file")->required();
  add_param_args(verify, verify_args);
  verify->callback([&]() { rc = cmd_verify(verify_path, verify_args); });

  ParamArgs encode_args;
  StrategyFlags encode_strategy;
  PresetFlags encode_presets;
  std::string encode_output;
  CLI::App* encode =
      app.add_subcommand("encode", "write a DIMACS or OPB formula file");
  add_param_args(encode, encode_args);
  add_strategy_flags(encode, encode_strategy);
  add_preset_flags(encode, encode_presets);
  encode->add_option("-o,--output", encode_output,
                     "output path (default srg_<n>_<k>_<lambda>_<mu>.cnf/.opb)");
  encode->callback([&]() {
    rc = cmd_encode(encode_args, encode_strategy, encode_presets,
                    encode_output);
  });

  ParamArgs solve_args;
  StrategyFlags solve_strategy;
  PresetFlags solve_presets;
  std::string solve_config;
  double solve_time_limit = 0;
  std::string solve_output;
  CLI::App* solve =
      app.add_subcommand("solve", "encode, run a solver, decode and "
                                  "re-verify; sat writes a graph file");
  add_param_args(solve, solve_args);
  add_strategy_flags(solve, solve_strategy);
  add_preset_flags(solve, solve_presets);
  solve->add_option("--solver-config", solve_config,
                    "solver config file (default $SRGKIT_SOLVER_CONFIG, else "
                    "the builtin DPLL)");
  solve->add_option("--time-limit", solve_time_limit,
                    "override the config time limit (seconds)");
  solve->add_option("-o,--output", solve_output,
                    "graph output path on sat (default "
                    "srg_<n>_<k>_<lambda>_<mu>.graph)");
  solve->callback([&]() {
    rc = cmd_solve(solve_args, solve_strategy, solve_presets, solve_config,
                   solve_time_limit, solve_output);
  });

  std::string pattern_path;
  CLI::App* pattern =
      app.add_subcommand("pattern", "count induced Paley(9) subgraphs and "
                                    "check the local pattern at every vertex");
  pattern->add_option("file", pattern_path, "graph file")->required();
  pattern->callback([&]() { rc = cmd_pattern(pattern_path); });

  std::string experiment_table;
  std::string experiment_config;
  int experiment_jobs = 1;
  CLI::App* experiment =
      app.add_subcommand("experiment", "run a table of solve jobs and emit "
                                       "CSV (n,k,lambda,mu,strategy,status,"
                                       "time_s)");
  experiment->add_option("table", experiment_table,
                         "rows `n k lambda mu strategy limit_s`, '#' comments")
      ->required();
  experiment->add_option("--solver-config", experiment_config,
                         "solver config file (default $SRGKIT_SOLVER_CONFIG, "
                         "else the builtin DPLL)");
  experiment->add_option("--jobs", experiment_jobs,
                         "run up to N rows concurrently")
      ->check(CLI::PositiveNumber);
  experiment->callback([&]() {
    rc = cmd_experiment(experiment_table, experiment_config, experiment_jobs);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // --help exits 0; parse errors exit 2
  } catch (const std::exception& e) {
    std::cerr << "srg: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
