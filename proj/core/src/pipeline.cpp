// External solver driving (fork/exec with a wall-clock kill) and the
// screen-encode-solve-verify pipeline.

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/types.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cctype>
#include <cerrno>
#include <chrono>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "srgkit/error.hpp"
#include "srgkit/feasible.hpp"
#include "srgkit/solve.hpp"

namespace srg {

namespace {

std::vector<std::string> build_argv(const std::string& solver_cmd,
                                    const std::string& formula_path) {
  std::string cmd = solver_cmd;
  bool substituted = false;
  std::size_t pos = 0;
  while ((pos = cmd.find("{input}", pos)) != std::string::npos) {
    cmd.replace(pos, 7, formula_path);
    pos += formula_path.size();
    substituted = true;
  }
  if (!substituted) cmd += " " + formula_path;
  std::istringstream ss(cmd);
  std::vector<std::string> args{std::istream_iterator<std::string>(ss),
                                std::istream_iterator<std::string>()};
  if (args.empty()) throw SrgError("solver command is empty");
  return args;
}

void set_model_literal(Model& model, int id, bool value,
                       const std::string& line) {
  if (id <= 0) {
    throw SrgError("bad variable id in solver model line: " + line);
  }
  if (static_cast<std::size_t>(id) >= model.size()) {
    model.resize(static_cast<std::size_t>(id) + 1, 0);
  }
  model[id] = value ? 1 : -1;
}

void parse_value_line(const std::string& line, SolverConfig::Dialect dialect,
                      Model& model) {
  std::istringstream ss(line.substr(2));
  std::string tok;
  while (ss >> tok) {
    if (dialect == SolverConfig::Dialect::dimacs_sat) {
      try {
        std::size_t used = 0;
        const int lit = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        if (lit == 0) continue;  // end-of-model marker
        set_model_literal(model, std::abs(lit), lit > 0, line);
      } catch (const std::exception&) {
        throw SrgError("unparseable token '" + tok +
                       "' in solver model line: " + line);
      }
    } else {
      std::string body = tok;
      bool value = true;
      if (!body.empty() && body[0] == '-') {
        value = false;
        body = body.substr(1);
      }
      if (body.size() < 2 || body[0] != 'x') {
        throw SrgError("unparseable token '" + tok +
                       "' in solver model line: " + line);
      }
      try {
        std::size_t used = 0;
        const int id = std::stoi(body.substr(1), &used);
        if (used != body.size() - 1) throw std::invalid_argument(tok);
        set_model_literal(model, id, value, line);
      } catch (const std::exception&) {
        throw SrgError("unparseable token '" + tok +
                       "' in solver model line: " + line);
      }
    }
  }
}

std::string rstrip(const std::string& s) {
  std::size_t e = s.size();
  while (e > 0 && (s[e - 1] == '\r' || s[e - 1] == ' ' || s[e - 1] == '\t')) {
    --e;
  }
  return s.substr(0, e);
}

// Temp file created via mkstemp, removed on scope exit.
struct TempFile {
  std::string path;

  TempFile() {
    const char* dir = std::getenv("TMPDIR");
    std::string tmpl =
        std::string(dir && *dir ? dir : "/tmp") + "/srgkit-XXXXXX";
    std::vector<char> buf(tmpl.begin(), tmpl.end());
    buf.push_back('\0');
    const int fd = mkstemp(buf.data());
    if (fd < 0) {
      throw SrgError(std::string("cannot create temp file: ") +
                     std::strerror(errno));
    }
    close(fd);
    path.assign(buf.data());
  }
  ~TempFile() { unlink(path.c_str()); }
  TempFile(const TempFile&) = delete;
  TempFile& operator=(const TempFile&) = delete;
};

std::string format_seconds(double s) {
  std::ostringstream ss;
  ss << s;
  return ss.str();
}

}  // namespace

SolveOutcome run_external(const std::string& formula_path,
                          const SolverConfig& cfg) {
  if (!(cfg.time_limit_s > 0)) {
    throw SrgError("time_limit_s must be positive");
  }
  const std::vector<std::string> args = build_argv(cfg.solver_cmd,
                                                   formula_path);

  int fds[2];
  if (pipe(fds) != 0) {
    throw SrgError(std::string("pipe failed: ") + std::strerror(errno));
  }
  const auto start = std::chrono::steady_clock::now();
  const pid_t pid = fork();
  if (pid < 0) {
    close(fds[0]);
    close(fds[1]);
    throw SrgError(std::string("fork failed: ") + std::strerror(errno));
  }
  if (pid == 0) {
    // Child: own process group (so a timeout kill reaches grandchildren),
    // stdout+stderr into the pipe.
    setpgid(0, 0);
    dup2(fds[1], STDOUT_FILENO);
    dup2(fds[1], STDERR_FILENO);
    close(fds[0]);
    close(fds[1]);
    std::vector<char*> argv;
    argv.reserve(args.size() + 1);
    for (const auto& a : args) argv.push_back(const_cast<char*>(a.c_str()));
    argv.push_back(nullptr);
    execvp(argv[0], argv.data());
    _exit(127);
  }
  setpgid(pid, pid);  // mirror the child's call to avoid a pgid race
  close(fds[1]);

  const auto deadline =
      start + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                  std::chrono::duration<double>(cfg.time_limit_s));
  std::string raw;
  bool timed_out = false;
  char buf[4096];
  while (true) {
    const auto remaining = deadline - std::chrono::steady_clock::now();
    if (remaining.count() <= 0) {
      timed_out = true;
      break;
    }
    const auto remaining_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(remaining)
            .count() +
        1;
    struct pollfd pfd{fds[0], POLLIN, 0};
    const int rc = poll(&pfd, 1,
                        static_cast<int>(std::min<long long>(remaining_ms,
                                                             1000)));
    if (rc < 0) {
      if (errno == EINTR) continue;
      break;
    }
    if (rc == 0) continue;  // poll slice elapsed; re-check the deadline
    const ssize_t got = read(fds[0], buf, sizeof buf);
    if (got <= 0) break;  // EOF: the child closed its end
    raw.append(buf, static_cast<std::size_t>(got));
  }

  if (timed_out) {
    kill(-pid, SIGKILL);
    fcntl(fds[0], F_SETFL, O_NONBLOCK);
    ssize_t got;
    while ((got = read(fds[0], buf, sizeof buf)) > 0) {
      raw.append(buf, static_cast<std::size_t>(got));
    }
  }
  close(fds[0]);
  int wait_status = 0;
  waitpid(pid, &wait_status, 0);

  SolveOutcome out;
  out.raw_output = raw;
  out.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  if (timed_out) {
    out.status = SolveStatus::unknown;
    out.note = "time limit of " + format_seconds(cfg.time_limit_s) +
               "s reached; solver killed";
    return out;
  }
  if (WIFEXITED(wait_status) && WEXITSTATUS(wait_status) == 127 &&
      raw.empty()) {
    throw SrgError("solver command failed to start: " + args[0]);
  }

  std::optional<SolveStatus> status;
  Model model;
  std::istringstream lines(raw);
  std::string line;
  while (std::getline(lines, line)) {
    line = rstrip(line);
    if (line.rfind("s ", 0) == 0) {
      if (status.has_value()) continue;  // only the first status line counts
      const std::string verdict = line.substr(2);
      if (verdict == "SATISFIABLE" || verdict == "OPTIMUM FOUND") {
        status = SolveStatus::sat;
      } else if (verdict == "UNSATISFIABLE") {
        status = SolveStatus::unsat;
      } else if (verdict == "UNKNOWN") {
        status = SolveStatus::unknown;
      } else {
        throw SrgError("unrecognized solver status line: " + line);
      }
    } else if (line.rfind("v ", 0) == 0) {
      parse_value_line(line, cfg.dialect, model);
    }
  }
  if (!status.has_value()) {
    throw SrgError(
        "solver output has no status line (expected a line starting with"
        " \"s \")");
  }
  out.status = *status;
  if (out.status == SolveStatus::sat) out.model = std::move(model);
  return out;
}

SolveOutcome solve_and_verify(const SrgParams& p, Strategy strategy,
                              const SolverConfig& cfg,
                              const EncodeOpts& opts) {
  const FeasibilityReport screen = feasibility_report(p);
  if (!screen.feasible) {
    SolveOutcome out;
    out.status = SolveStatus::unsat;
    out.note = "infeasible: " + screen.reason;
    return out;
  }

  const bool want_cnf = strategy == Strategy::cnf;
  if (want_cnf != (cfg.dialect == SolverConfig::Dialect::dimacs_sat)) {
    throw SrgError(want_cnf
                       ? "strategy cnf requires the dimacs-sat dialect"
                       : "pseudo-Boolean strategies require the opb-sat"
                         " dialect");
  }

  std::optional<CnfEncoding> cnf_enc;
  std::optional<PbEncoding> pb_enc;
  try {
    switch (strategy) {
      case Strategy::cnf:
        cnf_enc = encode_cnf(p, opts);
        break;
      case Strategy::pb_nonlinear:
        pb_enc = encode_pb_nonlinear(p, opts);
        break;
      case Strategy::pb_linear:
        pb_enc = encode_pb_linear(p, opts);
        break;
    }
  } catch (const BudgetError&) {
    throw;  // keeps the required/budget clause counts intact
  } catch (const SrgError& e) {
    throw SrgError("encode: " + std::string(e.what()));
  }

  SolveOutcome out;
  if (cfg.solver_cmd == "builtin") {
    if (!cnf_enc.has_value()) {
      throw SrgError("the builtin solver only supports the cnf strategy");
    }
    out = builtin_solve(cnf_enc->formula);
  } else {
    TempFile tmp;
    {
      std::ofstream file(tmp.path);
      if (!file) throw SrgError("cannot open temp file: " + tmp.path);
      if (cnf_enc.has_value()) {
        write_dimacs(file, *cnf_enc);
      } else {
        write_opb(file, *pb_enc);
      }
      file.flush();
      if (!file) throw SrgError("short write to temp file: " + tmp.path);
    }
    try {
      out = run_external(tmp.path, cfg);
    } catch (const SrgError& e) {
      throw SrgError("solve: " + std::string(e.what()));
    }
  }
  if (out.status != SolveStatus::sat) return out;

  const VarMap& vm = cnf_enc.has_value() ? cnf_enc->vars : pb_enc->vars;
  try {
    out.graph = decode_model(out.model, vm);
  } catch (const SrgError& e) {
    throw SrgError("decode: " + std::string(e.what()));
  }
  const std::vector<char> assignment = assignment_from_graph(vm, *out.graph);
  const bool formula_ok =
      cnf_enc.has_value() ? cnf_satisfied(cnf_enc->formula, assignment)
                          : pb_satisfied(pb_enc->formula, assignment);
  if (!formula_ok) {
    throw SrgError(
        "internal error: decoded graph violates the encoded formula");
  }
  out.report = verify_srg(*out.graph, p);
  if (!out.report->srg_ok()) {
    throw SrgError(
        "internal error: solver reported sat but the decoded graph fails"
        " verification");
  }
  return out;
}

}  // namespace srg
