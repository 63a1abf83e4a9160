// pbsat: a small conflict-driven SAT / pseudo-Boolean solver.
//
// Input (autodetected): DIMACS CNF ("p cnf ..."), or OPB where a line is
//   <coef> <var>... [<coef> <var>...] (>=|<=|=) <rhs> ;
// and a term with several x<i> tokens is a product. Products are reduced
// to fresh AND variables; linear constraints are handled natively by
// counting, with clause learning on top (reasons extracted as clauses).
// An objective line ("min: ... ;") is parsed and ignored: this solver
// decides satisfiability only.
//
// Output follows the usual conventions: one "s SATISFIABLE" /
// "s UNSATISFIABLE" line, then "v " model lines (signed ids for DIMACS,
// x<i> tokens for OPB, original variables only).

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <queue>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace {

using std::int64_t;

// Literals are ±var with vars 1-based; idx() maps them onto [0, 2n).
inline int var_of(int lit) { return lit > 0 ? lit : -lit; }
inline std::size_t idx(int lit) {
  return 2 * static_cast<std::size_t>(var_of(lit)) + (lit < 0 ? 1 : 0);
}

struct Clause {
  std::vector<int> lits;
  bool learned = false;
  bool inert = false;  // tautology or retired learned clause: not watched
};

// Normalized pseudo-Boolean constraint: sum of coef * [lit true] >= degree
// with every coef positive.
struct PbConstraint {
  std::vector<int64_t> coefs;
  std::vector<int> lits;
  int64_t degree = 0;
  int64_t nonfalse = 0;  // sum of coefs over literals not currently false
};

struct Parsed {
  int nvars = 0;           // variables including product auxiliaries
  int nvars_original = 0;  // variables of the input file
  bool opb = false;
  bool trivially_unsat = false;
  std::vector<Clause> clauses;
  std::vector<PbConstraint> pbs;
};

[[noreturn]] void input_error(const std::string& msg) {
  std::cerr << "pbsat: " << msg << "\n";
  std::exit(1);
}

// ---------------------------------------------------------------------------
// Parsing

void parse_dimacs(std::istream& in, Parsed& out) {
  std::string tok;
  bool have_header = false;
  int declared_clauses = 0;
  std::vector<int> current;
  while (in >> tok) {
    if (tok[0] == 'c' || tok[0] == '%') {
      std::string rest;
      std::getline(in, rest);
      continue;
    }
    if (tok == "p") {
      std::string fmt;
      if (!(in >> fmt >> out.nvars >> declared_clauses) || fmt != "cnf") {
        input_error("bad DIMACS header");
      }
      have_header = true;
      continue;
    }
    int lit = 0;
    try {
      std::size_t used = 0;
      lit = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      input_error("unexpected token '" + tok + "'");
    }
    if (!have_header) input_error("literal before the DIMACS header");
    if (lit == 0) {
      out.clauses.push_back({current, false, false});
      current.clear();
    } else {
      if (var_of(lit) > out.nvars) {
        input_error("literal " + tok + " exceeds declared variable count");
      }
      current.push_back(lit);
    }
  }
  if (!have_header) input_error("missing DIMACS header");
  if (!current.empty()) out.clauses.push_back({current, false, false});
  out.nvars_original = out.nvars;
}

int parse_x_token(const std::string& tok) {
  if (tok.size() < 2 || tok[0] != 'x') return 0;
  for (std::size_t i = 1; i < tok.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(tok[i]))) return 0;
  }
  const long v = std::strtol(tok.c_str() + 1, nullptr, 10);
  if (v <= 0) return 0;
  return static_cast<int>(v);
}

bool parse_int64(const std::string& tok, int64_t& value) {
  if (tok.empty()) return false;
  std::size_t i = (tok[0] == '+' || tok[0] == '-') ? 1 : 0;
  if (i == tok.size()) return false;
  for (; i < tok.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(tok[i]))) return false;
  }
  value = std::strtoll(tok.c_str(), nullptr, 10);
  return true;
}

// Product terms become AND auxiliaries; each distinct sorted member set
// gets one auxiliary and its defining clauses.
class ProductTable {
 public:
  explicit ProductTable(Parsed& out) : out_(out) {}

  int variable_for(std::vector<int> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    if (members.size() == 1) return members[0];
    const auto it = table_.find(members);
    if (it != table_.end()) return it->second;
    const int aux = ++out_.nvars;
    table_.emplace(members, aux);
    std::vector<int> closing{aux};
    for (const int m : members) {
      out_.clauses.push_back({{-aux, m}, false, false});
      closing.push_back(-m);
    }
    out_.clauses.push_back({closing, false, false});
    return aux;
  }

 private:
  Parsed& out_;
  std::map<std::vector<int>, int> table_;
};

// Turns sum coef*lit >= degree into normalized positive-coefficient form
// and stores it (as a clause when every single literal would satisfy it).
void add_ge_constraint(Parsed& out, std::vector<std::pair<int64_t, int>> terms,
                       int64_t degree) {
  // Merge repeated literals and fold negations into coefficient signs:
  // coef * (not x) contributes -coef on x and lowers the degree by coef.
  std::map<int, int64_t> by_var;
  for (const auto& [coef, lit] : terms) {
    if (lit > 0) {
      by_var[lit] += coef;
    } else {
      by_var[-lit] -= coef;
      degree -= coef;
    }
  }
  PbConstraint c;
  for (const auto& [var, coef] : by_var) {
    if (coef == 0) continue;
    if (coef > 0) {
      c.coefs.push_back(coef);
      c.lits.push_back(var);
    } else {
      c.coefs.push_back(-coef);
      c.lits.push_back(-var);
      degree += -coef;
    }
  }
  if (degree <= 0) return;  // trivially satisfied
  int64_t total = 0;
  for (int64_t& coef : c.coefs) {
    coef = std::min(coef, degree);  // saturation keeps numbers small
    total += coef;
  }
  if (total < degree) {
    out.trivially_unsat = true;
    return;
  }
  c.degree = degree;
  bool clause_like = true;
  for (const int64_t coef : c.coefs) clause_like &= coef >= degree;
  if (clause_like) {
    out.clauses.push_back({c.lits, false, false});
    return;
  }
  out.pbs.push_back(std::move(c));
}

void parse_opb(std::istream& in, Parsed& out) {
  ProductTable products(out);
  std::vector<std::string> toks;
  std::string line;
  int declared_vars = 0;
  while (std::getline(in, line)) {
    if (!line.empty() && line[0] == '*') {
      std::istringstream hs(line);
      std::string star, key;
      hs >> star >> key;
      if (key == "#variable=") hs >> declared_vars;
      continue;
    }
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) toks.push_back(tok);
  }

  std::size_t pos = 0;
  const auto peek = [&]() -> const std::string& {
    static const std::string kEnd;
    return pos < toks.size() ? toks[pos] : kEnd;
  };

  out.nvars = declared_vars;
  const auto see_var = [&](int v) {
    if (v > out.nvars) out.nvars = v;
  };

  while (pos < toks.size()) {
    const bool objective = peek() == "min:";
    if (objective) ++pos;
    std::vector<std::pair<int64_t, int>> terms;
    std::string rel;
    int64_t rhs = 0;
    while (true) {
      const std::string& t = peek();
      if (t.empty()) input_error("constraint not terminated by ';'");
      if (t == ";") {
        ++pos;
        if (!objective) input_error("constraint lacks a relation");
        break;
      }
      if (t == ">=" || t == "<=" || t == "=") {
        if (objective) input_error("relation inside the objective");
        rel = t;
        ++pos;
        if (!parse_int64(peek(), rhs)) {
          input_error("bad right-hand side '" + peek() + "'");
        }
        ++pos;
        if (peek() != ";") input_error("missing ';' after constraint");
        ++pos;
        break;
      }
      int64_t coef = 0;
      if (!parse_int64(t, coef)) input_error("bad coefficient '" + t + "'");
      ++pos;
      std::vector<int> members;
      while (true) {
        const int v = parse_x_token(peek());
        if (v == 0) break;
        members.push_back(v);
        see_var(v);
        ++pos;
      }
      if (members.empty()) input_error("coefficient without a variable");
      if (!objective) {
        terms.push_back({coef, products.variable_for(std::move(members))});
      }
    }
    if (objective) continue;
    if (rel == ">=" || rel == "=") add_ge_constraint(out, terms, rhs);
    if (rel == "<=" || rel == "=") {
      std::vector<std::pair<int64_t, int>> neg;
      neg.reserve(terms.size());
      for (const auto& [coef, lit] : terms) neg.push_back({-coef, lit});
      add_ge_constraint(out, std::move(neg), -rhs);
    }
  }
  out.nvars_original = declared_vars > 0 ? declared_vars : out.nvars;
  out.opb = true;
}

// ---------------------------------------------------------------------------
// Solver: CDCL with two watched literals for clauses, counter-based
// propagation for PB constraints, eager clause reasons, first-UIP
// learning, VSIDS decisions with phase saving, and Luby restarts.

std::int64_t luby(std::int64_t i) {
  while (true) {
    std::int64_t k = 1;
    while ((std::int64_t{1} << k) - 1 < i) ++k;
    if ((std::int64_t{1} << k) - 1 == i) return std::int64_t{1} << (k - 1);
    i -= (std::int64_t{1} << (k - 1)) - 1;
  }
}

class Solver {
 public:
  explicit Solver(Parsed&& in)
      : nvars_(in.nvars),
        clauses_(std::move(in.clauses)),
        pbs_(std::move(in.pbs)) {
    val_.assign(static_cast<std::size_t>(nvars_) + 1, 0);
    level_.assign(static_cast<std::size_t>(nvars_) + 1, 0);
    reason_.assign(static_cast<std::size_t>(nvars_) + 1, {});
    activity_.assign(static_cast<std::size_t>(nvars_) + 1, 0.0);
    // Default phase true: on graph-existence instances this amounts to
    // greedily adding edges in id order, which meshes well with the
    // counting constraints; phase saving takes over after conflicts.
    phase_.assign(static_cast<std::size_t>(nvars_) + 1, 1);
    seen_.assign(static_cast<std::size_t>(nvars_) + 1, 0);
    watches_.assign(2 * (static_cast<std::size_t>(nvars_) + 1), {});
    pb_occ_.assign(2 * (static_cast<std::size_t>(nvars_) + 1), {});
    ok_ = !in.trivially_unsat;

    // PB counters and occurrences first: clause attachment may already
    // enqueue unit literals, and enqueue updates the counters.
    for (std::size_t pi = 0; pi < pbs_.size(); ++pi) {
      PbConstraint& c = pbs_[pi];
      c.nonfalse = 0;
      for (std::size_t t = 0; t < c.lits.size(); ++t) {
        c.nonfalse += c.coefs[t];
        pb_occ_[idx(-c.lits[t])].push_back(
            {static_cast<int>(pi), static_cast<int>(t)});
      }
    }
    for (std::size_t ci = 0; ci < clauses_.size() && ok_; ++ci) {
      ok_ = attach_clause(static_cast<int>(ci));
    }
  }

  bool solve() {
    if (!ok_) return false;
    for (int v = 1; v <= nvars_; ++v) heap_push(v);
    if (!pb_initial_pass()) return false;
    std::int64_t until_restart = 128 * luby(1);
    while (true) {
      const int conflict = propagate();
      if (conflict != kNoConflict) {
        ++conflicts_;
        if (current_level() == 0) return false;
        analyze_and_learn(conflict);
        if (--until_restart <= 0) {
          backtrack(0);
          ++restarts_;
          until_restart = 128 * luby(restarts_ + 1);
          reduce_learned();
        }
        continue;
      }
      const int var = pick_branch_variable();
      if (var == 0) return true;  // total assignment, no conflict
      trail_lim_.push_back(static_cast<int>(trail_.size()));
      enqueue(phase_[var] ? var : -var, {});
    }
  }

  bool value_of(int var) const { return val_[var] > 0; }

 private:
  static constexpr int kNoConflict = -1;
  static constexpr int kPbConflict = -2;

  int current_level() const { return static_cast<int>(trail_lim_.size()); }

  // -1 false, 0 unassigned, +1 true under the current assignment.
  int val_of(int lit) const {
    const int v = val_[var_of(lit)];
    return lit > 0 ? v : -v;
  }

  bool attach_clause(int ci) {
    Clause& c = clauses_[ci];
    std::sort(c.lits.begin(), c.lits.end(), [](int a, int b) {
      return var_of(a) != var_of(b) ? var_of(a) < var_of(b) : a < b;
    });
    c.lits.erase(std::unique(c.lits.begin(), c.lits.end()), c.lits.end());
    for (std::size_t i = 0; i + 1 < c.lits.size(); ++i) {
      if (c.lits[i] == -c.lits[i + 1]) {
        c.inert = true;
        return true;
      }
    }
    if (c.lits.empty()) return false;
    if (c.lits.size() == 1) {
      const int lit = c.lits[0];
      c.inert = true;  // enforced through the trail, not the watch lists
      if (val_of(lit) < 0) return false;
      if (val_of(lit) == 0) enqueue(lit, {lit});
      return true;
    }
    watches_[idx(c.lits[0])].push_back(ci);
    watches_[idx(c.lits[1])].push_back(ci);
    return true;
  }

  void enqueue(int lit, std::vector<int> reason) {
    const int var = var_of(lit);
    val_[var] = lit > 0 ? 1 : -1;
    level_[var] = current_level();
    reason_[var] = std::move(reason);
    trail_.push_back(lit);
    // Constraints containing -lit just lost that literal's mass.
    for (const auto& [pi, ti] : pb_occ_[idx(lit)]) {
      pbs_[pi].nonfalse -= pbs_[pi].coefs[ti];
    }
  }

  void backtrack(int target_level) {
    if (current_level() <= target_level) return;
    const int limit = trail_lim_[target_level];
    for (int i = static_cast<int>(trail_.size()) - 1; i >= limit; --i) {
      const int lit = trail_[i];
      const int var = var_of(lit);
      phase_[var] = val_[var] > 0;
      val_[var] = 0;
      reason_[var].clear();
      for (const auto& [pi, ti] : pb_occ_[idx(lit)]) {
        pbs_[pi].nonfalse += pbs_[pi].coefs[ti];
      }
      heap_push(var);
    }
    trail_.resize(static_cast<std::size_t>(limit));
    trail_lim_.resize(static_cast<std::size_t>(target_level));
    qhead_ = static_cast<int>(trail_.size());
  }

  // Reason clause for a literal forced by a PB constraint: the literal
  // itself plus every constraint literal currently false.
  std::vector<int> pb_reason(const PbConstraint& c, int forced_lit) const {
    std::vector<int> reason{forced_lit};
    for (const int lit : c.lits) {
      if (lit != forced_lit && val_of(lit) < 0) reason.push_back(lit);
    }
    return reason;
  }

  // Re-examines one PB constraint after its nonfalse mass dropped.
  // Returns false on conflict, filling conflict_clause_.
  bool pb_update(int pi) {
    PbConstraint& c = pbs_[pi];
    const int64_t slack = c.nonfalse - c.degree;
    if (slack < 0) {
      conflict_clause_.clear();
      for (const int lit : c.lits) {
        if (val_of(lit) < 0) conflict_clause_.push_back(lit);
      }
      return false;
    }
    for (std::size_t t = 0; t < c.lits.size(); ++t) {
      if (c.coefs[t] > slack && val_of(c.lits[t]) == 0) {
        enqueue(c.lits[t], pb_reason(c, c.lits[t]));
      }
    }
    return true;
  }

  bool pb_initial_pass() {
    for (std::size_t pi = 0; pi < pbs_.size(); ++pi) {
      if (!pb_update(static_cast<int>(pi))) return false;
    }
    return propagate() == kNoConflict;
  }

  // Returns the index of a conflicting clause, kPbConflict (with
  // conflict_clause_ filled), or kNoConflict.
  int propagate() {
    while (qhead_ < static_cast<int>(trail_.size())) {
      const int lit = trail_[qhead_++];
      const int falsified = -lit;

      for (const auto& [pi, ti] : pb_occ_[idx(lit)]) {
        (void)ti;
        if (!pb_update(pi)) return kPbConflict;
      }

      std::vector<int>& watch_list = watches_[idx(falsified)];
      std::size_t keep = 0;
      for (std::size_t wi = 0; wi < watch_list.size(); ++wi) {
        const int ci = watch_list[wi];
        Clause& c = clauses_[ci];
        if (c.lits[0] == falsified) std::swap(c.lits[0], c.lits[1]);
        if (val_of(c.lits[0]) > 0) {
          watch_list[keep++] = ci;  // satisfied via the other watch
          continue;
        }
        bool moved = false;
        for (std::size_t k = 2; k < c.lits.size(); ++k) {
          if (val_of(c.lits[k]) >= 0) {
            std::swap(c.lits[1], c.lits[k]);
            watches_[idx(c.lits[1])].push_back(ci);
            moved = true;
            break;
          }
        }
        if (moved) continue;
        watch_list[keep++] = ci;
        if (val_of(c.lits[0]) < 0) {
          for (std::size_t rest = wi + 1; rest < watch_list.size(); ++rest) {
            watch_list[keep++] = watch_list[rest];
          }
          watch_list.resize(keep);
          return ci;
        }
        enqueue(c.lits[0], c.lits);
      }
      watch_list.resize(keep);
    }
    return kNoConflict;
  }

  // Heap entries are (activity, -var) so that ties prefer low variable
  // ids: input variables come before product auxiliaries.
  void heap_push(int var) { heap_.push({activity_[var], -var}); }

  void bump(int var) {
    activity_[var] += activity_inc_;
    if (activity_[var] > 1e100) {
      for (double& a : activity_) a *= 1e-100;
      activity_inc_ *= 1e-100;
      // Heap entries predate the rescale; reseed so lookups stay fresh.
      heap_ = {};
      for (int v = 1; v <= nvars_; ++v) {
        if (val_[v] == 0) heap_push(v);
      }
    }
    heap_push(var);
  }

  // First-UIP learning; asserts the learned clause and backjumps.
  void analyze_and_learn(int conflict) {
    std::vector<int> learned{0};  // slot 0 becomes the asserting literal
    std::vector<int> to_clear;
    int counter = 0;
    int index = static_cast<int>(trail_.size()) - 1;
    int uip = 0;

    std::vector<int> pending = conflict == kPbConflict
                                   ? conflict_clause_
                                   : clauses_[conflict].lits;
    while (true) {
      for (const int q : pending) {
        const int v = var_of(q);
        if (seen_[v] || level_[v] == 0) continue;
        seen_[v] = 1;
        to_clear.push_back(v);
        bump(v);
        if (level_[v] == current_level()) {
          ++counter;
        } else {
          learned.push_back(q);
        }
      }
      while (!seen_[var_of(trail_[index])]) --index;
      uip = trail_[index];
      --index;
      seen_[var_of(uip)] = 0;
      --counter;
      if (counter == 0) break;
      pending.clear();
      for (const int q : reason_[var_of(uip)]) {
        if (q != uip) pending.push_back(q);
      }
    }
    learned[0] = -uip;
    for (const int v : to_clear) seen_[v] = 0;
    activity_inc_ /= 0.95;

    int backjump = 0;
    std::size_t second_pos = 1;
    for (std::size_t i = 1; i < learned.size(); ++i) {
      if (level_[var_of(learned[i])] > backjump) {
        backjump = level_[var_of(learned[i])];
        second_pos = i;
      }
    }
    backtrack(backjump);
    if (learned.size() == 1) {
      enqueue(learned[0], learned);
      return;
    }
    std::swap(learned[1], learned[second_pos]);
    const int ci = static_cast<int>(clauses_.size());
    watches_[idx(learned[0])].push_back(ci);
    watches_[idx(learned[1])].push_back(ci);
    clauses_.push_back({std::move(learned), true, false});
    ++learned_count_;
    // The clause is unit after the backjump; assert it.
    enqueue(clauses_.back().lits[0], clauses_.back().lits);
  }

  // Retires the longest half of the learned clauses. Eager reasons make
  // this safe regardless of trail state; called right after restarts.
  void reduce_learned() {
    if (learned_count_ < 20000) return;
    std::vector<std::pair<std::size_t, int>> order;
    for (std::size_t ci = 0; ci < clauses_.size(); ++ci) {
      if (clauses_[ci].learned && !clauses_[ci].inert) {
        order.push_back({clauses_[ci].lits.size(), static_cast<int>(ci)});
      }
    }
    std::sort(order.begin(), order.end());
    for (std::size_t i = order.size() / 2; i < order.size(); ++i) {
      Clause& c = clauses_[order[i].second];
      detach_watch(c.lits[0], order[i].second);
      detach_watch(c.lits[1], order[i].second);
      c.inert = true;
      c.lits.clear();
      c.lits.shrink_to_fit();
      --learned_count_;
    }
  }

  void detach_watch(int lit, int ci) {
    std::vector<int>& list = watches_[idx(lit)];
    for (std::size_t i = 0; i < list.size(); ++i) {
      if (list[i] == ci) {
        list[i] = list.back();
        list.pop_back();
        return;
      }
    }
  }

  int pick_branch_variable() {
    while (!heap_.empty()) {
      const auto [act, neg_var] = heap_.top();
      const int var = -neg_var;
      heap_.pop();
      if (val_[var] == 0 && act == activity_[var]) return var;
    }
    for (int v = 1; v <= nvars_; ++v) {
      if (val_[v] == 0) return v;
    }
    return 0;
  }

  int nvars_;
  bool ok_ = true;
  std::vector<Clause> clauses_;
  std::vector<PbConstraint> pbs_;
  std::vector<std::vector<int>> watches_;
  std::vector<std::vector<std::pair<int, int>>> pb_occ_;
  std::vector<signed char> val_;
  std::vector<int> level_;
  std::vector<std::vector<int>> reason_;
  std::vector<int> trail_;
  std::vector<int> trail_lim_;
  int qhead_ = 0;
  std::vector<double> activity_;
  double activity_inc_ = 1.0;
  std::vector<char> phase_;
  std::vector<char> seen_;
  std::priority_queue<std::pair<double, int>> heap_;
  std::vector<int> conflict_clause_;
  std::int64_t conflicts_ = 0;
  std::int64_t restarts_ = 0;
  std::int64_t learned_count_ = 0;
};

}  // namespace

int main(int argc, char** argv) {
  std::ifstream file;
  std::istream* in = &std::cin;
  if (argc > 2) {
    std::cerr << "usage: pbsat [input-file]\n";
    return 1;
  }
  if (argc == 2) {
    file.open(argv[1]);
    if (!file) {
      std::cerr << "pbsat: cannot open " << argv[1] << "\n";
      return 1;
    }
    in = &file;
  }

  // Autodetect: OPB files open with a '*' header or an objective line;
  // DIMACS with 'c'/'p' lines or bare clauses.
  std::stringstream buffered;
  buffered << in->rdbuf();
  const std::string text = buffered.str();
  const std::size_t first = text.find_first_not_of(" \t\r\n");
  const bool opb = first != std::string::npos &&
                   (text[first] == '*' || text[first] == 'm');

  Parsed parsed;
  std::istringstream input(text);
  if (opb) {
    parse_opb(input, parsed);
  } else {
    parse_dimacs(input, parsed);
  }
  const int report_vars = parsed.nvars_original;
  const bool opb_output = parsed.opb;

  Solver solver(std::move(parsed));
  if (!solver.solve()) {
    std::cout << "s UNSATISFIABLE\n";
    return 20;
  }
  std::cout << "s SATISFIABLE\n";
  std::ostringstream v;
  int per_line = 0;
  for (int var = 1; var <= report_vars; ++var) {
    if (per_line == 0) v << "v";
    if (opb_output) {
      v << (solver.value_of(var) ? " x" : " -x") << var;
    } else {
      v << " " << (solver.value_of(var) ? var : -var);
    }
    if (++per_line == 25) {
      v << "\n";
      per_line = 0;
    }
  }
  if (!opb_output) {
    if (per_line == 0) v << "v";
    v << " 0";
    per_line = 1;
  }
  if (per_line != 0) v << "\n";
  std::cout << v.str();
  return 10;
}
