#include "srgkit/oracle.hpp"

#include <bit>
#include <cstdint>

namespace srg {

namespace {

// Backtracking engine over the C(n,2) edge decisions in id order
// ((0,1),(0,2),...,(0,n-1),(1,2),...). The partial state keeps, per vertex,
// the mask of confirmed neighbors and the mask of still-undecided slots; a
// pair {x,y} whose own edge is decided is pruned as soon as its
// common-neighbor count exceeds the target or can no longer reach it.
class PairConditionSearch {
 public:
  PairConditionSearch(int n, int k, int lambda, int mu)
      : n_(n), k_(k), lambda_(lambda), mu_(mu),
        all_(static_cast<std::uint32_t>((1u << n) - 1)),
        adj_(n, 0), undecided_(n, 0) {
    for (int v = 0; v < n_; ++v) {
      undecided_[v] = all_ & ~(1u << v);  // everything but the self slot
    }
  }

  // Force edge (i,j) to `present` before the search starts (the star
  // normalization). Assumes the slot is still undecided.
  void preset(int i, int j, bool present) {
    undecided_[i] &= ~(1u << j);
    undecided_[j] &= ~(1u << i);
    if (present) {
      adj_[i] |= 1u << j;
      adj_[j] |= 1u << i;
    }
  }

  std::vector<Graph> run() {
    results_.clear();
    // Re-check everything that is already decided (presets included).
    for (int i = 0; i < n_ && feasible_all(); ++i) {
      for (int j = i + 1; j < n_; ++j) {
        if (!pair_ok(i, j)) return results_;
      }
    }
    dfs(0, 1);
    return results_;
  }

 private:
  static int popcount(std::uint32_t x) { return std::popcount(x); }

  bool decided(int i, int j) const {
    return (undecided_[i] & (1u << j)) == 0;
  }

  // Degree window for v: confirmed <= k and confirmed + open >= k.
  bool degree_ok(int v) const {
    if (k_ < 0) return true;
    const int have = popcount(adj_[v]);
    if (have > k_) return false;
    return have + popcount(undecided_[v]) >= k_;
  }

  // Pair {x,y}: if its edge is decided, the common-neighbor count must be
  // able to land exactly on the target (lambda when adjacent, mu when not).
  bool pair_ok(int x, int y) const {
    if (!decided(x, y)) return true;
    const bool adj = adj_[x] & (1u << y);
    const int target = adj ? lambda_ : mu_;
    const std::uint32_t exclude = (1u << x) | (1u << y);
    const int confirmed = popcount(adj_[x] & adj_[y] & ~exclude);
    if (confirmed > target) return false;
    const int possible = popcount((adj_[x] | undecided_[x]) &
                                  (adj_[y] | undecided_[y]) & ~exclude);
    return possible >= target;
  }

  bool feasible_all() const {
    for (int v = 0; v < n_; ++v) {
      if (!degree_ok(v)) return false;
    }
    return true;
  }

  // Re-check only what the decision of edge (i,j) can affect: the degrees
  // of i and j, and every decided pair with i or j as an endpoint (their
  // witness masks are the only ones that changed).
  bool affected_ok(int i, int j) const {
    if (!degree_ok(i) || !degree_ok(j)) return false;
    for (int w = 0; w < n_; ++w) {
      if (w != i && !pair_ok(i, w)) return false;
      if (w != j && !pair_ok(j, w)) return false;
    }
    return true;
  }

  void dfs(int i, int j) {
    // Advance to the next undecided slot in id order.
    while (i < n_ - 1) {
      if (j >= n_) {
        ++i;
        j = i + 1;
        continue;
      }
      if (!decided(i, j)) break;
      ++j;
    }
    if (i >= n_ - 1) {
      emit();
      return;
    }
    undecided_[i] &= ~(1u << j);
    undecided_[j] &= ~(1u << i);
    for (const bool present : {true, false}) {
      if (present) {
        adj_[i] |= 1u << j;
        adj_[j] |= 1u << i;
      } else {
        adj_[i] &= ~(1u << j);
        adj_[j] &= ~(1u << i);
      }
      if (affected_ok(i, j)) dfs(i, j + 1);
    }
    adj_[i] &= ~(1u << j);
    adj_[j] &= ~(1u << i);
    undecided_[i] |= 1u << j;
    undecided_[j] |= 1u << i;
  }

  void emit() {
    // Full re-validation by direct counting — the incremental pruning
    // should guarantee this, but the oracle double-checks its own output.
    std::vector<Edge> edges;
    for (int x = 0; x < n_; ++x) {
      if (k_ >= 0 && popcount(adj_[x]) != k_) return;
      for (int y = x + 1; y < n_; ++y) {
        const bool adj = adj_[x] & (1u << y);
        const std::uint32_t exclude = (1u << x) | (1u << y);
        const int c = popcount(adj_[x] & adj_[y] & ~exclude);
        if (c != (adj ? lambda_ : mu_)) return;
        if (adj) edges.emplace_back(x, y);
      }
    }
    results_.emplace_back(n_, edges);
  }

  const int n_, k_, lambda_, mu_;
  const std::uint32_t all_;
  std::vector<std::uint32_t> adj_, undecided_;
  std::vector<Graph> results_;
};

}  // namespace

std::vector<Graph> brute_force_srg(const SrgParams& p) {
  require_valid(p);
  if (p.n > 13) {
    throw SrgError("brute-force search supports n <= 13, got n = " +
                   std::to_string(p.n));
  }
  PairConditionSearch search(static_cast<int>(p.n), static_cast<int>(p.k),
                             static_cast<int>(p.lambda),
                             static_cast<int>(p.mu));
  // Star normalization: vertex 0's neighborhood is exactly {1..k}.
  for (int j = 1; j < p.n; ++j) search.preset(0, j, j <= p.k);
  return search.run();
}

std::vector<Graph> enumerate_pair_condition_graphs(int n, int lambda, int mu) {
  if (n < 2 || n > 13) {
    throw SrgError("pair-condition enumeration supports 2 <= n <= 13");
  }
  PairConditionSearch search(n, /*k=*/-1, lambda, mu);
  return search.run();
}

}  // namespace srg
