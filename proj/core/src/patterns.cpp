#include "srgkit/patterns.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <string>

#include "srgkit/error.hpp"
#include "srgkit/families.hpp"

namespace srg {

namespace {

void check_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.n()) {
    throw SrgError("vertex " + std::to_string(v) + " out of range for order " +
                   std::to_string(g.n()));
  }
}

std::string pair_str(int a, int b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

const Graph& paley9_reference() {
  static const Graph g = paley(9);
  return g;
}

// All triangles a < b < c, in lexicographic order.
std::vector<std::array<int, 3>> all_triangles(const Graph& g) {
  std::vector<std::array<int, 3>> tris;
  for (int a = 0; a < g.n(); ++a) {
    for (const int b : g.neighbors(a)) {
      if (b <= a) continue;
      for (const int c : g.neighbors(b)) {
        if (c > b && g.adjacent(a, c)) tris.push_back({a, b, c});
      }
    }
  }
  return tris;
}

// The two members of P and of Q are matched one-to-one by adjacency:
// every p has exactly one neighbor in Q and the two partners differ.
bool cross_matching(const Graph& g, const std::array<int, 2>& p,
                    const std::array<int, 2>& q) {
  const int a0 = g.adjacent(p[0], q[0]);
  const int a1 = g.adjacent(p[0], q[1]);
  const int b0 = g.adjacent(p[1], q[0]);
  const int b1 = g.adjacent(p[1], q[1]);
  if (a0 + a1 != 1 || b0 + b1 != 1) return false;
  return a0 != b0;
}

}  // namespace

std::vector<PairLabel> pair_labels(const Graph& g, int v) {
  check_vertex(g, v);
  const std::vector<int> nbrs = g.neighbors(v);
  std::vector<char> in_closed(static_cast<std::size_t>(g.n()), 0);
  in_closed[v] = 1;
  for (const int u : nbrs) in_closed[u] = 1;

  std::vector<PairLabel> labels;
  for (std::size_t ai = 0; ai < nbrs.size(); ++ai) {
    for (std::size_t bi = ai + 1; bi < nbrs.size(); ++bi) {
      const int a = nbrs[ai];
      const int b = nbrs[bi];
      if (g.adjacent(a, b)) continue;  // matching pair: labels only attach
                                       // to non-matching pairs
      int labeled = -1;
      int count = 0;
      for (const int w : g.neighbors(a)) {
        if (!in_closed[w] && g.adjacent(b, w)) {
          labeled = w;
          ++count;
        }
      }
      if (count != 1) {
        throw SrgError("pair " + pair_str(a, b) + " of N(" +
                       std::to_string(v) + ") has " + std::to_string(count) +
                       " common neighbors outside the closed neighborhood;"
                       " expected exactly 1");
      }
      labels.push_back({labeled, {a, b}});
    }
  }

  // The labeling must cover V - N[v] exactly once; a vertex covered twice
  // or not at all breaks the local mu=2 structure.
  std::vector<int> cover(static_cast<std::size_t>(g.n()), 0);
  for (const PairLabel& l : labels) ++cover[l.vertex];
  for (int w = 0; w < g.n(); ++w) {
    if (in_closed[w] || cover[w] == 1) continue;
    throw SrgError("vertex " + std::to_string(w) + " outside N[" +
                   std::to_string(v) + "] carries " +
                   std::to_string(cover[w]) + " pair labels; expected"
                   " exactly 1");
  }
  return labels;
}

Paley9PatternReport check_paley9_pattern(const Graph& g, int v) {
  const std::vector<PairLabel> labels = pair_labels(g, v);
  const std::vector<int> nbrs = g.neighbors(v);

  // N(v) must induce a perfect matching: every neighbor of v pairs with
  // exactly one other neighbor.
  std::vector<Edge> matching;
  for (const int u : nbrs) {
    int partner = -1;
    int count = 0;
    for (const int w : nbrs) {
      if (w != u && g.adjacent(u, w)) {
        partner = w;
        ++count;
      }
    }
    if (count != 1) {
      throw SrgError("N(" + std::to_string(v) + ") is not a perfect"
                     " matching: vertex " + std::to_string(u) + " has " +
                     std::to_string(count) + " neighbors inside it");
    }
    if (u < partner) matching.push_back({u, partner});
  }
  std::sort(matching.begin(), matching.end());

  std::map<Edge, int> label_of;
  for (const PairLabel& l : labels) label_of[l.pair] = l.vertex;
  const auto labeled = [&](int a, int b) {
    const auto it = label_of.find({std::min(a, b), std::max(a, b)});
    if (it == label_of.end()) {
      throw SrgError("internal error: no label for pair " + pair_str(a, b));
    }
    return it->second;
  };

  Paley9PatternReport report;
  for (std::size_t i = 0; i < matching.size(); ++i) {
    for (std::size_t j = i + 1; j < matching.size(); ++j) {
      const auto [v1, v2] = matching[i];
      const auto [v3, v4] = matching[j];
      std::vector<int> nine = {v,
                               v1,
                               v2,
                               v3,
                               v4,
                               labeled(v1, v3),
                               labeled(v1, v4),
                               labeled(v2, v3),
                               labeled(v2, v4)};
      std::sort(nine.begin(), nine.end());
      if (!graphs_isomorphic(induced_subgraph(g, nine), paley9_reference())) {
        report.pattern_present = false;
        report.failing_edges = {matching[i], matching[j]};
        return report;
      }
    }
  }
  report.pattern_present = true;
  return report;
}

std::vector<std::vector<int>> find_paley9_subgraphs(const Graph& g) {
  std::set<std::vector<int>> found;
  if (g.n() < 9) return {};

  for (const std::array<int, 3>& tri : all_triangles(g)) {
    // Column candidates at each corner: adjacent to that corner and to
    // neither of the other two (in the rook structure a column vertex
    // meets its own row only at the corner).
    std::array<std::vector<std::array<int, 2>>, 3> columns;
    for (int ci = 0; ci < 3; ++ci) {
      const int x = tri[ci];
      const int y = tri[(ci + 1) % 3];
      const int z = tri[(ci + 2) % 3];
      std::vector<int> cand;
      for (const int u : g.neighbors(x)) {
        if (u != y && u != z && !g.adjacent(u, y) && !g.adjacent(u, z)) {
          cand.push_back(u);
        }
      }
      // A column contributes one adjacent pair of candidates.
      for (std::size_t ai = 0; ai < cand.size(); ++ai) {
        for (std::size_t bi = ai + 1; bi < cand.size(); ++bi) {
          if (g.adjacent(cand[ai], cand[bi])) {
            columns[ci].push_back({cand[ai], cand[bi]});
          }
        }
      }
    }

    for (const auto& ca : columns[0]) {
      for (const auto& cb : columns[1]) {
        if (!cross_matching(g, ca, cb)) continue;
        for (const auto& cc : columns[2]) {
          if (!cross_matching(g, ca, cc) || !cross_matching(g, cb, cc)) {
            continue;
          }
          std::vector<int> nine = {tri[0], tri[1], tri[2], ca[0], ca[1],
                                   cb[0],  cb[1],  cc[0],  cc[1]};
          std::sort(nine.begin(), nine.end());
          if (found.count(nine)) continue;
          // The assembled set is 4-regular with 18 edges by construction;
          // the isomorphism test rejects the twisted non-rook matchings.
          if (graphs_isomorphic(induced_subgraph(g, nine),
                                paley9_reference())) {
            found.insert(std::move(nine));
          }
        }
      }
    }
  }
  return {found.begin(), found.end()};
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
  if (vertices.empty()) {
    throw SrgError("induced subgraph needs at least one vertex");
  }
  std::set<int> distinct;
  for (const int v : vertices) {
    check_vertex(g, v);
    if (!distinct.insert(v).second) {
      throw SrgError("duplicate vertex " + std::to_string(v) +
                     " in induced subgraph request");
    }
  }
  const int m = static_cast<int>(vertices.size());
  std::vector<Edge> edges;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      if (g.adjacent(vertices[i], vertices[j])) edges.push_back({i, j});
    }
  }
  return Graph(m, edges);
}

bool graphs_isomorphic(const Graph& a, const Graph& b) {
  const int n = a.n();
  if (n != b.n()) return false;
  if (n > 64) {
    throw SrgError("isomorphism test supports order <= 64, got " +
                   std::to_string(n));
  }
  if (a.edge_count() != b.edge_count()) return false;

  std::vector<int> deg_a(static_cast<std::size_t>(n));
  std::vector<int> deg_b(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    deg_a[v] = a.degree(v);
    deg_b[v] = b.degree(v);
  }
  {
    std::vector<int> sa = deg_a;
    std::vector<int> sb = deg_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }

  // Map vertices of a in an order that keeps each new vertex adjacent to
  // an already mapped one where possible (per connected component), so
  // adjacency mismatches surface early.
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(n));
  std::vector<char> placed(static_cast<std::size_t>(n), 0);
  while (static_cast<int>(order.size()) < n) {
    int seed = -1;
    for (int v = 0; v < n; ++v) {
      if (!placed[v] && (seed < 0 || deg_a[v] > deg_a[seed])) seed = v;
    }
    placed[seed] = 1;
    order.push_back(seed);
    for (std::size_t head = order.size() - 1; head < order.size(); ++head) {
      for (const int u : a.neighbors(order[head])) {
        if (!placed[u]) {
          placed[u] = 1;
          order.push_back(u);
        }
      }
    }
  }

  std::vector<int> map(static_cast<std::size_t>(n), -1);
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  const auto extend = [&](const auto& self, int depth) -> bool {
    if (depth == n) return true;
    const int va = order[depth];
    for (int vb = 0; vb < n; ++vb) {
      if (used[vb] || deg_b[vb] != deg_a[va]) continue;
      bool consistent = true;
      for (int prev = 0; prev < depth; ++prev) {
        if (a.adjacent(va, order[prev]) !=
            b.adjacent(vb, map[order[prev]])) {
          consistent = false;
          break;
        }
      }
      if (!consistent) continue;
      map[va] = vb;
      used[vb] = 1;
      if (self(self, depth + 1)) return true;
      used[vb] = 0;
      map[va] = -1;
    }
    return false;
  };
  return extend(extend, 0);
}

}  // namespace srg
