#include "srgkit/verify.hpp"

#include <algorithm>

namespace srg {

VerifyReport verify_srg(const Graph& g, const SrgParams& p) {
  if (g.n() != p.n) {
    throw SrgError("graph order " + std::to_string(g.n()) +
                   " does not match parameter set " + p.str());
  }
  VerifyReport rep;
  const int n = g.n();
  for (int v = 0; v < n; ++v) rep.degree_multiset[g.degree(v)]++;
  if (n < 3) return rep;  // degenerate order: leave every flag false

  rep.is_regular = rep.degree_multiset.size() == 1 &&
                   rep.degree_multiset.begin()->first == p.k;

  // Route (a): combinatorial scan of every unordered pair.
  rep.lambda_ok = rep.mu_ok = true;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const int c = g.common_neighbors(i, j);
      if (g.adjacent(i, j)) {
        if (c != p.lambda && !rep.lambda_violation) {
          rep.lambda_ok = false;
          rep.lambda_violation = Edge{i, j};
        }
      } else if (c != p.mu && !rep.mu_violation) {
        rep.mu_ok = false;
        rep.mu_violation = Edge{i, j};
      }
    }
  }

  rep.is_connected = g.connected();
  rep.complement_connected = complement(g).connected();

  // Route (b): A^2 = kI + lambda*A + mu*(J - I - A) with literal integer
  // matrix arithmetic (no popcount shortcuts), kept independent of route (a).
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = (i != j && g.adjacent(i, j)) ? 1 : 0;
  }
  rep.matrix_identity_ok = true;
  std::vector<int> sq_row(n);
  for (int i = 0; i < n && rep.matrix_identity_ok; ++i) {
    std::fill(sq_row.begin(), sq_row.end(), 0);
    for (int t = 0; t < n; ++t) {
      if (!a[i][t]) continue;
      for (int j = 0; j < n; ++j) sq_row[j] += a[t][j];
    }
    for (int j = 0; j < n; ++j) {
      const long long expected =
          (i == j) ? p.k : (a[i][j] ? p.lambda : p.mu);
      if (sq_row[j] != expected) {
        rep.matrix_identity_ok = false;
        break;
      }
    }
  }
  return rep;
}

std::vector<std::array<int, 3>> triangle_list(const Graph& g) {
  const int n = g.n();
  std::vector<std::array<int, 3>> triangles;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!g.adjacent(i, j)) continue;
      // The edge {i,j} must lie in exactly one triangle; collect it once,
      // keyed by its smallest edge (i < j < w).
      int witnesses = 0;
      int w_found = -1;
      for (int w = 0; w < n; ++w) {
        if (w == i || w == j) continue;
        if (g.adjacent(i, w) && g.adjacent(j, w)) {
          ++witnesses;
          w_found = w;
        }
      }
      if (witnesses != 1) {
        throw SrgError("edge (" + std::to_string(i) + "," + std::to_string(j) +
                       ") lies in " + std::to_string(witnesses) +
                       " triangles; the triangle view needs exactly 1");
      }
      if (w_found > j) triangles.push_back({i, j, w_found});
    }
  }
  std::sort(triangles.begin(), triangles.end());
  return triangles;
}

Graph triangular_view(const Graph& g) {
  const auto triangles = triangle_list(g);
  const int m = static_cast<int>(triangles.size());
  // Triangles sharing a vertex of g become adjacent view vertices; group the
  // triangles per original vertex and link each group pairwise.
  std::vector<std::vector<int>> at_vertex(g.n());
  for (int t = 0; t < m; ++t) {
    for (int v : triangles[t]) at_vertex[v].push_back(t);
  }
  std::vector<Edge> edges;
  for (const auto& group : at_vertex) {
    for (std::size_t x = 0; x < group.size(); ++x) {
      for (std::size_t y = x + 1; y < group.size(); ++y) {
        edges.emplace_back(group[x], group[y]);
      }
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Graph(m, edges);
}

std::vector<NeighborhoodComponent> neighborhood_components(const Graph& g,
                                                           int v) {
  const std::vector<int> nb = g.neighbors(v);
  const int m = static_cast<int>(nb.size());
  std::vector<int> comp(m, -1);
  std::vector<NeighborhoodComponent> out;
  for (int s = 0; s < m; ++s) {
    if (comp[s] != -1) continue;
    // BFS inside the induced neighborhood.
    std::vector<int> members{s};
    comp[s] = s;
    for (std::size_t head = 0; head < members.size(); ++head) {
      for (int t = 0; t < m; ++t) {
        if (comp[t] == -1 && g.adjacent(nb[members[head]], nb[t])) {
          comp[t] = s;
          members.push_back(t);
        }
      }
    }
    NeighborhoodComponent c;
    c.size = static_cast<int>(members.size());
    c.complete = true;
    for (std::size_t x = 0; x < members.size() && c.complete; ++x) {
      for (std::size_t y = x + 1; y < members.size(); ++y) {
        if (!g.adjacent(nb[members[x]], nb[members[y]])) {
          c.complete = false;
          break;
        }
      }
    }
    out.push_back(c);
  }
  std::sort(out.begin(), out.end(),
            [](const NeighborhoodComponent& a, const NeighborhoodComponent& b) {
              return a.size < b.size;
            });
  return out;
}

long long count_claws_at(const Graph& g, int v) {
  const std::vector<int> nb = g.neighbors(v);
  const int m = static_cast<int>(nb.size());
  long long claws = 0;
  for (int x = 0; x < m; ++x) {
    for (int y = x + 1; y < m; ++y) {
      if (g.adjacent(nb[x], nb[y])) continue;
      for (int z = y + 1; z < m; ++z) {
        if (!g.adjacent(nb[x], nb[z]) && !g.adjacent(nb[y], nb[z])) ++claws;
      }
    }
  }
  return claws;
}

long long claw_count_formula(int c1, int c2, int c3, int c4) {
  if (c1 < 0 || c2 < 0 || c3 < 0 || c4 < 0 ||
      c1 + 2 * c2 + 3 * c3 + 4 * c4 != 14) {
    throw SrgError("component counts must partition a 14-vertex neighborhood");
  }
  const long long total = 14LL * 13 * 12 / 6;  // C(14,3)
  return total - 12LL * c2 - 11LL * 3 * c3 - 10LL * 6 * c4 - c3 - 4LL * c4;
}

}  // namespace srg
