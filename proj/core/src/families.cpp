#include "srgkit/families.hpp"

#include <vector>

#include "srgkit/error.hpp"
#include "srgkit/gf.hpp"

namespace srg {

namespace {

// Decomposes q as p^d with p prime; throws when q is not a prime power.
void prime_power(int q, int* p_out, int* d_out) {
  if (q < 2) throw SrgError(std::to_string(q) + " is not a prime power");
  int p = 2;
  while (q % p != 0) {
    ++p;
  }
  int rest = q, d = 0;
  while (rest % p == 0) {
    rest /= p;
    ++d;
  }
  if (rest != 1) {
    throw SrgError(std::to_string(q) + " is not a prime power");
  }
  *p_out = p;
  *d_out = d;
}

// All t-subsets of [0, m) in lexicographic order.
std::vector<std::vector<int>> subsets_lex(int m, int t) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(t);
  for (int i = 0; i < t; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    int i = t - 1;
    while (i >= 0 && cur[i] == m - t + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < t; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

bool disjoint(const std::vector<int>& a, const std::vector<int>& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return false;
    (a[i] < b[j]) ? ++i : ++j;
  }
  return true;
}

}  // namespace

Graph paley(int q) {
  if (q % 4 != 1) {
    throw SrgError("Paley graph needs q = 1 (mod 4), got " +
                   std::to_string(q));
  }
  int p = 0, d = 0;
  prime_power(q, &p, &d);
  const GaloisField f(p, d);

  std::vector<char> is_square(q, 0);
  for (const FieldElem& r : quadratic_residues(f)) is_square[f.index(r)] = 1;

  std::vector<Edge> edges;
  for (int u = 0; u < q; ++u) {
    for (int v = u + 1; v < q; ++v) {
      const FieldElem diff = f.sub(f.from_index(v), f.from_index(u));
      if (is_square[f.index(diff)]) edges.emplace_back(u, v);
    }
  }
  return Graph(q, edges);
}

Graph rook(int m) {
  if (m < 2) throw SrgError("rook graph needs m >= 2");
  std::vector<Edge> edges;
  const auto id = [m](int r, int c) { return r * m + c; };
  for (int r = 0; r < m; ++r) {
    for (int c = 0; c < m; ++c) {
      for (int c2 = c + 1; c2 < m; ++c2) {
        edges.emplace_back(id(r, c), id(r, c2));  // same row
      }
      for (int r2 = r + 1; r2 < m; ++r2) {
        edges.emplace_back(id(r, c), id(r2, c));  // same column
      }
    }
  }
  return Graph(m * m, edges);
}

Graph triangular(int m) {
  if (m < 5) throw SrgError("triangular graph needs m >= 5");
  const auto subs = subsets_lex(m, 2);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < subs.size(); ++i) {
    for (std::size_t j = i + 1; j < subs.size(); ++j) {
      if (!disjoint(subs[i], subs[j])) {
        edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
      }
    }
  }
  return Graph(static_cast<int>(subs.size()), edges);
}

Graph kneser(int m, int t) {
  if (t < 1 || m < 2 * t) throw SrgError("Kneser graph needs m >= 2t >= 2");
  const auto subs = subsets_lex(m, t);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < subs.size(); ++i) {
    for (std::size_t j = i + 1; j < subs.size(); ++j) {
      if (disjoint(subs[i], subs[j])) {
        edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
      }
    }
  }
  return Graph(static_cast<int>(subs.size()), edges);
}

}  // namespace srg
