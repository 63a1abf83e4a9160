#include "srgkit/golay.hpp"

#include <set>
#include <vector>

#include "srgkit/error.hpp"

namespace srg {

const std::array<std::array<int, 11>, 6> kGolayG = {{
    {1, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1},
    {0, 1, 0, 0, 0, 0, 1, 1, 2, 2, 0},
    {0, 0, 1, 0, 0, 0, 1, 2, 1, 0, 2},
    {0, 0, 0, 1, 0, 0, 2, 1, 0, 1, 2},
    {0, 0, 0, 0, 1, 0, 2, 0, 1, 2, 1},
    {0, 0, 0, 0, 0, 1, 0, 2, 2, 1, 1},
}};

const std::array<std::array<int, 11>, 5> kGolayH = {{
    {2, 2, 2, 1, 1, 0, 1, 0, 0, 0, 0},
    {2, 2, 1, 2, 0, 1, 0, 1, 0, 0, 0},
    {2, 1, 2, 0, 2, 1, 0, 0, 1, 0, 0},
    {2, 1, 0, 2, 1, 2, 0, 0, 0, 1, 0},
    {2, 0, 1, 1, 2, 2, 0, 0, 0, 0, 1},
}};

namespace {

void require_trits(const int* v, int len) {
  for (int i = 0; i < len; ++i) {
    if (v[i] < 0 || v[i] > 2) {
      throw SrgError("trit out of range at position " + std::to_string(i));
    }
  }
}

using Vec5 = std::array<int, 5>;

Vec5 column(int j) {
  Vec5 c;
  for (int i = 0; i < 5; ++i) c[i] = kGolayH[i][j];
  return c;
}

Vec5 add3(const Vec5& a, const Vec5& b) {
  Vec5 out;
  for (int i = 0; i < 5; ++i) out[i] = (a[i] + b[i]) % 3;
  return out;
}

Vec5 neg3(const Vec5& a) {
  Vec5 out;
  for (int i = 0; i < 5; ++i) out[i] = (3 - a[i]) % 3;
  return out;
}

int vec_index(const Vec5& v) {
  int idx = 0;
  for (int i = 0; i < 5; ++i) idx = idx * 3 + v[i];
  return idx;
}

Vec5 vec_of_index(int idx) {
  Vec5 v;
  for (int i = 4; i >= 0; --i) {
    v[i] = idx % 3;
    idx /= 3;
  }
  return v;
}

}  // namespace

std::array<int, 11> golay_encode(const std::array<int, 6>& w) {
  require_trits(w.data(), 6);
  std::array<int, 11> out{};
  for (int j = 0; j < 11; ++j) {
    int acc = 0;
    for (int i = 0; i < 6; ++i) acc += w[i] * kGolayG[i][j];
    out[j] = acc % 3;
  }
  return out;
}

std::array<int, 5> golay_syndrome(const std::array<int, 11>& c) {
  require_trits(c.data(), 11);
  std::array<int, 5> out{};
  for (int i = 0; i < 5; ++i) {
    int acc = 0;
    for (int j = 0; j < 11; ++j) acc += kGolayH[i][j] * c[j];
    out[i] = acc % 3;
  }
  return out;
}

Graph bvls_construct() {
  // Connection set: the 22 vectors +-x_i.
  std::vector<Vec5> conn;
  for (int j = 0; j < 11; ++j) {
    conn.push_back(column(j));
    conn.push_back(neg3(column(j)));
  }

  // Distinctness of {+-x_i} u {+-x_i +- x_j, i != j}: 22 + 4*C(11,2) = 242
  // vectors must be pairwise distinct (this is what makes the pair
  // conditions come out as lambda = 1, mu = 2).
  std::set<Vec5> diffs;
  for (int j = 0; j < 11; ++j) {
    diffs.insert(column(j));
    diffs.insert(neg3(column(j)));
  }
  for (int i = 0; i < 11; ++i) {
    for (int j = i + 1; j < 11; ++j) {
      for (const Vec5& a : {column(i), neg3(column(i))}) {
        for (const Vec5& b : {column(j), neg3(column(j))}) {
          diffs.insert(add3(a, b));
        }
      }
    }
  }
  if (diffs.size() != 242) {
    throw SrgError("parity-column difference vectors are not distinct: " +
                   std::to_string(diffs.size()) + " of 242");
  }

  std::set<Edge> edges;
  for (int u = 0; u < 243; ++u) {
    const Vec5 vu = vec_of_index(u);
    for (const Vec5& c : conn) {
      const int v = vec_index(add3(vu, c));
      edges.insert({std::min(u, v), std::max(u, v)});
    }
  }
  return Graph(243, std::vector<Edge>(edges.begin(), edges.end()));
}

}  // namespace srg
