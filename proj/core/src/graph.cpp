#include "srgkit/graph.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <ostream>

namespace srg {

namespace {

std::string pair_str(int i, int j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace

Graph::Graph(int n) : n_(n), words_((n + 63) / 64) {
  if (n < 1 || n > kMaxVertices) {
    throw SrgError("graph order " + std::to_string(n) + " out of range [1, " +
                   std::to_string(kMaxVertices) + "]");
  }
  bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
}

Graph::Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
  for (const auto& [i, j] : edges) {
    if (i == j) throw SrgError("self-loop " + pair_str(i, j));
    if (i < 0 || j < 0 || i >= n_ || j >= n_) {
      throw SrgError("edge endpoint out of range " + pair_str(i, j));
    }
    if (i > j) throw SrgError("edge pair not in increasing order " + pair_str(i, j));
    if (adjacent(i, j)) throw SrgError("duplicate edge " + pair_str(i, j));
    add_edge_unchecked(i, j);
  }
}

void Graph::add_edge_unchecked(int i, int j) {
  bits_[static_cast<std::size_t>(i) * words_ + (j >> 6)] |= 1ull << (j & 63);
  bits_[static_cast<std::size_t>(j) * words_ + (i >> 6)] |= 1ull << (i & 63);
  ++edge_count_;
}

int Graph::degree(int v) const {
  int d = 0;
  const std::uint64_t* r = row(v);
  for (int w = 0; w < words_; ++w) d += std::popcount(r[w]);
  return d;
}

int Graph::common_neighbors(int u, int v) const {
  if (u == v) throw SrgError("common_neighbors requires distinct vertices");
  int c = 0;
  const std::uint64_t* ru = row(u);
  const std::uint64_t* rv = row(v);
  for (int w = 0; w < words_; ++w) c += std::popcount(ru[w] & rv[w]);
  return c;
}

std::vector<int> Graph::neighbors(int v) const {
  std::vector<int> out;
  const std::uint64_t* r = row(v);
  for (int w = 0; w < words_; ++w) {
    std::uint64_t bits = r[w];
    while (bits) {
      int b = std::countr_zero(bits);
      out.push_back(w * 64 + b);
      bits &= bits - 1;
    }
  }
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (int i = 0; i < n_; ++i) {
    for (int j : neighbors(i)) {
      if (j > i) out.emplace_back(i, j);
    }
  }
  return out;
}

bool Graph::is_regular(int* degree_out) const {
  int d = degree(0);
  for (int v = 1; v < n_; ++v) {
    if (degree(v) != d) return false;
  }
  if (degree_out) *degree_out = d;
  return true;
}

bool Graph::connected() const {
  if (n_ == 1) return true;
  std::vector<std::uint64_t> seen(words_, 0), frontier(words_, 0);
  frontier[0] = 1;  // start BFS at vertex 0
  int seen_count = 0;
  bool grew = true;
  while (grew) {
    grew = false;
    for (int w = 0; w < words_; ++w) {
      std::uint64_t fresh = frontier[w] & ~seen[w];
      seen[w] |= fresh;
      frontier[w] = 0;
      while (fresh) {
        int v = w * 64 + std::countr_zero(fresh);
        fresh &= fresh - 1;
        ++seen_count;
        const std::uint64_t* r = row(v);
        for (int x = 0; x < words_; ++x) frontier[x] |= r[x];
        grew = true;
      }
    }
  }
  return seen_count == n_;
}

Graph build_graph(int n, const std::vector<Edge>& edges) {
  return Graph(n, edges);
}

Graph complement(const Graph& g) {
  std::vector<Edge> edges;
  for (int i = 0; i < g.n(); ++i) {
    for (int j = i + 1; j < g.n(); ++j) {
      if (!g.adjacent(i, j)) edges.emplace_back(i, j);
    }
  }
  return Graph(g.n(), edges);
}

Graph petersen() {
  return Graph(10, {{0, 1}, {0, 4}, {0, 5}, {1, 2}, {1, 6}, {2, 3}, {2, 7},
                    {3, 4}, {3, 8}, {4, 9}, {5, 7}, {5, 8}, {6, 8}, {6, 9},
                    {7, 9}});
}

Graph star(int leaves) {
  std::vector<Edge> edges;
  for (int j = 1; j <= leaves; ++j) edges.emplace_back(0, j);
  return Graph(leaves + 1, edges);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << g.n() << ' ' << g.edge_count() << '\n';
  for (const auto& [i, j] : g.edges()) {
    out << i << ' ' << j << '\n';
  }
}

Graph read_graph(std::istream& in) {
  int n = 0, m = 0;
  if (!(in >> n >> m)) throw SrgError("graph text: malformed header line");
  if (m < 0) throw SrgError("graph text: negative edge count");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (int e = 0; e < m; ++e) {
    int i = 0, j = 0;
    if (!(in >> i >> j)) {
      throw SrgError("graph text: expected " + std::to_string(m) +
                     " edge lines, got " + std::to_string(e));
    }
    edges.emplace_back(i, j);
  }
  return Graph(n, edges);
}

}  // namespace srg
