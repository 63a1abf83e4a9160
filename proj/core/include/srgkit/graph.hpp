// Dense bit-matrix representation of simple undirected graphs.
//
// All graphs in this toolkit are small (n <= 1024), so a dense bitset
// adjacency matrix is the right trade-off: common-neighbor counts are a
// row-AND plus popcount, and graphs compare byte-for-byte, which the
// deterministic constructors and the solver round-trip tests rely on.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "srgkit/error.hpp"

namespace srg {

using Edge = std::pair<int, int>;  // always stored with first < second

class Graph {
 public:
  static constexpr int kMaxVertices = 1024;

  // Empty graph on n vertices (1 <= n <= kMaxVertices).
  explicit Graph(int n);

  // Graph with exactly the given edges. Every pair must satisfy
  // 0 <= i < j < n; self-loops, out-of-range endpoints, unordered pairs and
  // duplicates are rejected with the offending pair in the message.
  Graph(int n, const std::vector<Edge>& edges);

  int n() const { return n_; }
  int edge_count() const { return edge_count_; }

  bool adjacent(int u, int v) const {
    return (bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >>
            (v & 63)) & 1u;
  }

  int degree(int v) const;

  // |N(u) ∩ N(v)| by bitwise row intersection. u == v is rejected.
  int common_neighbors(int u, int v) const;

  std::vector<int> neighbors(int v) const;

  // Sorted edge list (i < j, lexicographic).
  std::vector<Edge> edges() const;

  bool is_regular(int* degree_out = nullptr) const;
  bool connected() const;

  // Raw row words for callers that want to run their own bit scans.
  const std::uint64_t* row(int v) const {
    return bits_.data() + static_cast<std::size_t>(v) * words_;
  }
  int words_per_row() const { return words_; }

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && bits_ == other.bits_;
  }

 private:
  void add_edge_unchecked(int i, int j);

  int n_ = 0;
  int words_ = 0;
  int edge_count_ = 0;
  std::vector<std::uint64_t> bits_;
};

// Validating constructor used by the CLI and tests; identical to the
// two-argument Graph constructor.
Graph build_graph(int n, const std::vector<Edge>& edges);

// Edge iff non-edge in g (same vertex set); an involution.
Graph complement(const Graph& g);

// The Petersen graph on 10 vertices: outer 5-cycle 0..4, inner pentagram
// 5..9, spokes i -- i+5. A (10,3,0,1) strongly regular graph.
Graph petersen();

// Star K_{1,m}: vertex 0 adjacent to 1..m. The classic irregular graph that
// still satisfies the lambda = 0 / mu = 1 pair conditions.
Graph star(int leaves);

// Graph text format: first line "n m", then m lines "i j" with
// 0 <= i < j < n, ASCII decimal, LF-terminated; edges come out sorted
// lexicographically on write. The reader accepts edges in any order but
// enforces the header count and the per-edge constraints.
void write_graph(std::ostream& out, const Graph& g);
Graph read_graph(std::istream& in);

}  // namespace srg
