// Simple undirected graphs: construction, graph6 and edge-list formats,
// and the builtin families used throughout the toolkit.
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace magicdist {

// Vertices are 1..n. Immutable once built; all factory functions validate
// their input and throw std::invalid_argument on bad edges or parameters.
class Graph {
 public:
  static Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges);

  int order() const { return n_; }
  long long edge_count() const { return m_; }

  bool adjacent(int u, int v) const;
  int degree(int v) const { return static_cast<int>(adj_[v - 1].size()); }
  const std::vector<int>& neighbors(int v) const { return adj_[v - 1]; }

  std::vector<int> degrees() const;
  std::vector<std::pair<int, int>> edges() const;  // u < v, sorted

  // Adjacency row of v as packed 64-bit words, bit (u-1) set iff u ~ v.
  const std::uint64_t* row_bits(int v) const { return bits_.data() + static_cast<size_t>(v - 1) * words_; }
  int row_words() const { return words_; }

  // -1 when not regular.
  int regularity() const;

  bool operator==(const Graph& o) const { return n_ == o.n_ && bits_ == o.bits_; }

 private:
  explicit Graph(int n);

  int n_ = 0;
  int words_ = 0;
  long long m_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<std::vector<int>> adj_;
};

bool is_connected(const Graph& g);
std::vector<std::vector<int>> components(const Graph& g);

// graph6 (header-free): length as 1, 4 or 8 printable bytes, then the upper
// triangle in column order, 6 bits per byte, each byte offset by 63.
Graph parse_graph6(std::string_view s);
std::string to_graph6(const Graph& g);

// Plain text: first line "n m", then one "u v" line per edge.
Graph parse_edge_list_text(const std::string& text);
std::string to_edge_list_text(const Graph& g);

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);

// K_n minus the perfect matching {(i, i+n/2)}; n even, n >= 4.
Graph complete_minus_matching(int n);

// K_n minus the perfect matching {(i, n+1-i)}: every vertex misses its
// "mirror", so the identity labeling is distance magic. Isomorphic to
// complete_minus_matching(n).
Graph singular_even(int n);

// Adds vertex n+1 adjacent to every vertex of g.
Graph cone_cover(const Graph& g);

// b's vertices are shifted up by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);

// Fixed 11-vertex, 28-edge graph: distance magic under the identity labeling
// yet with nonsingular adjacency matrix.
Graph fig_ndm();

// Family grammar used by the CLI and tests:
//   path:N  cycle:N  complete:N  knm:N (complete_minus_matching)
//   singular_even:N  fig_ndm  cone:SPEC  union:SPEC+SPEC[+...]
Graph construct(std::string_view spec);

}  // namespace magicdist
