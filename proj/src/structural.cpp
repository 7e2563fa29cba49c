#include "magicdist/structural.hpp"

#include <bit>
#include <stdexcept>

namespace magicdist {

FilterVerdict symm_diff_filter(const Graph& g) {
  int n = g.order(), words = g.row_words();
  for (int x = 1; x <= n; ++x) {
    const std::uint64_t* rx = g.row_bits(x);
    for (int y = x + 1; y <= n; ++y) {
      const std::uint64_t* ry = g.row_bits(y);
      int diff = 0;
      for (int w = 0; w < words && diff <= 2; ++w) diff += std::popcount(rx[w] ^ ry[w]);
      if (diff == 1 || diff == 2)
        return {false, "neighborhood symmetric difference of size 1 or 2", {x, y}};
    }
  }
  return {};
}

SubgraphWitness contains_p3_or_c4(const Graph& g) {
  for (int v = 1; v <= g.order(); ++v) {
    if (g.degree(v) >= 2) {
      const auto& nb = g.neighbors(v);
      return {true, "P3", {nb[0], v, nb[1]}};
    }
  }
  // Max degree <= 1 leaves no room for a 4-cycle, but check anyway: two
  // vertices with two common neighbors span one.
  for (int x = 1; x <= g.order(); ++x) {
    for (int y = x + 1; y <= g.order(); ++y) {
      int a = 0, b = 0;
      for (int u : g.neighbors(x)) {
        if (u == y || !g.adjacent(u, y)) continue;
        if (!a) a = u;
        else { b = u; break; }
      }
      if (b) return {true, "C4", {x, a, y, b}};
    }
  }
  return {};
}

FilterVerdict regular_filters(const Graph& g) {
  int r = g.regularity();
  if (r < 0) return {};
  if (r % 2 == 1) return {false, "odd-regular graphs are never distance magic", {}};
  if (r == 2) {
    for (const auto& comp : components(g))
      if (comp.size() != 4)
        return {false, "2-regular graphs are distance magic only as disjoint C4s", comp};
  }
  return {};
}

TwoDmStructure two_dm_structure(const Graph& g, const ModularLabeling& f) {
  if (f.modulus() != 2) throw std::domain_error("structure report needs modulus 2");
  VerifyResult vr = verify_p_distance_magic(g, f);
  if (!vr.ok()) throw std::domain_error("structure report needs a verified 2-distance magic labeling");

  TwoDmStructure out;
  out.constant = static_cast<int>(vr.certificate->k);
  int n = g.order();
  std::vector<char> in_g1(n + 1, 0);
  for (int v = 1; v <= n; ++v)
    if (f(v) == 1) {
      in_g1[v] = 1;
      out.label_one_vertices.push_back(v);
    }

  // Weight parity of a label-1 vertex equals its degree inside G1, so the
  // constant forces the parity of every internal degree.
  std::vector<std::pair<int, int>> g1_edges;
  for (int v : out.label_one_vertices) {
    int internal = 0;
    for (int u : g.neighbors(v)) {
      if (!in_g1[u]) continue;
      ++internal;
      if (v < u) g1_edges.emplace_back(v, u);
    }
    if (internal % 2 != out.constant)
      throw std::logic_error("internal degree parity contradicts the magic constant");
  }

  if (out.constant == 0) {
    // Relabel G1's vertices 1..|G1| to reuse the component scan.
    std::vector<int> index(n + 1, 0);
    for (size_t i = 0; i < out.label_one_vertices.size(); ++i)
      index[out.label_one_vertices[i]] = static_cast<int>(i + 1);
    std::vector<std::pair<int, int>> idx_edges;
    for (auto [u, v] : g1_edges) idx_edges.emplace_back(index[u], index[v]);
    Graph g1 = Graph::from_edge_list(static_cast<int>(out.label_one_vertices.size()), idx_edges);
    for (const auto& comp : components(g1)) {
      std::vector<int> named;
      for (int i : comp) named.push_back(out.label_one_vertices[i - 1]);
      out.components.push_back(named);
    }
  } else {
    std::vector<char> matched(n + 1, 0);
    for (auto [u, v] : g1_edges) {
      if (matched[u] || matched[v]) continue;
      matched[u] = matched[v] = 1;
      out.matching.emplace_back(u, v);
    }
  }
  return out;
}

}  // namespace magicdist
