#pragma once

// Slow reference implementations the fast code is tested against, plus a
// seeded graph generator. Everything here is deliberately naive.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "magicdist/automorphism.hpp"
#include "magicdist/graph.hpp"
#include "magicdist/labeling.hpp"

namespace oracles {

// Try all n! bijections and keep the distance magic ones.
inline std::vector<std::vector<int>> brute_force_dm(const magicdist::Graph& g) {
  int n = g.order();
  std::vector<int> values(n);
  std::iota(values.begin(), values.end(), 1);
  std::vector<std::vector<int>> out;
  do {
    long long k = 0;
    bool first = true, ok = true;
    for (int v = 1; v <= n && ok; ++v) {
      long long w = 0;
      for (int u : g.neighbors(v)) w += values[u - 1];
      if (first) {
        k = w;
        first = false;
      } else if (w != k) {
        ok = false;
      }
    }
    if (ok) out.push_back(values);
  } while (std::next_permutation(values.begin(), values.end()));
  return out;
}

// Try all n! vertex maps and keep the adjacency-preserving ones.
inline std::vector<std::vector<int>> brute_force_aut(const magicdist::Graph& g) {
  int n = g.order();
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  std::vector<std::vector<int>> out;
  do {
    bool ok = true;
    for (int v = 1; v <= n && ok; ++v)
      for (int u = v + 1; u <= n && ok; ++u)
        if (g.adjacent(u, v) != g.adjacent(img[u - 1], img[v - 1])) ok = false;
    if (ok) out.push_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

// Erdos-Renyi style graph with a fixed generator so failures replay.
inline magicdist::Graph random_graph(int n, std::mt19937& rng, double edge_prob = 0.5) {
  std::bernoulli_distribution flip(edge_prob);
  std::vector<std::pair<int, int>> edges;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (flip(rng)) edges.emplace_back(u, v);
  return magicdist::Graph::from_edge_list(n, edges);
}

// Every graph on n labelled vertices, one per edge-set bitmask.
inline magicdist::Graph graph_from_mask(int n, unsigned long long mask) {
  std::vector<std::pair<int, int>> edges;
  int bit = 0;
  for (int v = 2; v <= n; ++v)
    for (int u = 1; u < v; ++u, ++bit)
      if (mask >> bit & 1) edges.emplace_back(u, v);
  return magicdist::Graph::from_edge_list(n, edges);
}

inline std::vector<std::vector<int>> labeling_values(const std::vector<magicdist::Labeling>& ls) {
  std::vector<std::vector<int>> out;
  for (const magicdist::Labeling& f : ls) out.push_back(f.values());
  return out;
}

}  // namespace oracles
