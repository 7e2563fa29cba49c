// Exhaustive search for distance magic labelings with sound pruning, the
// Chinese-remainder combination of modular labelings, and a census over all
// labeled graphs of small order.
#pragma once

#include <string>
#include <vector>

#include "magicdist/graph.hpp"
#include "magicdist/labeling.hpp"

namespace magicdist {

struct SearchConfig {
  long long limit = -1;         // max labelings to return; negative = all
  bool prune_filters = true;    // run the structural/spectral rejects first
  bool symmetry_reduction = false;  // enumerate orbit representatives, then
                                    // expand; output identical either way
  bool most_constrained = false;    // branching heuristic (default: vertex order)
  int threads = 1;              // parallel subtree fan-out (unbounded searches only)
};

// All distance magic labelings, lexicographically sorted when complete.
// Every candidate branch is cut as soon as a finished neighborhood misses the
// constant or the remaining labels cannot reach it.
std::vector<Labeling> find_dm_labelings(const Graph& g, const SearchConfig& cfg = {});
long long count_dm_labelings(const Graph& g, const SearchConfig& cfg = {});

// Modular variant over the multiset {1..n} mod p: value v is available
// floor((n-v)/p)+1 times. The magic residue is discovered per branch.
std::vector<ModularLabeling> find_p_dm_labelings(const Graph& g, int p,
                                                 const SearchConfig& cfg = {});

struct CrtResult {
  int p = 0, q = 0;
  std::vector<int> values;  // per vertex in {1..pq}, residue 0 written as pq
  long long constant = 0;   // CRT of the two constants, in 0..pq-1
  bool consistent = false;  // values realize the multiset {1..n} mod pq
};

// Combines a p- and a q-labeling (p, q coprime, both verified) vertexwise by
// the Chinese remainder theorem. The output always satisfies both congruences;
// it is a pq-distance magic labeling exactly when consistent.
CrtResult crt_combine(const Graph& g, const ModularLabeling& fp, const ModularLabeling& fq);

struct CensusRecord {
  std::string graph6;  // canonical form
  long long labeling_count = 0;
  long long magic_constant = 0;
  bool singular = false;
  bool degenerate = false;  // edgeless: magic only vacuously
};

struct CensusOptions {
  int threads = 1;
  bool include_degenerate = false;
};

// Every distance magic graph on n labeled vertices (n <= 8), filtered
// cheapest-first, searched, then deduplicated up to isomorphism. Sorted by
// canonical form. Edgeless graphs are excluded unless include_degenerate.
std::vector<CensusRecord> census_dm_graphs(int n, const CensusOptions& opts = {});

// Same report for an explicit list of graphs.
std::vector<CensusRecord> census_corpus(const std::vector<Graph>& graphs,
                                        const CensusOptions& opts = {});

}  // namespace magicdist
