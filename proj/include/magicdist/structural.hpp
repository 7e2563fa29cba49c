// Cheap necessary conditions for distance magic graphs, used standalone and
// as census pre-filters, plus the structure forced on the label-1 vertices by
// a 2-distance magic labeling.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "magicdist/graph.hpp"
#include "magicdist/labeling.hpp"

namespace magicdist {

struct FilterVerdict {
  bool pass = true;
  std::string rule;          // which test rejected, empty on pass
  std::vector<int> witness;  // vertices involved in the rejection
};

// Two vertices whose neighborhoods differ in exactly 1 or 2 places force
// unequal weights under any bijective labeling, so such a pair rules the
// graph out.
FilterVerdict symm_diff_filter(const Graph& g);

struct SubgraphWitness {
  bool found = false;
  std::string kind;           // "P3" or "C4"
  std::vector<int> vertices;  // P3: (leaf, center, leaf); C4: in cycle order
};

// Every distance magic graph with an edge contains P3 or C4; equivalently
// some vertex has two neighbors or some 4-cycle exists.
SubgraphWitness contains_p3_or_c4(const Graph& g);

// Regular graphs: odd degree is impossible, and 2-regular graphs are
// distance magic only when every component is a C4. Irregular graphs pass.
FilterVerdict regular_filters(const Graph& g);

struct TwoDmStructure {
  int constant = 0;                             // 0 or 1
  std::vector<int> label_one_vertices;          // the induced subgraph G1
  std::vector<std::vector<int>> components;     // constant 0: G1 components
                                                //   (each vertex has even degree in G1)
  std::vector<std::pair<int, int>> matching;    // constant 1: greedy maximal matching in G1
};

// Requires a verified 2-distance magic labeling; throws std::domain_error
// otherwise.
TwoDmStructure two_dm_structure(const Graph& g, const ModularLabeling& f);

}  // namespace magicdist
