// Graph automorphisms, a canonical form, and the induced action on distance
// magic labelings. Everything here targets small graphs (n up to ~12): groups
// are returned as explicit element lists.
#pragma once

#include <string>
#include <vector>

#include "magicdist/graph.hpp"
#include "magicdist/labeling.hpp"

namespace magicdist {

class Permutation {
 public:
  explicit Permutation(std::vector<int> image);
  static Permutation identity(int n);
  int size() const { return static_cast<int>(image_.size()); }
  int operator()(int v) const { return image_[v - 1]; }
  const std::vector<int>& image() const { return image_; }
  Permutation inverse() const;
  // (a.compose(b))(v) = a(b(v))
  Permutation compose(const Permutation& b) const;
  bool operator==(const Permutation& o) const { return image_ == o.image_; }
  bool operator<(const Permutation& o) const { return image_ < o.image_; }

 private:
  std::vector<int> image_;
};

struct AutGroup {
  std::vector<Permutation> elements;  // sorted, identity included
  long long order() const { return static_cast<long long>(elements.size()); }
};

// All adjacency-preserving permutations, found by backtracking over a stable
// degree/neighborhood refinement of the vertices.
AutGroup automorphisms(const Graph& g);

// Lexicographically smallest graph6 string over all relabelings; equal
// strings characterize isomorphic graphs.
std::string canonical_form(const Graph& g);

// Relabeled labeling: (s . f)(v) = f(s^{-1}(v)). Magic weights and constant
// are preserved when s is an automorphism.
Labeling act(const Permutation& s, const Labeling& f);

struct LabelingOrbits {
  long long group_order = 0;
  std::vector<std::vector<int>> orbits;  // indices into the input list
};

// Partitions a complete set of distance magic labelings under the
// automorphism group. Bijective labelings have trivial stabilizers, so every
// orbit has exactly group_order elements (checked).
LabelingOrbits labeling_orbits(const Graph& g, const std::vector<Labeling>& labelings);

}  // namespace magicdist
