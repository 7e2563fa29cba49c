#include "magicdist/automorphism.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace magicdist {

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  int n = static_cast<int>(image_.size());
  std::vector<char> seen(n + 1, 0);
  for (int v : image_) {
    if (v < 1 || v > n || seen[v]) throw std::invalid_argument("not a permutation of 1..n");
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = i + 1;
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(image_.size());
  for (int v = 1; v <= size(); ++v) inv[image_[v - 1] - 1] = v;
  return Permutation(std::move(inv));
}

Permutation Permutation::compose(const Permutation& b) const {
  if (size() != b.size()) throw std::invalid_argument("permutation sizes differ");
  std::vector<int> img(image_.size());
  for (int v = 1; v <= size(); ++v) img[v - 1] = image_[b(v) - 1];
  return Permutation(std::move(img));
}

namespace {

// Stable vertex coloring: start from degrees, split classes by the multiset
// of neighbor colors until nothing changes. Automorphisms preserve colors.
std::vector<int> refine_colors(const Graph& g) {
  int n = g.order();
  std::vector<int> color(n);
  for (int v = 1; v <= n; ++v) color[v - 1] = g.degree(v);
  for (;;) {
    std::map<std::pair<int, std::vector<int>>, std::vector<int>> classes;
    for (int v = 1; v <= n; ++v) {
      std::vector<int> around;
      for (int u : g.neighbors(v)) around.push_back(color[u - 1]);
      std::sort(around.begin(), around.end());
      classes[{color[v - 1], std::move(around)}].push_back(v);
    }
    std::vector<int> next(n);
    int c = 0;
    for (auto& [sig, members] : classes) {
      for (int v : members) next[v - 1] = c;
      ++c;
    }
    if (next == color) return color;
    color = std::move(next);
  }
}

void search_automorphisms(const Graph& g, const std::vector<int>& color, std::vector<int>& image,
                          std::vector<char>& used, int v, std::vector<Permutation>& out) {
  int n = g.order();
  if (v > n) {
    out.emplace_back(image);
    return;
  }
  for (int u = 1; u <= n; ++u) {
    if (used[u] || color[u - 1] != color[v - 1]) continue;
    bool ok = true;
    for (int w = 1; w < v && ok; ++w)
      if (g.adjacent(v, w) != g.adjacent(u, image[w - 1])) ok = false;
    if (!ok) continue;
    used[u] = 1;
    image[v - 1] = u;
    search_automorphisms(g, color, image, used, v + 1, out);
    used[u] = 0;
  }
}

}  // namespace

AutGroup automorphisms(const Graph& g) {
  int n = g.order();
  std::vector<int> color = refine_colors(g);
  std::vector<int> image(n);
  std::vector<char> used(n + 1, 0);
  AutGroup group;
  search_automorphisms(g, color, image, used, 1, group.elements);
  std::sort(group.elements.begin(), group.elements.end());
  return group;
}

namespace {

// Branch-and-bound over vertex orderings for the minimal graph6 body. Column
// k holds the adjacency bits between the k-th placed vertex and the earlier
// ones, packed so that numeric comparison matches string order.
struct CanonSearch {
  const Graph& g;
  int n;
  std::vector<std::uint32_t> best;
  std::vector<std::uint32_t> cols;
  std::vector<int> placed;
  std::vector<char> used;

  explicit CanonSearch(const Graph& graph)
      : g(graph), n(graph.order()), cols(n, 0), used(n + 1, 0) {
    best.resize(n);
    for (int j = 0; j < n; ++j) {
      std::uint32_t c = 0;
      for (int i = 0; i < j; ++i) c = c << 1 | (g.adjacent(i + 1, j + 1) ? 1 : 0);
      best[j] = c;
    }
    placed.reserve(n);
    descend();
  }

  void descend() {
    int k = static_cast<int>(placed.size());
    if (k == n) {
      if (std::lexicographical_compare(cols.begin(), cols.end(), best.begin(), best.end()))
        best = cols;
      return;
    }
    for (int u = 1; u <= n; ++u) {
      if (used[u]) continue;
      std::uint32_t c = 0;
      for (int i = 0; i < k; ++i) c = c << 1 | (g.adjacent(placed[i], u) ? 1 : 0);
      cols[k] = c;
      // Prune only when this prefix already exceeds the best one.
      bool worse = false;
      for (int j = 0; j <= k; ++j) {
        if (cols[j] != best[j]) {
          worse = cols[j] > best[j];
          break;
        }
      }
      if (worse) continue;
      used[u] = 1;
      placed.push_back(u);
      descend();
      placed.pop_back();
      used[u] = 0;
    }
  }
};

}  // namespace

std::string canonical_form(const Graph& g) {
  CanonSearch search(g);
  std::vector<std::pair<int, int>> edges;
  for (int j = 0; j < g.order(); ++j)
    for (int i = 0; i < j; ++i)
      if (search.best[j] >> (j - 1 - i) & 1) edges.emplace_back(i + 1, j + 1);
  return to_graph6(Graph::from_edge_list(g.order(), edges));
}

Labeling act(const Permutation& s, const Labeling& f) {
  if (s.size() != f.size()) throw std::invalid_argument("permutation and labeling sizes differ");
  Permutation inv = s.inverse();
  std::vector<int> values(f.size());
  for (int v = 1; v <= f.size(); ++v) values[v - 1] = f(inv(v));
  return Labeling(std::move(values));
}

LabelingOrbits labeling_orbits(const Graph& g, const std::vector<Labeling>& labelings) {
  for (const Labeling& f : labelings)
    if (!verify_distance_magic(g, f).ok())
      throw std::invalid_argument("orbit partition expects verified distance magic labelings");

  AutGroup group = automorphisms(g);
  std::map<std::vector<int>, int> index;
  for (size_t i = 0; i < labelings.size(); ++i) index[labelings[i].values()] = static_cast<int>(i);

  LabelingOrbits out;
  out.group_order = group.order();
  std::vector<char> seen(labelings.size(), 0);
  for (size_t i = 0; i < labelings.size(); ++i) {
    if (seen[i]) continue;
    std::vector<int> orbit;
    for (const Permutation& s : group.elements) {
      Labeling image = act(s, labelings[i]);
      auto it = index.find(image.values());
      if (it == index.end())
        throw std::invalid_argument("labeling set is not closed under the automorphism group");
      if (!seen[it->second]) {
        seen[it->second] = 1;
        orbit.push_back(it->second);
      }
    }
    if (static_cast<long long>(orbit.size()) != group.order())
      throw std::logic_error("orbit smaller than the group: nontrivial stabilizer");
    std::sort(orbit.begin(), orbit.end());
    out.orbits.push_back(std::move(orbit));
  }
  return out;
}

}  // namespace magicdist
