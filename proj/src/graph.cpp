#include "magicdist/graph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace magicdist {

Graph::Graph(int n) : n_(n), words_((n + 63) / 64) {
  if (n <= 0) throw std::invalid_argument("graph order must be positive");
  bits_.assign(static_cast<size_t>(n_) * words_, 0);
  adj_.resize(n_);
}

Graph Graph::from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    if (u < 1 || u > n || v < 1 || v > n)
      throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loop not allowed");
    std::uint64_t& wu = g.bits_[static_cast<size_t>(u - 1) * g.words_ + (v - 1) / 64];
    std::uint64_t mask = 1ull << ((v - 1) % 64);
    if (wu & mask) continue;  // duplicate edge, collapse
    wu |= mask;
    g.bits_[static_cast<size_t>(v - 1) * g.words_ + (u - 1) / 64] |= 1ull << ((u - 1) % 64);
    ++g.m_;
  }
  for (int v = 1; v <= n; ++v) {
    for (int u = 1; u <= n; ++u)
      if (g.adjacent(u, v)) g.adj_[v - 1].push_back(u);
  }
  return g;
}

bool Graph::adjacent(int u, int v) const {
  if (u < 1 || u > n_ || v < 1 || v > n_) throw std::invalid_argument("vertex out of range");
  return (bits_[static_cast<size_t>(u - 1) * words_ + (v - 1) / 64] >> ((v - 1) % 64)) & 1;
}

std::vector<int> Graph::degrees() const {
  std::vector<int> d(n_);
  for (int v = 1; v <= n_; ++v) d[v - 1] = degree(v);
  return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> e;
  e.reserve(m_);
  for (int u = 1; u <= n_; ++u)
    for (int v : adj_[u - 1])
      if (u < v) e.emplace_back(u, v);
  return e;
}

int Graph::regularity() const {
  int r = degree(1);
  for (int v = 2; v <= n_; ++v)
    if (degree(v) != r) return -1;
  return r;
}

std::vector<std::vector<int>> components(const Graph& g) {
  int n = g.order();
  std::vector<int> comp(n + 1, 0);
  std::vector<std::vector<int>> out;
  for (int s = 1; s <= n; ++s) {
    if (comp[s]) continue;
    out.emplace_back();
    std::vector<int> stack{s};
    comp[s] = static_cast<int>(out.size());
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      out.back().push_back(v);
      for (int u : g.neighbors(v))
        if (!comp[u]) {
          comp[u] = comp[s];
          stack.push_back(u);
        }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

bool is_connected(const Graph& g) { return components(g).size() == 1; }

// ---- graph6 ----

namespace {

constexpr int kG6Lo = 63;
constexpr int kG6Hi = 126;

int g6_byte(std::string_view s, size_t i) {
  if (i >= s.size()) throw std::invalid_argument("graph6: truncated input");
  unsigned char c = static_cast<unsigned char>(s[i]);
  if (c < kG6Lo || c > kG6Hi) throw std::invalid_argument("graph6: byte out of range");
  return c - kG6Lo;
}

}  // namespace

Graph parse_graph6(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("graph6: empty input");
  size_t pos = 0;
  long long n;
  int b0 = g6_byte(s, pos++);
  if (b0 < 63) {
    n = b0;
  } else {
    int b1 = g6_byte(s, pos++);
    if (b1 < 63) {
      n = static_cast<long long>(b1) << 12 | g6_byte(s, pos) << 6 | g6_byte(s, pos + 1);
      pos += 2;
    } else {
      n = 0;
      for (int i = 0; i < 6; ++i) n = n << 6 | g6_byte(s, pos++);
    }
  }
  if (n < 1) throw std::invalid_argument("graph6: order must be positive");
  if (n > 100000) throw std::invalid_argument("graph6: order too large");
  long long nbits = n * (n - 1) / 2;
  size_t need = static_cast<size_t>((nbits + 5) / 6);
  if (s.size() - pos != need) throw std::invalid_argument("graph6: wrong body length");

  std::vector<std::pair<int, int>> edges;
  long long bit = 0;
  int cur = 0, left = 0;
  for (int j = 2; j <= n; ++j) {
    for (int i = 1; i < j; ++i, ++bit) {
      if (left == 0) {
        cur = g6_byte(s, pos++);
        left = 6;
      }
      if (cur & (1 << (left - 1))) edges.emplace_back(i, j);
      --left;
    }
  }
  if (left > 0 && (cur & ((1 << left) - 1)) != 0)
    throw std::invalid_argument("graph6: nonzero trailing bits");
  return Graph::from_edge_list(static_cast<int>(n), edges);
}

std::string to_graph6(const Graph& g) {
  long long n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(kG6Lo + n));
  } else if (n <= 258047) {
    out.push_back(static_cast<char>(kG6Hi));
    for (int sh = 12; sh >= 0; sh -= 6) out.push_back(static_cast<char>(kG6Lo + ((n >> sh) & 63)));
  } else {
    out.push_back(static_cast<char>(kG6Hi));
    out.push_back(static_cast<char>(kG6Hi));
    for (int sh = 30; sh >= 0; sh -= 6) out.push_back(static_cast<char>(kG6Lo + ((n >> sh) & 63)));
  }
  int cur = 0, used = 0;
  for (int j = 2; j <= n; ++j) {
    for (int i = 1; i < j; ++i) {
      cur = cur << 1 | (g.adjacent(i, j) ? 1 : 0);
      if (++used == 6) {
        out.push_back(static_cast<char>(kG6Lo + cur));
        cur = used = 0;
      }
    }
  }
  if (used > 0) out.push_back(static_cast<char>(kG6Lo + (cur << (6 - used))));
  return out;
}

// ---- edge-list text ----

Graph parse_edge_list_text(const std::string& text) {
  std::istringstream in(text);
  long long n, m;
  if (!(in >> n >> m)) throw std::invalid_argument("edge list: missing 'n m' header");
  if (n < 1 || m < 0) throw std::invalid_argument("edge list: bad header values");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(m);
  for (long long i = 0; i < m; ++i) {
    int u, v;
    if (!(in >> u >> v)) throw std::invalid_argument("edge list: fewer edges than header claims");
    edges.emplace_back(u, v);
  }
  int extra;
  if (in >> extra) throw std::invalid_argument("edge list: trailing data");
  return Graph::from_edge_list(static_cast<int>(n), edges);
}

std::string to_edge_list_text(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

// ---- builtin families ----

Graph path_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edge_list(n, e);
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  auto e = path_graph(n).edges();
  e.emplace_back(1, n);
  return Graph::from_edge_list(n, e);
}

Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) e.emplace_back(u, v);
  return Graph::from_edge_list(n, e);
}

Graph complete_minus_matching(int n) {
  if (n < 4 || n % 2 != 0) throw std::invalid_argument("complete_minus_matching needs even n >= 4");
  std::vector<std::pair<int, int>> e;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (v != u + n / 2) e.emplace_back(u, v);
  return Graph::from_edge_list(n, e);
}

Graph singular_even(int n) {
  if (n < 4 || n % 2 != 0) throw std::invalid_argument("singular_even needs even n >= 4");
  std::vector<std::pair<int, int>> e;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (v != n + 1 - u) e.emplace_back(u, v);
  return Graph::from_edge_list(n, e);
}

Graph cone_cover(const Graph& g) {
  int n = g.order();
  auto e = g.edges();
  for (int v = 1; v <= n; ++v) e.emplace_back(v, n + 1);
  return Graph::from_edge_list(n + 1, e);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  int na = a.order();
  auto e = a.edges();
  for (auto [u, v] : b.edges()) e.emplace_back(u + na, v + na);
  return Graph::from_edge_list(na + b.order(), e);
}

Graph fig_ndm() {
  static const std::vector<std::pair<int, int>> e = {
      {1, 2}, {1, 5}, {1, 6},  {1, 7},  {1, 11}, {2, 4}, {2, 7},  {2, 9}, {2, 10}, {3, 6},
      {3, 7}, {3, 8}, {3, 10}, {4, 5},  {4, 7},  {4, 8}, {4, 9},  {5, 7}, {5, 8},  {5, 11},
      {6, 7}, {6, 9}, {6, 11}, {7, 10}, {8, 9},  {8, 10}, {9, 11}, {10, 11}};
  return Graph::from_edge_list(11, e);
}

namespace {

int parse_family_int(std::string_view s) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw std::invalid_argument("construct: bad integer parameter");
  return value;
}

}  // namespace

Graph construct(std::string_view spec) {
  if (spec == "fig_ndm") return fig_ndm();
  size_t colon = spec.find(':');
  if (colon == std::string_view::npos)
    throw std::invalid_argument("construct: expected family:params");
  std::string_view family = spec.substr(0, colon);
  std::string_view rest = spec.substr(colon + 1);
  if (family == "path") return path_graph(parse_family_int(rest));
  if (family == "cycle") return cycle_graph(parse_family_int(rest));
  if (family == "complete") return complete_graph(parse_family_int(rest));
  if (family == "knm" || family == "complete_minus_matching")
    return complete_minus_matching(parse_family_int(rest));
  if (family == "singular_even") return singular_even(parse_family_int(rest));
  if (family == "cone") return cone_cover(construct(rest));
  if (family == "union") {
    std::vector<Graph> parts;
    size_t start = 0;
    while (true) {
      size_t plus = rest.find('+', start);
      parts.push_back(construct(rest.substr(start, plus - start)));
      if (plus == std::string_view::npos) break;
      start = plus + 1;
    }
    if (parts.size() < 2) throw std::invalid_argument("construct: union needs at least two parts");
    Graph g = parts[0];
    for (size_t i = 1; i < parts.size(); ++i) g = disjoint_union(g, parts[i]);
    return g;
  }
  throw std::invalid_argument("construct: unknown family '" + std::string(family) + "'");
}

}  // namespace magicdist
