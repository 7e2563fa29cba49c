#include "magicdist/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "magicdist/automorphism.hpp"
#include "magicdist/spectral.hpp"
#include "magicdist/structural.hpp"

namespace magicdist {

namespace {

constexpr int kMaxSearchOrder = 60;

void check_search_order(const Graph& g) {
  if (g.order() > kMaxSearchOrder)
    throw std::invalid_argument("search supports graphs up to 60 vertices");
}

// Backtracking for one target constant. Vertices whose neighborhoods finish
// are checked on the spot; open neighborhoods are cut by the reachable-range
// bounds in feasible().
struct DmEngine {
  const Graph& g;
  int n;
  long long k;
  long long target_weighted;
  bool heuristic;
  long long limit;  // negative: unbounded
  bool collect;

  std::vector<int> degs;
  std::vector<int> value;   // vertex -> label, 0 unassigned
  std::uint64_t avail;      // bit l-1 set: label l free
  std::vector<long long> pw;
  std::vector<int> un;      // unassigned neighbors
  long long weighted = 0;   // sum f(v) * deg(v) over assigned
  int assigned = 0;

  long long count = 0;
  std::vector<std::vector<int>> found;

  DmEngine(const Graph& graph, long long constant, bool most_constrained, long long lim, bool keep)
      : g(graph),
        n(graph.order()),
        k(constant),
        target_weighted(static_cast<long long>(graph.order()) * constant),
        heuristic(most_constrained),
        limit(lim),
        collect(keep),
        degs(graph.degrees()),
        value(graph.order() + 1, 0),
        avail(graph.order() >= 64 ? ~0ull : (1ull << graph.order()) - 1),
        pw(graph.order() + 1, 0),
        un(graph.order() + 1, 0) {
    for (int v = 1; v <= n; ++v) un[v] = degs[v - 1];
  }

  bool full() const { return limit >= 0 && count >= limit; }

  bool feasible() const {
    int free_count = n - assigned;
    long long asc[kMaxSearchOrder];
    int idx = 0;
    for (int l = 1; l <= n; ++l)
      if (avail >> (l - 1) & 1) asc[idx++] = l;

    long long small[kMaxSearchOrder + 1], large[kMaxSearchOrder + 1];
    small[0] = large[0] = 0;
    for (int i = 0; i < free_count; ++i) {
      small[i + 1] = small[i] + asc[i];
      large[i + 1] = large[i] + asc[free_count - 1 - i];
    }
    for (int v = 1; v <= n; ++v) {
      if (un[v] == 0) continue;  // weight fixed; checked when it closed
      if (pw[v] + small[un[v]] > k || pw[v] + large[un[v]] < k) return false;
    }

    // The assigned part plus any pairing of free labels with the unassigned
    // degrees must reach exactly n*k; bound the pairing by sortedness.
    long long rem_degs[kMaxSearchOrder];
    int rd = 0;
    for (int v = 1; v <= n; ++v)
      if (value[v] == 0) rem_degs[rd++] = degs[v - 1];
    std::sort(rem_degs, rem_degs + rd);
    long long lo = 0, hi = 0;
    for (int i = 0; i < rd; ++i) {
      lo += asc[i] * rem_degs[rd - 1 - i];
      hi += asc[i] * rem_degs[i];
    }
    return weighted + lo <= target_weighted && target_weighted <= weighted + hi;
  }

  int pick() const {
    if (!heuristic) {
      for (int v = 1; v <= n; ++v)
        if (value[v] == 0) return v;
    }
    int best = 0, best_known = -1, best_deg = -1;
    for (int v = 1; v <= n; ++v) {
      if (value[v] != 0) continue;
      int known = degs[v - 1] - un[v];
      if (known > best_known || (known == best_known && degs[v - 1] > best_deg)) {
        best = v;
        best_known = known;
        best_deg = degs[v - 1];
      }
    }
    return best;
  }

  bool assign(int v, int l) {
    value[v] = l;
    avail &= ~(1ull << (l - 1));
    weighted += static_cast<long long>(l) * degs[v - 1];
    ++assigned;
    bool ok = true;
    for (int u : g.neighbors(v)) {
      pw[u] += l;
      --un[u];
      if (pw[u] > k || (un[u] == 0 && pw[u] != k)) ok = false;
    }
    return ok;
  }

  void unassign(int v, int l) {
    for (int u : g.neighbors(v)) {
      pw[u] -= l;
      ++un[u];
    }
    value[v] = 0;
    avail |= 1ull << (l - 1);
    weighted -= static_cast<long long>(l) * degs[v - 1];
    --assigned;
  }

  void descend() {
    if (full()) return;
    if (assigned == n) {
      ++count;
      if (collect) found.emplace_back(value.begin() + 1, value.end());
      return;
    }
    if (!feasible()) return;
    int v = pick();
    for (int l = 1; l <= n; ++l) {
      if (!(avail >> (l - 1) & 1)) continue;
      if (assign(v, l)) descend();
      unassign(v, l);
      if (full()) return;
    }
  }

  // first_label > 0 restricts the root branch (thread fan-out).
  void run(int first_label = 0) {
    for (int v = 1; v <= n; ++v)
      if (un[v] == 0 && pw[v] != k) return;  // isolated vertices force k = 0
    if (!feasible()) return;
    int v = pick();
    for (int l = 1; l <= n; ++l) {
      if (first_label > 0 && l != first_label) continue;
      if (assign(v, l)) descend();
      unassign(v, l);
      if (full()) return;
    }
  }
};

std::vector<long long> candidate_constants(const Graph& g) {
  int n = g.order();
  std::vector<int> ds = g.degrees();
  std::vector<long long> degs_sorted(ds.begin(), ds.end());
  std::sort(degs_sorted.begin(), degs_sorted.end());
  long long lo = 0, hi = 0;
  for (int i = 0; i < n; ++i) {
    lo += static_cast<long long>(i + 1) * degs_sorted[n - 1 - i];
    hi += static_cast<long long>(i + 1) * degs_sorted[i];
  }
  long long kmin = (lo + n - 1) / n;
  long long kmax = std::min(hi / n, (static_cast<long long>(n) * n - 1) / 2);
  std::vector<long long> ks;
  for (long long k = kmin; k <= kmax; ++k) ks.push_back(k);
  return ks;
}

bool rejected_by_filters(const Graph& g) {
  if (g.edge_count() > 0 && !contains_p3_or_c4(g).found) return true;
  return !symm_diff_filter(g).pass || !regular_filters(g).pass ||
         !even_regular_singular_filter(g).pass;
}

std::vector<std::vector<int>> run_constants(const Graph& g, const SearchConfig& cfg,
                                            long long limit) {
  std::vector<std::vector<int>> out;
  std::vector<long long> ks = candidate_constants(g);
  if (cfg.threads > 1 && limit < 0) {
    std::vector<std::pair<long long, int>> jobs;
    for (long long k : ks)
      for (int l = 1; l <= g.order(); ++l) jobs.emplace_back(k, l);
    std::vector<std::vector<std::vector<int>>> results(jobs.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
      for (size_t j; (j = next.fetch_add(1)) < jobs.size();) {
        DmEngine engine(g, jobs[j].first, cfg.most_constrained, -1, true);
        engine.run(jobs[j].second);
        results[j] = std::move(engine.found);
      }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < cfg.threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    for (auto& part : results)
      out.insert(out.end(), std::make_move_iterator(part.begin()),
                 std::make_move_iterator(part.end()));
  } else {
    for (long long k : ks) {
      long long room = limit < 0 ? -1 : limit - static_cast<long long>(out.size());
      if (limit >= 0 && room <= 0) break;
      DmEngine engine(g, k, cfg.most_constrained, room, true);
      engine.run();
      out.insert(out.end(), std::make_move_iterator(engine.found.begin()),
                 std::make_move_iterator(engine.found.end()));
    }
  }
  return out;
}

}  // namespace

std::vector<Labeling> find_dm_labelings(const Graph& g, const SearchConfig& cfg) {
  check_search_order(g);
  if (cfg.prune_filters && rejected_by_filters(g)) return {};

  std::vector<std::vector<int>> raw;
  if (cfg.symmetry_reduction) {
    AutGroup group = automorphisms(g);
    std::vector<std::vector<int>> inverse;
    for (const Permutation& s : group.elements) inverse.push_back(s.inverse().image());

    std::vector<std::vector<int>> reps = run_constants(g, cfg, -1);
    for (const std::vector<int>& rep : reps) {
      std::vector<int> img(rep.size());
      bool leader = true;
      for (const std::vector<int>& inv : inverse) {
        for (size_t i = 0; i < rep.size(); ++i) img[i] = rep[inv[i] - 1];
        if (img < rep) {
          leader = false;
          break;
        }
      }
      if (!leader) continue;
      for (const std::vector<int>& inv : inverse) {
        for (size_t i = 0; i < rep.size(); ++i) img[i] = rep[inv[i] - 1];
        raw.push_back(img);
      }
    }
  } else {
    raw = run_constants(g, cfg, cfg.limit);
  }

  std::sort(raw.begin(), raw.end());
  if (cfg.limit >= 0 && static_cast<long long>(raw.size()) > cfg.limit)
    raw.resize(cfg.limit);

  std::vector<Labeling> out;
  out.reserve(raw.size());
  for (std::vector<int>& values : raw) {
    Labeling f(std::move(values));
    if (!verify_distance_magic(g, f).ok())
      throw std::logic_error("search produced a labeling that fails verification");
    out.push_back(std::move(f));
  }
  return out;
}

long long count_dm_labelings(const Graph& g, const SearchConfig& cfg) {
  check_search_order(g);
  if (cfg.prune_filters && rejected_by_filters(g)) return 0;
  long long total = 0;
  for (long long k : candidate_constants(g)) {
    long long room = cfg.limit < 0 ? -1 : cfg.limit - total;
    if (cfg.limit >= 0 && room <= 0) break;
    DmEngine engine(g, k, cfg.most_constrained, room, false);
    engine.run();
    total += engine.count;
  }
  return total;
}

namespace {

// Modular search: the constant is pinned by the first finished neighborhood
// on each branch and every later one must agree.
struct PEngine {
  const Graph& g;
  int n, p;
  long long limit;
  std::vector<int> remain;  // multiplicity left per value 1..p
  std::vector<int> value;
  std::vector<long long> pw;
  std::vector<int> un;
  int assigned = 0;
  int cand = -1;
  std::vector<std::vector<int>> found;

  PEngine(const Graph& graph, int modulus, long long lim)
      : g(graph),
        n(graph.order()),
        p(modulus),
        limit(lim),
        remain(modulus + 1, 0),
        value(graph.order() + 1, 0),
        pw(graph.order() + 1, 0),
        un(graph.order() + 1, 0) {
    for (int v = 1; v <= p && v <= n; ++v) remain[v] = (n - v) / p + 1;
    for (int v = 1; v <= n; ++v) un[v] = graph.degree(v);
  }

  bool full() const { return limit >= 0 && static_cast<long long>(found.size()) >= limit; }

  bool close(int u) {  // neighborhood of u just finished
    int w = static_cast<int>(pw[u] % p);
    if (cand == -1) {
      cand = w;
      return true;
    }
    return w == cand;
  }

  void descend() {
    if (full()) return;
    if (assigned == n) {
      found.emplace_back(value.begin() + 1, value.end());
      return;
    }
    int v = 0;
    for (int u = 1; u <= n; ++u)
      if (value[u] == 0) {
        v = u;
        break;
      }
    for (int l = 1; l <= p; ++l) {
      if (remain[l] == 0) continue;
      --remain[l];
      value[v] = l;
      ++assigned;
      int saved_cand = cand;
      bool ok = true;
      for (int u : g.neighbors(v)) {
        pw[u] += l;
        if (--un[u] == 0 && !close(u)) ok = false;
      }
      if (ok) descend();
      for (int u : g.neighbors(v)) {
        pw[u] -= l;
        ++un[u];
      }
      cand = saved_cand;
      ++remain[l];
      value[v] = 0;
      --assigned;
      if (full()) return;
    }
  }

  void run() {
    for (int v = 1; v <= n; ++v)
      if (un[v] == 0) {
        if (cand == -1) cand = 0;
        if (cand != 0) return;
      }
    descend();
  }
};

}  // namespace

std::vector<ModularLabeling> find_p_dm_labelings(const Graph& g, int p, const SearchConfig& cfg) {
  check_search_order(g);
  if (p < 1) throw std::invalid_argument("modulus must be positive");
  PEngine engine(g, p, cfg.limit);
  engine.run();
  std::sort(engine.found.begin(), engine.found.end());
  std::vector<ModularLabeling> out;
  out.reserve(engine.found.size());
  for (std::vector<int>& values : engine.found) {
    ModularLabeling f(p, std::move(values));
    if (!verify_p_distance_magic(g, f).ok())
      throw std::logic_error("search produced a labeling that fails verification");
    out.push_back(std::move(f));
  }
  return out;
}

namespace {

long long egcd(long long a, long long b, long long& x, long long& y) {
  if (b == 0) {
    x = 1;
    y = 0;
    return a;
  }
  long long x1, y1;
  long long d = egcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return d;
}

// Unique residue in [0, pq) matching a mod p and b mod q.
long long crt_residue(long long a, int p, long long b, int q) {
  long long x, y;
  egcd(p, q, x, y);
  long long inv = ((x % q) + q) % q;  // p * inv == 1 (mod q)
  long long ra = ((a % p) + p) % p;
  long long gap = (((b - ra) % q) + q) % q;
  return ra + static_cast<long long>(p) * (gap * inv % q);
}

}  // namespace

CrtResult crt_combine(const Graph& g, const ModularLabeling& fp, const ModularLabeling& fq) {
  int n = g.order();
  if (fp.size() != n || fq.size() != n)
    throw std::invalid_argument("labeling length differs from graph order");
  int p = fp.modulus(), q = fq.modulus();
  long long x, y;
  if (egcd(p, q, x, y) != 1) throw std::invalid_argument("moduli must be coprime");

  VerifyResult vp = verify_p_distance_magic(g, fp);
  VerifyResult vq = verify_p_distance_magic(g, fq);
  if (!vp.ok() || !vq.ok())
    throw std::domain_error("both labelings must verify before combining");

  long long pq = static_cast<long long>(p) * q;
  if (pq > std::numeric_limits<int>::max())
    throw std::invalid_argument("combined modulus is too large");
  CrtResult out;
  out.p = p;
  out.q = q;
  out.constant = crt_residue(vp.certificate->k, p, vq.certificate->k, q);
  out.values.resize(n);
  std::map<long long, long long> histogram;
  for (int v = 1; v <= n; ++v) {
    long long r = crt_residue(fp(v), p, fq(v), q);
    out.values[v - 1] = static_cast<int>(r == 0 ? pq : r);
    ++histogram[out.values[v - 1]];
  }
  // Consistent combinations realise {1..n} reduced mod pq; the class
  // multiplicities below sum to n, so matching them rules out strays.
  out.consistent = true;
  for (long long v = 1; v <= std::min<long long>(pq, n); ++v) {
    long long want = (n - v) / pq + 1;
    auto it = histogram.find(v);
    if ((it == histogram.end() ? 0 : it->second) != want) out.consistent = false;
  }
  return out;
}

// ---- census ----

namespace {

long long factorial(int n) {
  long long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

CensusRecord degenerate_record(int n) {
  Graph g = Graph::from_edge_list(n, {});
  return {to_graph6(g), factorial(n), 0, true, true};
}

// Full pipeline for one graph that already passed the cheap mask-level
// rejects. Returns an empty graph6 when the graph is not distance magic.
CensusRecord classify(const Graph& g) {
  if (!contains_p3_or_c4(g).found || !symm_diff_filter(g).pass || !regular_filters(g).pass ||
      !even_regular_singular_filter(g).pass)
    return {};
  SearchConfig cfg;
  cfg.prune_filters = false;
  std::vector<Labeling> labelings = find_dm_labelings(g, cfg);
  if (labelings.empty()) return {};
  long long k = verify_distance_magic(g, labelings.front()).certificate->k;
  for (const Labeling& f : labelings)
    if (verify_distance_magic(g, f).certificate->k != k)
      throw std::logic_error("distance magic constant is not unique across labelings");
  return {canonical_form(g), static_cast<long long>(labelings.size()), k, is_singular(g), false};
}

void merge_record(std::map<std::string, CensusRecord>& into, const CensusRecord& rec) {
  auto [it, inserted] = into.emplace(rec.graph6, rec);
  if (!inserted && (it->second.labeling_count != rec.labeling_count ||
                    it->second.magic_constant != rec.magic_constant))
    throw std::logic_error("isomorphic graphs disagree on labeling count or constant");
}

}  // namespace

std::vector<CensusRecord> census_dm_graphs(int n, const CensusOptions& opts) {
  if (n < 1 || n > 8)
    throw std::invalid_argument("internal generation handles 1 <= n <= 8; use a corpus beyond");

  int pairs = n * (n - 1) / 2;
  std::vector<int> pu(pairs), pv(pairs);
  {
    int b = 0;
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i, ++b) {
        pu[b] = i;
        pv[b] = j;
      }
  }
  unsigned long long total = 1ull << pairs;
  int threads = std::max(1, opts.threads);

  std::vector<std::map<std::string, CensusRecord>> partial(threads);
  auto worker = [&](int t) {
    unsigned long long lo = total / threads * t + std::min<unsigned long long>(t, total % threads);
    unsigned long long hi = lo + total / threads + (static_cast<unsigned long long>(t) < total % threads ? 1 : 0);
    for (unsigned long long mask = lo; mask < hi; ++mask) {
      if (mask == 0) {
        if (opts.include_degenerate) merge_record(partial[t], degenerate_record(n));
        continue;
      }
      unsigned rows[8] = {0};
      unsigned long long mm = mask;
      while (mm) {
        int b = std::countr_zero(mm);
        mm &= mm - 1;
        rows[pu[b]] |= 1u << pv[b];
        rows[pv[b]] |= 1u << pu[b];
      }
      int maxdeg = 0, mindeg = n;
      for (int v = 0; v < n; ++v) {
        int d = std::popcount(rows[v]);
        maxdeg = std::max(maxdeg, d);
        mindeg = std::min(mindeg, d);
      }
      if (maxdeg <= 1) continue;                          // no P3 and no C4
      if (maxdeg == mindeg && maxdeg % 2 == 1) continue;  // odd-regular
      bool rejected = false;
      for (int x = 0; x < n && !rejected; ++x)
        for (int y = x + 1; y < n; ++y) {
          int diff = std::popcount(rows[x] ^ rows[y]);
          if (diff == 1 || diff == 2) {
            rejected = true;
            break;
          }
        }
      if (rejected) continue;

      std::vector<std::pair<int, int>> edges;
      for (int b = 0; b < pairs; ++b)
        if (mask >> b & 1) edges.emplace_back(pu[b] + 1, pv[b] + 1);
      CensusRecord rec = classify(Graph::from_edge_list(n, edges));
      if (!rec.graph6.empty()) merge_record(partial[t], rec);
    }
  };

  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }

  std::map<std::string, CensusRecord> all;
  for (const auto& part : partial)
    for (const auto& [key, rec] : part) merge_record(all, rec);
  std::vector<CensusRecord> out;
  for (auto& [key, rec] : all) out.push_back(rec);
  return out;
}

std::vector<CensusRecord> census_corpus(const std::vector<Graph>& graphs,
                                        const CensusOptions& opts) {
  std::map<std::string, CensusRecord> all;
  std::vector<CensusRecord> partial(graphs.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i; (i = next.fetch_add(1)) < graphs.size();) {
      if (graphs[i].edge_count() == 0) {
        if (opts.include_degenerate) partial[i] = degenerate_record(graphs[i].order());
      } else {
        partial[i] = classify(graphs[i]);
      }
    }
  };
  int threads = std::max(1, opts.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (const CensusRecord& rec : partial)
    if (!rec.graph6.empty()) merge_record(all, rec);
  std::vector<CensusRecord> out;
  for (auto& [key, rec] : all) out.push_back(rec);
  return out;
}

}  // namespace magicdist
