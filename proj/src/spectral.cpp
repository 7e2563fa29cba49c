#include "magicdist/spectral.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace magicdist {

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
  IntPoly out;
  out.c.assign(a.c.size() + b.c.size() - 1, 0);
  for (size_t i = 0; i < a.c.size(); ++i)
    for (size_t j = 0; j < b.c.size(); ++j) out.c[i + j] += a.c[i] * b.c[j];
  return out;
}

MatrixBundle matrices(const Graph& g) {
  int n = g.order();
  MatrixBundle b;
  b.adjacency.assign(n, std::vector<long long>(n, 0));
  b.degree.assign(n, std::vector<long long>(n, 0));
  b.laplacian.assign(n, std::vector<long long>(n, 0));
  b.all_ones.assign(n, std::vector<long long>(n, 1));
  b.ones.assign(n, 1);
  for (int v = 1; v <= n; ++v) {
    b.degree[v - 1][v - 1] = g.degree(v);
    b.laplacian[v - 1][v - 1] = g.degree(v);
    for (int u : g.neighbors(v)) {
      b.adjacency[v - 1][u - 1] = 1;
      b.laplacian[v - 1][u - 1] = -1;
    }
  }
  return b;
}

Matrix double_matrix(const IntMatrix& m) {
  Matrix out(m.size());
  for (size_t i = 0; i < m.size(); ++i) out[i].assign(m[i].begin(), m[i].end());
  return out;
}

// ---- exact characteristic polynomial ----

namespace {

using BigMatrix = std::vector<std::vector<mpz_class>>;

long long to_ll(const mpz_class& v) {
  if (!v.fits_slong_p()) throw std::overflow_error("char poly coefficient exceeds 64 bits");
  return v.get_si();
}

}  // namespace

IntPoly char_poly(const Graph& g) {
  int n = g.order();
  BigMatrix a(n, std::vector<mpz_class>(n, 0));
  for (int v = 1; v <= n; ++v)
    for (int u : g.neighbors(v)) a[v - 1][u - 1] = 1;

  // Faddeev-LeVerrier: M_1 = A, a_k = -tr(M_k)/k, M_{k+1} = A (M_k + a_k I).
  // Every division is exact; intermediates can outgrow 64 bits, hence mpz.
  std::vector<mpz_class> coef(n + 1);
  coef[n] = 1;
  BigMatrix m = a;
  for (int k = 1; k <= n; ++k) {
    mpz_class tr = 0;
    for (int i = 0; i < n; ++i) tr += m[i][i];
    mpz_class ak = -tr / k;
    coef[n - k] = ak;
    if (k == n) break;
    for (int i = 0; i < n; ++i) m[i][i] += ak;
    BigMatrix next(n, std::vector<mpz_class>(n, 0));
    for (int i = 0; i < n; ++i)
      for (int l = 0; l < n; ++l) {
        if (a[i][l] == 0) continue;
        for (int j = 0; j < n; ++j) next[i][j] += m[l][j];
      }
    m = std::move(next);
  }

  IntPoly out;
  out.c.resize(n + 1);
  for (int i = 0; i <= n; ++i) out.c[i] = to_ll(coef[i]);
  return out;
}

bool is_singular(const Graph& g) { return char_poly(g).c[0] == 0; }

bool is_integral(const Graph& g) {
  IntPoly cp = char_poly(g);
  std::vector<mpz_class> p;
  p.reserve(cp.c.size());
  for (long long c : cp.c) p.emplace_back(static_cast<long>(c));

  size_t zeros = 0;
  while (zeros + 1 < p.size() && p[zeros] == 0) ++zeros;
  p.erase(p.begin(), p.begin() + zeros);

  std::vector<int> ds = g.degrees();
  int bound = *std::max_element(ds.begin(), ds.end());
  for (int d = 1; d <= bound; ++d) {
    for (int root : {d, -d}) {
      for (;;) {
        if (p.size() == 1) return p[0] == 1;
        if (p[0] % root != 0) break;
        // Synthetic division by (y - root), exact or bail.
        std::vector<mpz_class> q(p.size() - 1);
        mpz_class carry = 0;
        for (size_t i = p.size(); i-- > 1;) {
          carry = p[i] + carry * root;
          q[i - 1] = carry;
        }
        if (p[0] + carry * root != 0) break;
        p = std::move(q);
      }
    }
  }
  return p.size() == 1 && p[0] == 1;
}

// ---- dense symmetric eigensolver ----

SpectralDecomposition eig_sym(const Matrix& m, double tol) {
  size_t n = m.size();
  if (n == 0) throw std::invalid_argument("eig_sym: empty matrix");
  double scale = 0;
  for (size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw std::invalid_argument("eig_sym: matrix not square");
    for (size_t j = 0; j < n; ++j) scale = std::max(scale, std::abs(m[i][j]));
  }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (std::abs(m[i][j] - m[j][i]) > 1e-12 * (1 + scale))
        throw std::invalid_argument("eig_sym: matrix not symmetric");

  Matrix b = m;
  Matrix v(n, std::vector<double>(n, 0));
  for (size_t i = 0; i < n; ++i) v[i][i] = 1;

  double norm = 0;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) norm += b[i][j] * b[i][j];
  norm = std::sqrt(norm);

  for (int sweep = 0; sweep < 128 && norm > 0; ++sweep) {
    double off = 0;
    for (size_t i = 0; i < n; ++i)
      for (size_t j = i + 1; j < n; ++j) off += 2 * b[i][j] * b[i][j];
    if (std::sqrt(off) < tol * norm) break;

    for (size_t p = 0; p < n; ++p) {
      for (size_t q = p + 1; q < n; ++q) {
        if (b[p][q] == 0) continue;
        double tau = (b[q][q] - b[p][p]) / (2 * b[p][q]);
        double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1 + tau * tau));
        double c = 1 / std::sqrt(1 + t * t);
        double s = t * c;
        for (size_t i = 0; i < n; ++i) {
          double bip = b[i][p], biq = b[i][q];
          b[i][p] = c * bip - s * biq;
          b[i][q] = s * bip + c * biq;
        }
        for (size_t i = 0; i < n; ++i) {
          double bpi = b[p][i], bqi = b[q][i];
          b[p][i] = c * bpi - s * bqi;
          b[q][i] = s * bpi + c * bqi;
          double vip = v[i][p], viq = v[i][q];
          v[i][p] = c * vip - s * viq;
          v[i][q] = s * vip + c * viq;
        }
      }
    }
  }

  std::vector<size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](size_t x, size_t y) { return b[x][x] > b[y][y]; });

  SpectralDecomposition out;
  out.eigenvalues.resize(n);
  out.vectors.assign(n, std::vector<double>(n));
  for (size_t i = 0; i < n; ++i) {
    out.eigenvalues[i] = b[order[i]][order[i]];
    for (size_t r = 0; r < n; ++r) out.vectors[i][r] = v[r][order[i]];
  }

  double gtol = 1e-7 * (1 + (n ? std::abs(out.eigenvalues[0]) : 0));
  for (size_t i = 0; i < n;) {
    size_t j = i;
    while (j + 1 < n && out.eigenvalues[i] - out.eigenvalues[j + 1] <= gtol) ++j;
    double mean = 0;
    for (size_t t = i; t <= j; ++t) mean += out.eigenvalues[t];
    out.groups.push_back({mean / (j - i + 1), static_cast<int>(i), static_cast<int>(j - i + 1)});
    i = j + 1;
  }

  for (size_t i = 0; i < n; ++i) {
    for (size_t r = 0; r < n; ++r) {
      double mv = 0;
      for (size_t c2 = 0; c2 < n; ++c2) mv += m[r][c2] * out.vectors[i][c2];
      out.residual = std::max(out.residual, std::abs(mv - out.eigenvalues[i] * out.vectors[i][r]));
    }
  }
  return out;
}

std::vector<MainAngle> main_angles(const Graph& g) {
  int n = g.order();
  SpectralDecomposition dec = eig_sym(double_matrix(matrices(g).adjacency));
  std::vector<MainAngle> out;
  for (const EigenGroup& grp : dec.groups) {
    // ||P 1||^2 = sum over the group's orthonormal basis of <1, b>^2.
    double norm2 = 0;
    for (int i = grp.first; i < grp.first + grp.count; ++i) {
      double dot = 0;
      for (double x : dec.vectors[i]) dot += x;
      norm2 += dot * dot;
    }
    out.push_back({grp.value, std::sqrt(norm2 / n)});
  }
  return out;
}

namespace {

// Quotient of p by (y - root); p's leading coefficient carries down.
std::vector<double> synthetic_quotient(const std::vector<double>& p, double root) {
  std::vector<double> q(p.size() - 1);
  double carry = 0;
  for (size_t i = p.size(); i-- > 1;) {
    carry = p[i] + carry * root;
    q[i - 1] = carry;
  }
  return q;
}

}  // namespace

std::vector<double> cone_charpoly(const Graph& g) {
  int n = g.order();
  IntPoly cp = char_poly(g);
  std::vector<double> pg(cp.c.begin(), cp.c.end());
  std::vector<MainAngle> angles = main_angles(g);

  std::vector<double> out(n + 2, 0);
  for (int i = 0; i <= n; ++i) out[i + 1] = pg[i];  // P_G(y) * y
  for (const MainAngle& a : angles) {
    std::vector<double> q = synthetic_quotient(pg, a.eigenvalue);
    for (size_t i = 0; i < q.size(); ++i) out[i] -= n * a.beta * a.beta * q[i];
  }
  return out;
}

IntPoly knm_cone_charpoly(int m) {
  if (m < 4 || m % 2 != 0) throw std::invalid_argument("closed form needs even m >= 4");
  IntPoly out{{1}};
  IntPoly y{{0, 1}};
  IntPoly y_plus_2{{2, 1}};
  for (int i = 0; i < m / 2; ++i) out = poly_mul(out, y);
  for (int i = 0; i < m / 2 - 1; ++i) out = poly_mul(out, y_plus_2);
  return poly_mul(out, IntPoly{{-static_cast<long long>(m), 2 - static_cast<long long>(m), 1}});
}

Matrix moore_penrose(const Matrix& m, double tol) {
  SpectralDecomposition dec = eig_sym(m);
  size_t n = m.size();
  double top = 0;
  for (double ev : dec.eigenvalues) top = std::max(top, std::abs(ev));
  Matrix out(n, std::vector<double>(n, 0));
  for (size_t i = 0; i < n; ++i) {
    if (std::abs(dec.eigenvalues[i]) <= tol * top) continue;
    double inv = 1 / dec.eigenvalues[i];
    for (size_t r = 0; r < n; ++r)
      for (size_t c = 0; c < n; ++c) out[r][c] += inv * dec.vectors[i][r] * dec.vectors[i][c];
  }
  return out;
}

PinvReport pinv_filter(const Graph& g) {
  int n = g.order();
  Matrix a = double_matrix(matrices(g).adjacency);
  Matrix p = moore_penrose(a);
  PinvReport rep;
  rep.row_sums.assign(n, 0);
  rep.col_sums.assign(n, 0);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      double s = 0;
      for (int t = 0; t < n; ++t) s += a[r][t] * p[t][c];
      rep.row_sums[r] += s;
      rep.col_sums[c] += s;
    }
  rep.doubly_stochastic = true;
  for (int i = 0; i < n; ++i)
    if (std::abs(rep.row_sums[i] - 1) > 1e-7 || std::abs(rep.col_sums[i] - 1) > 1e-7)
      rep.doubly_stochastic = false;
  return rep;
}

bool apt_check(const Graph& g, const Labeling& f) {
  int n = g.order();
  if (f.size() != n) throw std::invalid_argument("labeling length differs from graph order");
  IntMatrix a = matrices(g).adjacency;

  IntMatrix t(n, std::vector<long long>(n, 0));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c <= r; ++c) t[r][c] = 1;
  IntMatrix p(n, std::vector<long long>(n, 0));
  for (int v = 1; v <= n; ++v) p[v - 1][f(v) - 1] = 1;

  auto apply = [n](const IntMatrix& m, const std::vector<long long>& x) {
    std::vector<long long> y(n, 0);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) y[r] += m[r][c] * x[c];
    return y;
  };

  std::vector<long long> y = apply(a, apply(p, apply(t, std::vector<long long>(n, 1))));
  for (int i = 1; i < n; ++i)
    if (y[i] != y[0]) return false;
  return true;
}

bool l2a2_check(const Graph& g, const Labeling& f) {
  int n = g.order();
  int r = g.regularity();
  if (r < 0 || r % 2 != 0 || !is_connected(g))
    throw std::domain_error("check applies to connected even-regular graphs only");
  if (f.size() != n) throw std::invalid_argument("labeling length differs from graph order");

  MatrixBundle b = matrices(g);
  auto mul = [n](const IntMatrix& x, const IntMatrix& y) {
    IntMatrix z(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i)
      for (int l = 0; l < n; ++l) {
        if (x[i][l] == 0) continue;
        for (int j = 0; j < n; ++j) z[i][j] += x[i][l] * y[l][j];
      }
    return z;
  };
  IntMatrix l2 = mul(b.laplacian, b.laplacian);
  IntMatrix a2 = mul(b.adjacency, b.adjacency);

  for (int i = 0; i < n; ++i) {
    long long lhs = 0;
    for (int j = 0; j < n; ++j) lhs += (l2[i][j] + a2[i][j]) * f(j + 1);
    if (lhs != static_cast<long long>(r) * r * f(i + 1)) return false;
  }
  return true;
}

std::vector<double> even_regular_zero_witness(const Graph& g, const Labeling& f) {
  int n = g.order();
  int r = g.regularity();
  if (r < 0 || r % 2 != 0) throw std::domain_error("witness applies to even-regular graphs only");
  if (!verify_distance_magic(g, f).ok())
    throw std::domain_error("witness needs a verified distance magic labeling");

  // Scaled by 2 to stay integral: w2 = 2x - (n+1) 1.
  std::vector<long long> w2(n);
  for (int v = 1; v <= n; ++v) w2[v - 1] = 2ll * f(v) - (n + 1);
  for (int v = 1; v <= n; ++v) {
    long long s = 0;
    for (int u : g.neighbors(v)) s += w2[u - 1];
    if (s != 0) throw std::logic_error("zero eigenvector identity failed");
  }
  std::vector<long long> sorted = w2;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < n; ++i)
    if (sorted[i] != 2ll * (i + 1) - (n + 1))
      throw std::logic_error("witness entries are not (1-n)/2 .. (n-1)/2");

  std::vector<double> w(n);
  for (int i = 0; i < n; ++i) w[i] = w2[i] / 2.0;
  return w;
}

FilterVerdict even_regular_singular_filter(const Graph& g) {
  int r = g.regularity();
  if (r < 0 || r % 2 != 0) return {};
  if (!is_singular(g)) return {false, "even-regular with nonsingular adjacency matrix", {}};
  return {};
}

bool is_perfect_square(unsigned long long v) {
  auto r = static_cast<unsigned long long>(std::sqrt(static_cast<double>(v)));
  for (unsigned long long c = r > 1 ? r - 1 : 0; c <= r + 1; ++c)
    if (c * c == v) return true;
  return false;
}

}  // namespace magicdist
