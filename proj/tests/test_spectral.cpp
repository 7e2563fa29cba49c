#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "magicdist/search.hpp"
#include "magicdist/spectral.hpp"
#include "oracles.hpp"

using namespace magicdist;

namespace {

Matrix random_01_symmetric(int n, std::mt19937& rng) {
  Matrix m(n, std::vector<double>(n, 0));
  std::bernoulli_distribution flip(0.5);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) m[i][j] = m[j][i] = flip(rng) ? 1.0 : 0.0;
  return m;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  size_t n = a.size();
  Matrix c(n, std::vector<double>(n, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k)
      for (size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  double d = 0;
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a.size(); ++j) d = std::max(d, std::abs(a[i][j] - b[i][j]));
  return d;
}

}  // namespace

TEST_CASE("char_poly matches hand-expanded cases") {
  CHECK(char_poly(Graph::from_edge_list(1, {})).c == std::vector<long long>{0, 1});
  CHECK(char_poly(path_graph(3)).c == std::vector<long long>{0, -2, 0, 1});
  CHECK(char_poly(cycle_graph(4)).c == std::vector<long long>{0, 0, -4, 0, 1});
  // y^3 (y+2)^2 (y-4) = y^6 - 12 y^4 - 16 y^3
  CHECK(char_poly(complete_minus_matching(6)).c ==
        std::vector<long long>{0, 0, 0, -16, -12, 0, 1});
}

TEST_CASE("char_poly agrees with the numeric spectrum") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 2 + static_cast<int>(rng() % 7);
    Graph g = oracles::random_graph(n, rng);
    IntPoly cp = char_poly(g);
    SpectralDecomposition eig = eig_sym(double_matrix(matrices(g).adjacency));
    // evaluate the exact polynomial at each numeric eigenvalue
    for (double lambda : eig.eigenvalues) {
      double value = 0, pw = 1;
      for (long long c : cp.c) {
        value += static_cast<double>(c) * pw;
        pw *= lambda;
      }
      CHECK(std::abs(value) < 1e-6 * (1 + std::pow(std::abs(lambda) + 1, n)));
    }
  }
}

TEST_CASE("matrices bundle is consistent") {
  Graph g = path_graph(3);
  MatrixBundle b = matrices(g);
  CHECK(b.adjacency == IntMatrix{{0, 1, 0}, {1, 0, 1}, {0, 1, 0}});
  CHECK(b.degree == IntMatrix{{1, 0, 0}, {0, 2, 0}, {0, 0, 1}});
  CHECK(b.laplacian == IntMatrix{{1, -1, 0}, {-1, 2, -1}, {0, -1, 1}});
  CHECK(b.all_ones == IntMatrix{{1, 1, 1}, {1, 1, 1}, {1, 1, 1}});
  CHECK(b.ones == std::vector<long long>{1, 1, 1});
}

TEST_CASE("is_singular") {
  CHECK(is_singular(path_graph(3)));
  CHECK_FALSE(is_singular(path_graph(4)));
  CHECK(is_singular(cycle_graph(4)));
  CHECK_FALSE(is_singular(cycle_graph(6)));
  CHECK(is_singular(complete_minus_matching(6)));
  CHECK_FALSE(is_singular(fig_ndm()));
}

TEST_CASE("is_integral") {
  CHECK(is_integral(complete_graph(4)));            // {3, -1, -1, -1}
  CHECK(is_integral(cycle_graph(4)));               // {2, 0, 0, -2}
  CHECK(is_integral(complete_minus_matching(8)));   // {6, 0^4, -2^3}
  CHECK_FALSE(is_integral(path_graph(3)));          // {sqrt2, 0, -sqrt2}
  CHECK_FALSE(is_integral(cycle_graph(5)));
  for (int m = 4; m <= 10; m += 2) CHECK_FALSE(is_integral(cone_cover(complete_minus_matching(m))));
}

TEST_CASE("eig_sym recovers the K6-M spectrum") {
  SpectralDecomposition eig = eig_sym(double_matrix(matrices(complete_minus_matching(6)).adjacency));
  std::vector<double> want = {4, 0, 0, 0, -2, -2};
  REQUIRE(eig.eigenvalues.size() == 6);
  for (int i = 0; i < 6; ++i) CHECK(eig.eigenvalues[i] == doctest::Approx(want[i]).epsilon(1e-8));
  REQUIRE(eig.groups.size() == 3);
  CHECK(eig.groups[0].count == 1);
  CHECK(eig.groups[1].count == 3);
  CHECK(eig.groups[2].count == 2);
  CHECK(eig.residual < 1e-8);
}

TEST_CASE("eig_sym eigenpairs and orthonormality on random matrices") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 1 + static_cast<int>(rng() % 10);
    Matrix m = random_01_symmetric(n, rng);
    SpectralDecomposition eig = eig_sym(m);
    double trace = 0, sum = 0;
    for (int i = 0; i < n; ++i) {
      trace += m[i][i];
      sum += eig.eigenvalues[i];
    }
    CHECK(std::abs(trace - sum) < 1e-8 * (1 + std::abs(trace)));
    CHECK(eig.residual < 1e-9 * (1 + n));
    // residual recomputed independently
    for (int i = 0; i < n; ++i) {
      for (int r = 0; r < n; ++r) {
        double av = 0;
        for (int c = 0; c < n; ++c) av += m[r][c] * eig.vectors[i][c];
        CHECK(std::abs(av - eig.eigenvalues[i] * eig.vectors[i][r]) < 1e-8);
      }
      for (int j = 0; j < n; ++j) {
        double dot = 0;
        for (int c = 0; c < n; ++c) dot += eig.vectors[i][c] * eig.vectors[j][c];
        CHECK(std::abs(dot - (i == j ? 1.0 : 0.0)) < 1e-9);
      }
    }
  }
  CHECK_THROWS_AS(eig_sym({{0, 1}, {2, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(eig_sym({{0, 1}}), std::invalid_argument);
}

TEST_CASE("main angles of regular connected graphs put all weight on the top eigenvalue") {
  for (const Graph& g : {cycle_graph(4), complete_minus_matching(6), complete_graph(5)}) {
    std::vector<MainAngle> mas = main_angles(g);
    REQUIRE(!mas.empty());
    CHECK(mas[0].beta == doctest::Approx(1.0).epsilon(1e-8));
    for (size_t i = 1; i < mas.size(); ++i) CHECK(std::abs(mas[i].beta) < 1e-7);
  }
}

TEST_CASE("main angle norms sum to one") {
  std::mt19937 rng(17);
  std::vector<Graph> graphs = {path_graph(3), cycle_graph(4), complete_minus_matching(6),
                               fig_ndm(), disjoint_union(path_graph(3), cycle_graph(4))};
  for (int trial = 0; trial < 15; ++trial) graphs.push_back(oracles::random_graph(6, rng));
  for (const Graph& g : graphs) {
    double total = 0;
    for (const MainAngle& a : main_angles(g)) total += a.beta * a.beta;
    CHECK(total == doctest::Approx(1.0).epsilon(1e-8));
  }
}

TEST_CASE("cone_charpoly matches the exact polynomial of the built cone") {
  std::mt19937 rng(19);
  std::vector<Graph> bases = {cycle_graph(4), path_graph(3), complete_minus_matching(6)};
  for (int trial = 0; trial < 10; ++trial) bases.push_back(oracles::random_graph(5, rng));
  for (const Graph& g : bases) {
    std::vector<double> approx = cone_charpoly(g);
    IntPoly exact = char_poly(cone_cover(g));
    REQUIRE(approx.size() == exact.c.size());
    for (size_t i = 0; i < approx.size(); ++i)
      CHECK(approx[i] == doctest::Approx(static_cast<double>(exact.c[i])).epsilon(1e-6).scale(1 + std::abs(static_cast<double>(exact.c[i]))));
  }
}

TEST_CASE("knm_cone_charpoly closed form is exact") {
  // m = 4: y^2 (y+2) (y^2 - 2y - 4) = y^5 - 8 y^3 - 8 y^2
  CHECK(knm_cone_charpoly(4).c == std::vector<long long>{0, 0, -8, -8, 0, 1});
  for (int m = 4; m <= 10; m += 2)
    CHECK(knm_cone_charpoly(m) == char_poly(cone_cover(complete_minus_matching(m))));
  CHECK_THROWS_AS(knm_cone_charpoly(3), std::invalid_argument);
  CHECK_THROWS_AS(knm_cone_charpoly(2), std::invalid_argument);
}

TEST_CASE("moore_penrose of the star matches the block form") {
  Graph star = Graph::from_edge_list(4, {{1, 2}, {1, 3}, {1, 4}});
  Matrix a = double_matrix(matrices(star).adjacency);
  Matrix pinv = moore_penrose(a);
  // A+ = A / 3 for K_{1,3}
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(pinv[i][j] == doctest::Approx(a[i][j] / 3.0).epsilon(1e-9));
  Matrix s = multiply(a, pinv);
  Matrix want = {{1, 0, 0, 0},
                 {0, 1.0 / 3, 1.0 / 3, 1.0 / 3},
                 {0, 1.0 / 3, 1.0 / 3, 1.0 / 3},
                 {0, 1.0 / 3, 1.0 / 3, 1.0 / 3}};
  CHECK(max_abs_diff(s, want) < 1e-9);
}

TEST_CASE("Penrose identities on random symmetric 0/1 matrices") {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 1 + static_cast<int>(rng() % 8);
    Matrix a = random_01_symmetric(n, rng);
    Matrix p = moore_penrose(a);
    Matrix ap = multiply(a, p), pa = multiply(p, a);
    CHECK(max_abs_diff(multiply(ap, a), a) < 1e-7);
    CHECK(max_abs_diff(multiply(pa, p), p) < 1e-7);
    // symmetry of A P and P A
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        CHECK(std::abs(ap[i][j] - ap[j][i]) < 1e-7);
        CHECK(std::abs(pa[i][j] - pa[j][i]) < 1e-7);
      }
  }
}

TEST_CASE("pinv_filter") {
  PinvReport star = pinv_filter(Graph::from_edge_list(4, {{1, 2}, {1, 3}, {1, 4}}));
  CHECK(star.doubly_stochastic);
  REQUIRE(star.row_sums.size() == 4);
  for (double s : star.row_sums) CHECK(s == doctest::Approx(1.0).epsilon(1e-7));
  for (double s : star.col_sums) CHECK(s == doctest::Approx(1.0).epsilon(1e-7));

  CHECK(pinv_filter(path_graph(4)).doubly_stochastic);   // nonsingular: A A+ = I
  CHECK_FALSE(pinv_filter(path_graph(5)).doubly_stochastic);
  CHECK(pinv_filter(cycle_graph(4)).doubly_stochastic);
  CHECK(pinv_filter(complete_minus_matching(6)).doubly_stochastic);
}

TEST_CASE("apt_check agrees with verification everywhere") {
  Graph p3 = path_graph(3);
  CHECK(apt_check(p3, Labeling({1, 3, 2})));
  CHECK_FALSE(apt_check(p3, Labeling({1, 2, 3})));

  std::mt19937 rng(37);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 2 + static_cast<int>(rng() % 5);
    Graph g = oracles::random_graph(n, rng);
    std::vector<int> values(n);
    std::iota(values.begin(), values.end(), 1);
    std::shuffle(values.begin(), values.end(), rng);
    Labeling f(values);
    CHECK(apt_check(g, f) == verify_distance_magic(g, f).ok());
  }
}

TEST_CASE("l2a2_check characterizes magic labelings of connected even-regular graphs") {
  Graph c4 = cycle_graph(4);
  std::vector<int> values = {1, 2, 3, 4};
  std::sort(values.begin(), values.end());
  do {
    Labeling f(values);
    CHECK(l2a2_check(c4, f) == verify_distance_magic(c4, f).ok());
  } while (std::next_permutation(values.begin(), values.end()));

  Graph knm = complete_minus_matching(6);
  CHECK(l2a2_check(knm, Labeling({1, 2, 3, 6, 5, 4})));  // pairs (1,4),(2,5),(3,6) sum 7
  CHECK_FALSE(l2a2_check(knm, Labeling({1, 2, 3, 4, 5, 6})));

  CHECK_THROWS_AS(l2a2_check(path_graph(3), Labeling({1, 3, 2})), std::domain_error);    // irregular
  CHECK_THROWS_AS(l2a2_check(complete_graph(4), Labeling({1, 2, 3, 4})), std::domain_error);  // odd r
  CHECK_THROWS_AS(
      l2a2_check(disjoint_union(cycle_graph(4), cycle_graph(4)),
                 Labeling({1, 2, 8, 7, 3, 4, 6, 5})),
      std::domain_error);  // disconnected
}

TEST_CASE("even_regular_zero_witness") {
  Graph c4 = cycle_graph(4);
  std::vector<double> w = even_regular_zero_witness(c4, Labeling({1, 2, 4, 3}));
  CHECK(w == std::vector<double>{-1.5, -0.5, 1.5, 0.5});
  CHECK_THROWS_AS(even_regular_zero_witness(path_graph(3), Labeling({1, 3, 2})),
                  std::domain_error);
  CHECK_THROWS_AS(even_regular_zero_witness(c4, Labeling({1, 2, 3, 4})), std::domain_error);
}

TEST_CASE("even_regular_singular_filter") {
  CHECK_FALSE(even_regular_singular_filter(cycle_graph(6)).pass);  // det(C6) = -4
  CHECK(even_regular_singular_filter(cycle_graph(4)).pass);
  CHECK(even_regular_singular_filter(complete_minus_matching(6)).pass);
  CHECK(even_regular_singular_filter(path_graph(5)).pass);  // inapplicable: irregular
  CHECK(even_regular_singular_filter(complete_graph(4)).pass);  // inapplicable: odd degree
}

TEST_CASE("is_perfect_square") {
  CHECK(is_perfect_square(0));
  CHECK(is_perfect_square(1));
  CHECK(is_perfect_square(144));
  CHECK(is_perfect_square(1ull << 40));
  CHECK_FALSE(is_perfect_square(2));
  CHECK_FALSE(is_perfect_square(143));
  CHECK_FALSE(is_perfect_square((1ull << 40) + 1));
  // the cone spectra discriminant m^2 + 4 is never a square for m >= 1
  for (unsigned long long m = 1; m <= 5000; ++m) CHECK_FALSE(is_perfect_square(m * m + 4));
}
