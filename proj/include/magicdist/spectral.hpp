// Spectral side of distance magic testing: exact integer characteristic
// polynomials, a dense symmetric eigensolver, main angles, cone-cover
// polynomials, Moore-Penrose based filters, and matrix forms of the magic
// condition.
#pragma once

#include <utility>
#include <vector>

#include "magicdist/graph.hpp"
#include "magicdist/labeling.hpp"
#include "magicdist/structural.hpp"

namespace magicdist {

using IntMatrix = std::vector<std::vector<long long>>;
using Matrix = std::vector<std::vector<double>>;

// Monic integer polynomial, coefficients ascending: c[0] + c[1] y + ...
struct IntPoly {
  std::vector<long long> c;
  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool operator==(const IntPoly& o) const { return c == o.c; }
};

IntPoly poly_mul(const IntPoly& a, const IntPoly& b);

struct MatrixBundle {
  IntMatrix adjacency;
  IntMatrix degree;
  IntMatrix laplacian;  // degree - adjacency
  IntMatrix all_ones;
  std::vector<long long> ones;
};

MatrixBundle matrices(const Graph& g);
Matrix double_matrix(const IntMatrix& m);

// det(yI - A), computed exactly over the integers (Faddeev-LeVerrier with
// arbitrary-precision intermediates).
IntPoly char_poly(const Graph& g);

// Exact: constant coefficient of char_poly is zero.
bool is_singular(const Graph& g);

// Exact: the spectrum consists of integers only. Zero roots are stripped
// first, then candidate integer roots (divisors of the constant term, bounded
// by the maximum degree) are removed by synthetic division; integral iff the
// polynomial reduces to 1.
bool is_integral(const Graph& g);

struct EigenGroup {
  double value = 0;  // representative (mean of the grouped eigenvalues)
  int first = 0;     // index into eigenvalues/vectors
  int count = 0;
};

struct SpectralDecomposition {
  std::vector<double> eigenvalues;  // descending, with multiplicity
  std::vector<std::vector<double>> vectors;  // vectors[i] pairs with eigenvalues[i], orthonormal
  std::vector<EigenGroup> groups;   // multiplicity grouping at tolerance 1e-7
  double residual = 0;              // max-norm of M v - lambda v over all pairs
};

// Cyclic Jacobi rotations until the off-diagonal Frobenius norm drops below
// tol * ||M||. Throws std::invalid_argument unless M is symmetric.
SpectralDecomposition eig_sym(const Matrix& m, double tol = 1e-12);

struct MainAngle {
  double eigenvalue = 0;
  double beta = 0;  // ||P_i 1|| / sqrt(n) for the eigenspace projector P_i
};

// One entry per distinct eigenvalue, descending; the betas satisfy
// sum beta^2 = 1.
std::vector<MainAngle> main_angles(const Graph& g);

// Characteristic polynomial of the cone K1 v G via the main-angle formula
// P_G(y) * (y - sum_i n beta_i^2 / (y - mu_i)), expanded numerically.
// Coefficients ascending, degree n+1.
std::vector<double> cone_charpoly(const Graph& g);

// Exact closed form for the cone over complete_minus_matching(m):
// y^(m/2) (y+2)^(m/2-1) (y^2 + (2-m) y - m).
IntPoly knm_cone_charpoly(int m);

// Pseudoinverse of a symmetric matrix via its eigendecomposition; eigenvalues
// of magnitude <= tol * ||M|| are treated as zero.
Matrix moore_penrose(const Matrix& m, double tol = 1e-9);

struct PinvReport {
  bool doubly_stochastic = false;  // necessary for distance magic
  std::vector<double> row_sums;    // of A A^+
  std::vector<double> col_sums;
};

// Checks that A A^+ is doubly stochastic (row and column sums 1 within 1e-7).
PinvReport pinv_filter(const Graph& g);

// Matrix form of the magic condition: with T the lower-triangular all-ones
// matrix (T 1 = (1..n)^t) and P the permutation matrix sending T 1 to the
// label vector, tests A P T 1 = k 1 in exact integer arithmetic. Agrees with
// verify_distance_magic on every input.
bool apt_check(const Graph& g, const Labeling& f);

// For connected r-regular graphs with r even: f is distance magic iff
// (L^2 + A^2) x = r^2 x, checked exactly. Throws std::domain_error when the
// graph is not connected even-regular.
bool l2a2_check(const Graph& g, const Labeling& f);

// For an even-regular graph with verified labeling x, w = x - ((n+1)/2) 1 is
// a zero eigenvector; asserts A w = 0 exactly (scaled by 2) and that the
// sorted entries are (1-n)/2, (3-n)/2, ..., (n-1)/2. Returns w.
std::vector<double> even_regular_zero_witness(const Graph& g, const Labeling& f);

// Fast reject: an even-regular graph whose adjacency matrix is nonsingular
// cannot be distance magic.
FilterVerdict even_regular_singular_filter(const Graph& g);

bool is_perfect_square(unsigned long long v);

}  // namespace magicdist
