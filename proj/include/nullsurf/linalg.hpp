#ifndef NULLSURF_LINALG_HPP_
#define NULLSURF_LINALG_HPP_

#include <vector>

#include "nullsurf/errors.hpp"

namespace nullsurf {

// Ambient coordinate vector. Covectors are stored the same way, as their
// coefficient sequences.
using Vector = std::vector<double>;

// Euclidean (coordinate l2) helpers. All independence and residual tests use
// this auxiliary norm: null vectors have vanishing indefinite norm, so the
// indefinite metric cannot grade its own residuals.
double edot(const Vector& u, const Vector& v);
double enorm(const Vector& v);
Vector add(const Vector& u, const Vector& v);
Vector sub(const Vector& u, const Vector& v);
Vector scaled(const Vector& v, double c);
bool all_finite(const Vector& v);

// Small dense row-major matrix.
struct Mat {
  int rows = 0;
  int cols = 0;
  std::vector<double> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0.0) {}
  static Mat identity(int n);
  static Mat from_columns(const std::vector<Vector>& cols);

  double& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  double operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

  Vector apply(const Vector& v) const;
  Mat transposed() const;
  Mat times(const Mat& other) const;
  double max_abs() const;
};

// Square solve, LU with partial pivoting. Throws SingularSystem.
Vector solve(Mat A, Vector b);

// Euclidean least squares min ||A x - b||_2 via normal equations.
struct LeastSquares {
  Vector coeffs;
  double residual;  // euclidean norm of A x - b
};
LeastSquares least_squares(const std::vector<Vector>& columns, const Vector& b);

// Gauss elimination with pivoting on the largest absolute entry of the
// remaining submatrix. pivot_cols records the pivot columns in elimination
// order; basis spans the (right) nullspace, one vector per free column in
// ascending column order with that free slot set to 1.
struct NullspaceResult {
  std::vector<Vector> basis;
  std::vector<int> pivot_cols;
  int rank = 0;
};
NullspaceResult nullspace(Mat A, double tol);

int rank(Mat A, double tol);

// Gram rank with entries scaled by the Euclidean norms of the basis vectors.
// Signs are +-1, so normalized entries live in [-1, 1] and the tolerance is
// meaningful regardless of how long the basis vectors are.
int normalized_gram_rank(const std::vector<Vector>& basis, const Mat& gram, double tol);

// Diagonal indefinite metric diag(eps_1, ..., eps_2n, +1). Signs come in
// equal adjacent pairs so the paired complex rotation is an isometry, and at
// least one pair is negative (otherwise no null directions exist).
class Metric {
 public:
  Metric() = default;
  static Metric from_pair_signs(const std::vector<int>& signs);
  static Metric from_diagonal(const std::vector<double>& diagonal);

  int dim() const { return static_cast<int>(diag_.size()); }
  int pairs() const { return (dim() - 1) / 2; }
  double sign(int i) const { return diag_[static_cast<std::size_t>(i)]; }
  const std::vector<double>& diagonal() const { return diag_; }

 private:
  explicit Metric(std::vector<double> diag) : diag_(std::move(diag)) {}
  std::vector<double> diag_;
};

// g(u, v) = sum_i eps_i u_i v_i
double inner(const Metric& g, const Vector& u, const Vector& v);

// covector -> vector, componentwise division by eps_i
Vector raise_index(const Metric& g, const Vector& covector);

// vector -> covector
Vector lower_index(const Metric& g, const Vector& v);

// det of the 2x2 Gram matrix of {u, v}: g(u,u) g(v,v) - g(u,v)^2
double gram_det2(const Metric& g, const Vector& u, const Vector& v);

struct Subspace {
  std::vector<Vector> basis;
  Mat gram;  // pairwise indefinite inner products
  int dim() const { return static_cast<int>(basis.size()); }
};

// Validates linear independence of the basis (Euclidean rank test).
Subspace make_subspace(const Metric& g, std::vector<Vector> basis, double tol);

// Perpendicular complement of `span` inside `within`:
//   { w in within : g(w, s) = 0 for all s in span }.
// Pre: span is contained in within (up to tol). With require_direct_sum the
// restriction of g to span must be non-singular, else DegenerateSpan.
// pivot_cols, when given, receives the constraint elimination pivots.
Subspace orthocomplement(const Metric& g, const Subspace& span, const Subspace& within,
                         double tol, bool require_direct_sum = false,
                         std::vector<int>* pivot_cols = nullptr);

}  // namespace nullsurf

#endif  // NULLSURF_LINALG_HPP_
