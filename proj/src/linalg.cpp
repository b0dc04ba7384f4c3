#include "nullsurf/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace nullsurf {

namespace {

void require_same_dim(const Vector& u, const Vector& v, const char* what) {
  if (u.size() != v.size())
    throw DimensionMismatch(std::string(what) + ": dimensions " + std::to_string(u.size()) +
                            " vs " + std::to_string(v.size()));
}

}  // namespace

double edot(const Vector& u, const Vector& v) {
  require_same_dim(u, v, "edot");
  double s = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
  return s;
}

double enorm(const Vector& v) { return std::sqrt(edot(v, v)); }

Vector add(const Vector& u, const Vector& v) {
  require_same_dim(u, v, "add");
  Vector r(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) r[i] = u[i] + v[i];
  return r;
}

Vector sub(const Vector& u, const Vector& v) {
  require_same_dim(u, v, "sub");
  Vector r(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) r[i] = u[i] - v[i];
  return r;
}

Vector scaled(const Vector& v, double c) {
  Vector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
  return r;
}

bool all_finite(const Vector& v) {
  for (double x : v)
    if (!std::isfinite(x)) return false;
  return true;
}

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Mat Mat::from_columns(const std::vector<Vector>& cols) {
  if (cols.empty()) return Mat();
  Mat m(static_cast<int>(cols.front().size()), static_cast<int>(cols.size()));
  for (int j = 0; j < m.cols; ++j) {
    if (static_cast<int>(cols[static_cast<std::size_t>(j)].size()) != m.rows)
      throw DimensionMismatch("from_columns: ragged columns");
    for (int i = 0; i < m.rows; ++i) m(i, j) = cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
  }
  return m;
}

Vector Mat::apply(const Vector& v) const {
  if (static_cast<int>(v.size()) != cols) throw DimensionMismatch("Mat::apply");
  Vector r(static_cast<std::size_t>(rows), 0.0);
  for (int i = 0; i < rows; ++i) {
    double s = 0.0;
    for (int j = 0; j < cols; ++j) s += (*this)(i, j) * v[static_cast<std::size_t>(j)];
    r[static_cast<std::size_t>(i)] = s;
  }
  return r;
}

Mat Mat::transposed() const {
  Mat t(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Mat Mat::times(const Mat& other) const {
  if (cols != other.rows) throw DimensionMismatch("Mat::times");
  Mat r(rows, other.cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) {
      const double aik = (*this)(i, k);
      if (aik == 0.0) continue;
      for (int j = 0; j < other.cols; ++j) r(i, j) += aik * other(k, j);
    }
  return r;
}

double Mat::max_abs() const {
  double m = 0.0;
  for (double x : a) m = std::max(m, std::abs(x));
  return m;
}

Vector solve(Mat A, Vector b) {
  if (A.rows != A.cols || static_cast<int>(b.size()) != A.rows)
    throw DimensionMismatch("solve: need square system");
  const int n = A.rows;
  for (int k = 0; k < n; ++k) {
    int piv = k;
    for (int i = k + 1; i < n; ++i)
      if (std::abs(A(i, k)) > std::abs(A(piv, k))) piv = i;
    if (A(piv, k) == 0.0) throw SingularSystem("solve: singular matrix");
    if (piv != k) {
      for (int j = k; j < n; ++j) std::swap(A(piv, j), A(k, j));
      std::swap(b[static_cast<std::size_t>(piv)], b[static_cast<std::size_t>(k)]);
    }
    for (int i = k + 1; i < n; ++i) {
      const double f = A(i, k) / A(k, k);
      if (f == 0.0) continue;
      for (int j = k; j < n; ++j) A(i, j) -= f * A(k, j);
      b[static_cast<std::size_t>(i)] -= f * b[static_cast<std::size_t>(k)];
    }
  }
  Vector x(static_cast<std::size_t>(n), 0.0);
  for (int i = n - 1; i >= 0; --i) {
    double s = b[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < n; ++j) s -= A(i, j) * x[static_cast<std::size_t>(j)];
    x[static_cast<std::size_t>(i)] = s / A(i, i);
  }
  return x;
}

LeastSquares least_squares(const std::vector<Vector>& columns, const Vector& b) {
  const int k = static_cast<int>(columns.size());
  if (k == 0) return {Vector{}, enorm(b)};
  Mat ata(k, k);
  Vector atb(static_cast<std::size_t>(k), 0.0);
  for (int i = 0; i < k; ++i) {
    for (int j = i; j < k; ++j) {
      const double v = edot(columns[static_cast<std::size_t>(i)], columns[static_cast<std::size_t>(j)]);
      ata(i, j) = v;
      ata(j, i) = v;
    }
    atb[static_cast<std::size_t>(i)] = edot(columns[static_cast<std::size_t>(i)], b);
  }
  Vector x = solve(ata, atb);
  Vector r = b;
  for (int j = 0; j < k; ++j) r = sub(r, scaled(columns[static_cast<std::size_t>(j)], x[static_cast<std::size_t>(j)]));
  return {std::move(x), enorm(r)};
}

NullspaceResult nullspace(Mat A, double tol) {
  const int m = A.rows;
  const int n = A.cols;
  const double thresh = tol * std::max(1.0, A.max_abs());

  std::vector<int> pivot_cols;
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  int row = 0;
  while (row < m) {
    double best = 0.0;
    for (int i = row; i < m; ++i)
      for (int j = 0; j < n; ++j) {
        if (is_pivot[static_cast<std::size_t>(j)]) continue;
        best = std::max(best, std::abs(A(i, j)));
      }
    if (best <= thresh) break;
    // earliest entry within a relative slack of the largest one; the slack
    // keeps the choice stable under O(h^2) perturbations of otherwise tied
    // entries, which frame-field differentiation depends on
    constexpr double kPivotSlack = 1e-6;
    int pr = -1, pc = -1;
    for (int j = 0; j < n && pr < 0; ++j) {
      if (is_pivot[static_cast<std::size_t>(j)]) continue;
      for (int i = row; i < m; ++i) {
        if (std::abs(A(i, j)) >= (1.0 - kPivotSlack) * best) {
          pr = i;
          pc = j;
          break;
        }
      }
    }
    if (pr < 0) break;
    if (pr != row)
      for (int j = 0; j < n; ++j) std::swap(A(pr, j), A(row, j));
    for (int i = 0; i < m; ++i) {
      if (i == row) continue;
      const double f = A(i, pc) / A(row, pc);
      if (f == 0.0) continue;
      for (int j = 0; j < n; ++j) A(i, j) -= f * A(row, j);
      A(i, pc) = 0.0;
    }
    pivot_cols.push_back(pc);
    is_pivot[static_cast<std::size_t>(pc)] = true;
    ++row;
  }

  NullspaceResult out;
  out.pivot_cols = pivot_cols;
  out.rank = static_cast<int>(pivot_cols.size());
  for (int f = 0; f < n; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    Vector v(static_cast<std::size_t>(n), 0.0);
    v[static_cast<std::size_t>(f)] = 1.0;
    for (int r = 0; r < out.rank; ++r) {
      const int pc = pivot_cols[static_cast<std::size_t>(r)];
      v[static_cast<std::size_t>(pc)] = -A(r, f) / A(r, pc);
    }
    out.basis.push_back(std::move(v));
  }
  return out;
}

int rank(Mat A, double tol) { return nullspace(std::move(A), tol).rank; }

Metric Metric::from_pair_signs(const std::vector<int>& signs) {
  if (signs.empty()) throw DimensionMismatch("metric: need at least one sign pair");
  std::vector<double> diag;
  diag.reserve(2 * signs.size() + 1);
  bool has_negative = false;
  for (int s : signs) {
    if (s != 1 && s != -1) throw Error("metric: signs must be +1 or -1");
    if (s == -1) has_negative = true;
    diag.push_back(static_cast<double>(s));
    diag.push_back(static_cast<double>(s));
  }
  diag.push_back(1.0);
  if (!has_negative)
    throw RiemannianSignature("metric: all signs positive, no lightlike hypersurfaces exist");
  return Metric(std::move(diag));
}

Metric Metric::from_diagonal(const std::vector<double>& diagonal) {
  const std::size_t d = diagonal.size();
  if (d < 3 || d % 2 == 0) throw DimensionMismatch("metric: dimension must be odd and >= 3");
  if (diagonal.back() != 1.0) throw Error("metric: final diagonal entry must be +1");
  std::vector<int> signs;
  for (std::size_t i = 0; i + 1 < d; i += 2) {
    if (diagonal[i] != diagonal[i + 1]) throw Error("metric: signs must come in equal pairs");
    signs.push_back(diagonal[i] < 0 ? -1 : 1);
  }
  return from_pair_signs(signs);
}

double inner(const Metric& g, const Vector& u, const Vector& v) {
  if (static_cast<int>(u.size()) != g.dim() || static_cast<int>(v.size()) != g.dim())
    throw DimensionMismatch("inner: vector/metric dimension mismatch");
  double s = 0.0;
  for (int i = 0; i < g.dim(); ++i)
    s += g.sign(i) * u[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(i)];
  return s;
}

Vector raise_index(const Metric& g, const Vector& covector) {
  if (static_cast<int>(covector.size()) != g.dim())
    throw DimensionMismatch("raise_index: dimension mismatch");
  Vector v(covector.size());
  for (int i = 0; i < g.dim(); ++i)
    v[static_cast<std::size_t>(i)] = covector[static_cast<std::size_t>(i)] / g.sign(i);
  return v;
}

Vector lower_index(const Metric& g, const Vector& v) {
  if (static_cast<int>(v.size()) != g.dim())
    throw DimensionMismatch("lower_index: dimension mismatch");
  Vector w(v.size());
  for (int i = 0; i < g.dim(); ++i)
    w[static_cast<std::size_t>(i)] = v[static_cast<std::size_t>(i)] * g.sign(i);
  return w;
}

double gram_det2(const Metric& g, const Vector& u, const Vector& v) {
  const double uu = inner(g, u, u);
  const double vv = inner(g, v, v);
  const double uv = inner(g, u, v);
  return uu * vv - uv * uv;
}

Subspace make_subspace(const Metric& g, std::vector<Vector> basis, double tol) {
  const int k = static_cast<int>(basis.size());
  for (const auto& v : basis)
    if (static_cast<int>(v.size()) != g.dim())
      throw DimensionMismatch("make_subspace: vector/metric dimension mismatch");
  if (k > 0) {
    Mat cols = Mat::from_columns(basis);
    if (rank(cols, tol) < k) throw Error("make_subspace: basis linearly dependent");
  }
  Subspace s;
  s.gram = Mat(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      s.gram(i, j) = inner(g, basis[static_cast<std::size_t>(i)], basis[static_cast<std::size_t>(j)]);
  s.basis = std::move(basis);
  return s;
}

int normalized_gram_rank(const std::vector<Vector>& basis, const Mat& gram, double tol) {
  const int k = static_cast<int>(basis.size());
  Mat scaled_gram(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      const double ni = enorm(basis[static_cast<std::size_t>(i)]);
      const double nj = enorm(basis[static_cast<std::size_t>(j)]);
      scaled_gram(i, j) = gram(i, j) / std::max(1e-300, ni * nj);
    }
  return rank(std::move(scaled_gram), tol);
}

Subspace orthocomplement(const Metric& g, const Subspace& span, const Subspace& within,
                         double tol, bool require_direct_sum, std::vector<int>* pivot_cols) {
  // containment check against the Euclidean norm
  for (const auto& s : span.basis) {
    const auto ls = least_squares(within.basis, s);
    if (ls.residual > tol * std::max(1.0, enorm(s)))
      throw Error("orthocomplement: span not contained in the enclosing subspace");
  }
  if (require_direct_sum && span.dim() > 0) {
    if (normalized_gram_rank(span.basis, span.gram, tol) < span.dim())
      throw DegenerateSpan("orthocomplement: metric restricted to span is singular");
  }

  const int k = within.dim();
  Mat constraints(span.dim(), k);
  for (int i = 0; i < span.dim(); ++i)
    for (int j = 0; j < k; ++j)
      constraints(i, j) =
          inner(g, span.basis[static_cast<std::size_t>(i)], within.basis[static_cast<std::size_t>(j)]);

  const auto ns = nullspace(constraints, tol);
  if (pivot_cols) *pivot_cols = ns.pivot_cols;
  std::vector<Vector> out_basis;
  out_basis.reserve(ns.basis.size());
  for (const auto& c : ns.basis) {
    Vector v(static_cast<std::size_t>(g.dim()), 0.0);
    for (int j = 0; j < k; ++j)
      v = add(v, scaled(within.basis[static_cast<std::size_t>(j)], c[static_cast<std::size_t>(j)]));
    out_basis.push_back(std::move(v));
  }
  return make_subspace(g, std::move(out_basis), tol);
}

}  // namespace nullsurf
