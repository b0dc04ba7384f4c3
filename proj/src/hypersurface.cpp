#include "nullsurf/hypersurface.hpp"

#include <algorithm>
#include <limits>
#include <cmath>

namespace nullsurf {

double Hypersurface::value(const Vector& p) const {
  if (static_cast<int>(p.size()) != dim()) throw DimensionMismatch("Hypersurface::value");
  double v = edot(covector, p);
  if (kind == Kind::Quadric) v += edot(p, quad.apply(p));
  return v;
}

Vector Hypersurface::differential(const Vector& p) const {
  if (static_cast<int>(p.size()) != dim()) throw DimensionMismatch("Hypersurface::differential");
  if (kind == Kind::Affine) return covector;
  return add(scaled(quad.apply(p), 2.0), covector);
}

Hypersurface Hypersurface::affine(Vector w, double c) {
  Hypersurface h;
  h.kind = Kind::Affine;
  h.covector = std::move(w);
  h.level = c;
  return h;
}

Hypersurface Hypersurface::quadric(Mat A, Vector w, double c) {
  if (A.rows != A.cols || A.rows != static_cast<int>(w.size()))
    throw DimensionMismatch("Hypersurface::quadric");
  Hypersurface h;
  h.kind = Kind::Quadric;
  h.quad = Mat(A.rows, A.cols);
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < A.cols; ++j) h.quad(i, j) = 0.5 * (A(i, j) + A(j, i));
  h.covector = std::move(w);
  h.level = c;
  return h;
}

Hypersurface Hypersurface::null_cone(const Metric& g) {
  Mat A(g.dim(), g.dim());
  for (int i = 0; i < g.dim(); ++i) A(i, i) = g.sign(i);
  Hypersurface h = quadric(std::move(A), Vector(static_cast<std::size_t>(g.dim()), 0.0), 0.0);
  h.min_point_norm = 1e-6;
  h.builtin = "null-cone";
  return h;
}

Vector retract_once(const Hypersurface& H, Vector q) {
  const Vector grad = H.differential(q);
  const double gg = edot(grad, grad);
  if (gg == 0.0) return q;
  const double step = (H.value(q) - H.level) / gg;
  return sub(q, scaled(grad, step));
}

Vector project_to_surface(const Hypersurface& H, Vector q, int max_iters) {
  // run Newton down to machine precision; frame algebra needs g(xi, xi) = 0
  // far below any user-facing tolerance
  double best = std::numeric_limits<double>::infinity();
  for (int it = 0; it < max_iters; ++it) {
    const double scale = std::max(1.0, enorm(H.differential(q)));
    const double res = std::abs(H.value(q) - H.level);
    if (res <= 8.0e-16 * scale || res >= best) break;
    best = res;
    q = retract_once(H, std::move(q));
  }
  return q;
}

std::vector<Vector> NullFrame::tangent_basis() const {
  std::vector<Vector> t;
  t.reserve(screen.size() + 1);
  t.push_back(xi);
  for (const auto& s : screen) t.push_back(s);
  return t;
}

Vector normal_xi(const AmbientStructure& S, const Hypersurface& H, const Vector& p, double tol) {
  if (H.dim() != S.dim() || static_cast<int>(p.size()) != S.dim())
    throw DimensionMismatch("normal_xi: point/surface/structure dimensions differ");
  if (!all_finite(p)) throw NotOnHypersurface("normal_xi: non-finite point");
  if (H.min_point_norm > 0.0 && enorm(p) < H.min_point_norm)
    throw NotOnHypersurface("normal_xi: point in the excluded vertex region");

  const Vector dF = H.differential(p);
  const double grad_norm = enorm(dF);
  const double surface_res = std::abs(H.value(p) - H.level);
  if (surface_res > tol * std::max(1.0, grad_norm * std::max(1.0, enorm(p))))
    throw NotOnHypersurface("normal_xi: point not on the level set");
  if (grad_norm <= tol) throw NotOnHypersurface("normal_xi: gradient vanishes");

  Vector xi = raise_index(S.metric, dF);
  const double xi_sq = inner(S.metric, xi, xi);
  const double e2 = edot(xi, xi);
  if (std::abs(xi_sq) > tol * e2) throw NotLightlike("normal_xi: hypersurface not null at p");
  return xi;
}

namespace {

// Null transversal partner of xi built from a candidate V with g(V, phi xi)=0
// and g(V, xi) != 0: the unique null combination of V and xi pairing to 1.
Vector transversal_from(const AmbientStructure& S, const Vector& xi, const Vector& V) {
  const double gvx = S.g(V, xi);
  const double gvv = S.g(V, V);
  Vector N = sub(V, scaled(xi, gvv / (2.0 * gvx)));
  return scaled(N, 1.0 / gvx);
}

struct CandidateChoice {
  Vector V;
  int index = -1;
  bool projected = false;
};

CandidateChoice select_candidate(const AmbientStructure& S, const Vector& xi,
                                 const Vector& phi_xi, const ScreenPolicy& policy, double tol) {
  const double pxx = S.g(phi_xi, phi_xi);  // equals -b^2
  const double phi_xi_e2 = edot(phi_xi, phi_xi);
  const bool phi_xi_nonnull = std::abs(pxx) > tol * std::max(1.0, phi_xi_e2);
  const double xi_norm = enorm(xi);

  std::vector<Vector> candidates;
  std::vector<int> indices;
  if (policy.kind == ScreenPolicy::Kind::AuxiliaryVector) {
    if (static_cast<int>(policy.auxiliary.size()) != S.dim())
      throw DimensionMismatch("screen policy: auxiliary vector dimension");
    candidates.push_back(policy.auxiliary);
    indices.push_back(-1);
  } else {
    for (int i = 0; i < S.dim(); ++i) {
      Vector e(static_cast<std::size_t>(S.dim()), 0.0);
      e[static_cast<std::size_t>(i)] = 1.0;
      candidates.push_back(std::move(e));
      indices.push_back(i);
    }
  }

  for (std::size_t k = 0; k < candidates.size(); ++k) {
    Vector V = candidates[k];
    bool projected = false;
    if (phi_xi_nonnull) {
      V = sub(V, scaled(phi_xi, S.g(V, phi_xi) / pxx));
      projected = true;
    } else if (std::abs(S.g(V, phi_xi)) > tol * std::max(1.0, enorm(V) * enorm(phi_xi))) {
      continue;  // phi xi is null, cannot be projected out
    }
    if (std::abs(S.g(V, xi)) > tol * std::max(1.0, enorm(V) * xi_norm))
      return {std::move(V), indices[k], projected};
  }
  throw PolicyFailure(
      "build_null_frame: no candidate with g(V, phi xi)=0 and g(V, xi) != 0 found");
}

}  // namespace

NullFrame build_null_frame(const AmbientStructure& S, const Hypersurface& H, const Vector& p,
                           const ScreenPolicy& policy, double tol) {
  NullFrame f;
  f.point = p;
  f.xi = normal_xi(S, H, p, tol);
  f.phi_xi = S.apply_phi(f.xi);
  f.b = S.eta_of(f.xi);

  auto choice = select_candidate(S, f.xi, f.phi_xi, policy, tol);
  f.pivots.scan_index = choice.index;
  f.pivots.projected_candidate = choice.projected;

  f.N = transversal_from(S, f.xi, choice.V);
  f.phi_N = S.apply_phi(f.N);
  f.a = S.eta_of(f.N);

  // screen = solutions of g(., xi) = 0, g(., N) = 0 over the standard basis
  Mat constraints(2, S.dim());
  const Vector lx = lower_index(S.metric, f.xi);
  const Vector ln = lower_index(S.metric, f.N);
  for (int j = 0; j < S.dim(); ++j) {
    constraints(0, j) = lx[static_cast<std::size_t>(j)];
    constraints(1, j) = ln[static_cast<std::size_t>(j)];
  }
  auto ns = nullspace(constraints, tol);
  if (ns.rank != 2) throw DegenerateScreen("build_null_frame: xi and N do not span a rank-2 system");
  f.pivots.screen_pivots = ns.pivot_cols;
  f.screen = std::move(ns.basis);

  Subspace screen_sub = make_subspace(S.metric, f.screen, tol);
  if (normalized_gram_rank(screen_sub.basis, screen_sub.gram, tol) != screen_sub.dim())
    throw DegenerateScreen("build_null_frame: induced metric degenerate on the screen");

  // rank-1 span{phi xi, phi N} exactly when 2ab = 1
  f.degenerate_span = std::abs(2.0 * f.a * f.b - 1.0) <= tol;
  f.pivots.degenerate = f.degenerate_span;

  std::vector<Vector> span_vecs;
  span_vecs.push_back(f.phi_xi);
  if (!f.degenerate_span) span_vecs.push_back(f.phi_N);
  Subspace span_sub = make_subspace(S.metric, span_vecs, tol);
  Subspace dprime = orthocomplement(S.metric, span_sub, screen_sub, tol,
                                    /*require_direct_sum=*/true, &f.pivots.dprime_pivots);
  f.dprime = std::move(dprime.basis);
  return f;
}

double FrameResiduals::max_residual() const {
  double m = xi_null;
  m = std::max(m, n_null);
  m = std::max(m, pairing);
  m = std::max(m, screen_vs_xi);
  m = std::max(m, screen_vs_n);
  m = std::max(m, phi_in_screen);
  m = std::max(m, dprime_orth);
  if (!screen_nondegenerate) m = std::max(m, 1.0);
  return m;
}

FrameResiduals frame_residuals(const AmbientStructure& S, const NullFrame& frame) {
  FrameResiduals r;
  const double nxi = enorm(frame.xi);
  const double nn = enorm(frame.N);
  r.xi_null = std::abs(S.g(frame.xi, frame.xi)) / std::max(1.0, nxi * nxi);
  r.n_null = std::abs(S.g(frame.N, frame.N)) / std::max(1.0, nn * nn);
  r.pairing = std::abs(S.g(frame.xi, frame.N) - 1.0) / std::max(1.0, nxi * nn);

  for (const auto& s : frame.screen) {
    const double nsv = enorm(s);
    r.screen_vs_xi =
        std::max(r.screen_vs_xi, std::abs(S.g(frame.xi, s)) / std::max(1.0, nxi * nsv));
    r.screen_vs_n = std::max(r.screen_vs_n, std::abs(S.g(frame.N, s)) / std::max(1.0, nn * nsv));
  }

  for (const Vector* v : {&frame.phi_xi, &frame.phi_N}) {
    const auto ls = least_squares(frame.screen, *v);
    r.phi_in_screen = std::max(r.phi_in_screen, ls.residual / std::max(1.0, enorm(*v)));
  }

  for (const auto& d : frame.dprime) {
    const double nd = enorm(d);
    for (const Vector* w : {&frame.phi_xi, &frame.phi_N}) {
      r.dprime_orth =
          std::max(r.dprime_orth, std::abs(S.g(d, *w)) / std::max(1.0, nd * enorm(*w)));
    }
  }

  Subspace screen_sub = make_subspace(S.metric, frame.screen, 1e-12);
  r.screen_nondegenerate =
      normalized_gram_rank(screen_sub.basis, screen_sub.gram, 1e-12) == screen_sub.dim();
  return r;
}

FrameComponents frame_decompose(const NullFrame& frame, const Vector& v) {
  std::vector<Vector> cols;
  cols.push_back(frame.phi_xi);
  if (!frame.degenerate_span) cols.push_back(frame.phi_N);
  for (const auto& d : frame.dprime) cols.push_back(d);
  cols.push_back(frame.xi);
  cols.push_back(frame.N);
  if (static_cast<int>(cols.size()) != frame.dim())
    throw FrameInvalid("frame_decompose: frame basis does not span the ambient space");

  const Vector x = solve(Mat::from_columns(cols), v);
  FrameComponents fc;
  std::size_t k = 0;
  fc.along_phi_xi = x[k++];
  fc.along_phi_n = frame.degenerate_span ? 0.0 : x[k++];
  fc.dprime_coeffs.assign(x.begin() + static_cast<std::ptrdiff_t>(k),
                          x.begin() + static_cast<std::ptrdiff_t>(k + frame.dprime.size()));
  k += frame.dprime.size();
  fc.along_xi = x[k++];
  fc.along_n = x[k++];
  return fc;
}

DprimeInvariance check_dprime_invariance(const AmbientStructure& S, const NullFrame& frame,
                                         double tol) {
  DprimeInvariance rep;
  for (const auto& d : frame.dprime) {
    const Vector pd = S.apply_phi(d);
    const double scale = std::max(1.0, enorm(pd));
    const auto fc = frame_decompose(frame, pd);

    double span_defect = std::abs(fc.along_phi_xi) * enorm(frame.phi_xi) / scale;
    if (!frame.degenerate_span)
      span_defect = std::max(span_defect, std::abs(fc.along_phi_n) * enorm(frame.phi_N) / scale);
    const double screen_defect =
        std::max(std::abs(fc.along_xi) * enorm(frame.xi), std::abs(fc.along_n) * enorm(frame.N)) /
        scale;

    rep.span_defect = std::max(rep.span_defect, span_defect);
    rep.screen_defect = std::max(rep.screen_defect, screen_defect);

    const double eta_d = S.eta_of(d);
    rep.pairing_a = std::max(rep.pairing_a, std::abs(S.g(pd, frame.phi_N) + frame.a * eta_d));
    rep.pairing_b = std::max(rep.pairing_b, std::abs(S.g(pd, frame.phi_xi) + frame.b * eta_d));
  }
  rep.in_screen = rep.screen_defect <= tol;
  rep.invariant = rep.in_screen && rep.span_defect <= tol;
  return rep;
}

}  // namespace nullsurf
