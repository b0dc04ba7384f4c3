#include "nullsurf/classify.hpp"

#include <algorithm>
#include <cmath>

namespace nullsurf {

double ZetaDecomposition::max_identity_residual() const {
  double m = std::abs(unit_identity);
  m = std::max(m, std::abs(pair_phi_xi));
  m = std::max(m, std::abs(pair_phi_n));
  m = std::max(m, std::abs(vanish_f1));
  m = std::max(m, std::abs(vanish_f2));
  m = std::max(m, residual);
  m = std::max(m, wprime_orth);
  m = std::max(m, std::abs(gram_det_identity));
  return m;
}

ZetaDecomposition decompose_zeta(const AmbientStructure& S, const NullFrame& frame, double tol) {
  const auto fr = frame_residuals(S, frame);
  if (fr.max_residual() > tol)
    throw FrameInvalid("decompose_zeta: frame constraints violated beyond tolerance");

  ZetaDecomposition dec;
  dec.a = S.g(frame.N, S.zeta);
  dec.b = S.g(frame.xi, S.zeta);
  dec.degenerate = frame.degenerate_span;

  Vector W = sub(S.zeta, add(scaled(frame.xi, dec.a), scaled(frame.N, dec.b)));
  dec.W = W;

  const Vector& px = frame.phi_xi;
  const Vector& pn = frame.phi_N;

  if (!dec.degenerate) {
    // W = W' + f1 phi N + f2 phi xi, W' perpendicular to both: the pairings
    // give a 2x2 Gram system with determinant 2ab - 1.
    Mat G(2, 2);
    G(0, 0) = S.g(pn, px);
    G(0, 1) = S.g(px, px);
    G(1, 0) = S.g(pn, pn);
    G(1, 1) = S.g(px, pn);
    const Vector rhs = {S.g(W, px), S.g(W, pn)};
    const Vector fs = solve(G, rhs);
    dec.f1 = fs[0];
    dec.f2 = fs[1];
    dec.Wprime = sub(W, add(scaled(pn, dec.f1), scaled(px, dec.f2)));
  } else {
    // rank-1 span: phi xi = lambda phi N; W folds into the pair minimally
    dec.Wprime = Vector(static_cast<std::size_t>(S.dim()), 0.0);
    const double lam = edot(px, pn) / edot(pn, pn);
    dec.lambda = lam;
    const double mu = edot(W, pn) / edot(pn, pn);
    dec.f1 = mu / (1.0 + lam * lam);
    dec.f2 = mu * lam / (1.0 + lam * lam);
  }

  Vector recon = dec.Wprime;
  recon = add(recon, scaled(pn, dec.f1));
  recon = add(recon, scaled(px, dec.f2));
  recon = add(recon, scaled(frame.xi, dec.a));
  recon = add(recon, scaled(frame.N, dec.b));
  dec.residual = enorm(sub(S.zeta, recon));

  const double ab = dec.a * dec.b;
  dec.unit_identity = S.g(W, W) + 2.0 * ab - 1.0;
  dec.pair_phi_xi = dec.b * dec.b * dec.f2 - dec.f1 * (1.0 - ab);
  dec.pair_phi_n = dec.a * dec.a * dec.f1 - dec.f2 * (1.0 - ab);
  dec.vanish_f1 = (2.0 * ab - 1.0) * dec.f1;
  dec.vanish_f2 = (2.0 * ab - 1.0) * dec.f2;
  for (const Vector* v : {&px, &pn, &frame.xi, &frame.N})
    dec.wprime_orth = std::max(dec.wprime_orth, std::abs(S.g(dec.Wprime, *v)));
  dec.gram_det = gram_det2(S.metric, px, pn);
  dec.gram_det_identity = dec.gram_det - (2.0 * ab - 1.0);

  if (dec.residual > tol)
    throw FrameInvalid("decompose_zeta: zeta reconstruction residual beyond tolerance");
  return dec;
}

std::string to_string(PositionClass c) {
  return c == PositionClass::Ascreen ? "ascreen" : "inascreen";
}

Classification classify(const ZetaDecomposition& dec, double tol) {
  const double wn = enorm(dec.Wprime);
  const double two_ab = 2.0 * dec.a * dec.b - 1.0;

  Classification cls;
  if (std::abs(two_ab) <= tol && wn <= tol) {
    cls.label = PositionClass::Ascreen;
  } else if (wn > tol) {
    cls.label = PositionClass::Inascreen;
  } else {
    // 2ab != 1 with W' = 0 contradicts g(W,W) + 2ab = 1; the frame is broken
    throw InconsistentDecomposition("classify: 2ab != 1 with vanishing W'");
  }
  const bool inascreen = cls.label == PositionClass::Inascreen;
  cls.tangential = inascreen && std::abs(dec.a) <= tol && std::abs(dec.b) <= tol;
  cls.proper = inascreen && std::abs(dec.b) > tol;

  cls.diagnostics["a"] = dec.a;
  cls.diagnostics["b"] = dec.b;
  cls.diagnostics["two_ab_minus_one"] = two_ab;
  cls.diagnostics["wprime_norm"] = wn;
  cls.diagnostics["unit_identity"] = dec.unit_identity;
  cls.diagnostics["decomposition_residual"] = dec.residual;
  cls.diagnostics["gram_det"] = dec.gram_det;
  return cls;
}

CalinReport verify_calin(const AmbientStructure& S, const Hypersurface& H,
                         const std::vector<Vector>& points, const ScreenPolicy& policy,
                         double tol) {
  CalinReport rep;
  for (const auto& p : points) {
    const NullFrame frame = build_null_frame(S, H, p, policy, tol);
    const double a = S.g(frame.N, S.zeta);
    const double b = S.g(frame.xi, S.zeta);
    ++rep.points_checked;
    if (std::abs(b) <= tol) {
      ++rep.applicable;
      rep.max_a_where_b_zero = std::max(rep.max_a_where_b_zero, std::abs(a));
      if (std::abs(a) > tol) ++rep.violations;
    }
  }
  rep.pass = rep.violations == 0;
  return rep;
}

IndependenceReport check_independence(const AmbientStructure& S, const NullFrame& frame,
                                      const ZetaDecomposition& dec, double tol) {
  IndependenceReport rep;
  const Classification cls = classify(dec, tol);
  if (!cls.proper) return rep;  // precondition not met, vacuous
  rep.applicable = true;

  rep.gram_det_abs = std::abs(dec.gram_det);
  rep.phi_pair_independent = rep.gram_det_abs > tol;

  std::vector<Vector> cols = frame.tangent_basis();
  cols.push_back(S.zeta);
  const int want = static_cast<int>(cols.size());
  rep.zeta_independent = rank(Mat::from_columns(cols), tol) == want;

  rep.dimension_ok = S.dim() >= 5;
  if (!rep.dimension_ok)
    throw DimensionTooSmall("check_independence: proper inascreen frame in dimension < 5");

  rep.pass = rep.phi_pair_independent && rep.zeta_independent && rep.dimension_ok;
  return rep;
}

}  // namespace nullsurf
