#include "nullsurf/induced.hpp"

#include <algorithm>
#include <cmath>

#include "nullsurf/rng.hpp"

namespace nullsurf {

InducedStructure induced_phi_omega(const AmbientStructure& S, const NullFrame& frame,
                                   const ZetaDecomposition& dec, double tol) {
  if (std::abs(dec.b) <= tol)
    throw ZetaTangent("induced_phi_omega: zeta tangent to M, the split is undefined");

  InducedStructure ind;
  ind.b = dec.b;
  ind.tangent = frame.tangent_basis();
  const int m = ind.tdim();

  // expansion basis TM + span{N} for reading off tangent coordinates
  std::vector<Vector> cols = ind.tangent;
  cols.push_back(frame.N);
  const Mat expansion = Mat::from_columns(cols);

  ind.phi = Mat(m, m);
  ind.omega = Vector(static_cast<std::size_t>(m), 0.0);
  ind.eta_restricted = Vector(static_cast<std::size_t>(m), 0.0);
  ind.gram = Mat(m, m);

  for (int j = 0; j < m; ++j) {
    const Vector& tj = ind.tangent[static_cast<std::size_t>(j)];
    const Vector ptj = S.apply_phi(tj);
    const double omega_j = S.g(ptj, frame.xi) / dec.b;
    ind.omega[static_cast<std::size_t>(j)] = omega_j;
    ind.eta_restricted[static_cast<std::size_t>(j)] = S.eta_of(tj);

    Vector phi_tj = sub(ptj, scaled(S.zeta, omega_j));
    ind.tangency_residual =
        std::max(ind.tangency_residual, std::abs(S.g(phi_tj, frame.xi)));

    const Vector x = solve(expansion, phi_tj);
    ind.transversal_leak = std::max(ind.transversal_leak, std::abs(x[static_cast<std::size_t>(m)]));
    for (int i = 0; i < m; ++i) ind.phi(i, j) = x[static_cast<std::size_t>(i)];

    for (int i = 0; i < m; ++i)
      ind.gram(i, j) = S.g(ind.tangent[static_cast<std::size_t>(i)], tj);
  }

  // phi^2 = -I and omega . phi = eta on the basis
  const Mat phi2 = ind.phi.times(ind.phi);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const double expect = i == j ? -1.0 : 0.0;
      ind.phi_squared = std::max(ind.phi_squared, std::abs(phi2(i, j) - expect));
    }
  for (int j = 0; j < m; ++j) {
    double omega_phi = 0.0;
    for (int i = 0; i < m; ++i) omega_phi += ind.omega[static_cast<std::size_t>(i)] * ind.phi(i, j);
    ind.omega_phi_vs_eta = std::max(
        ind.omega_phi_vs_eta, std::abs(omega_phi - ind.eta_restricted[static_cast<std::size_t>(j)]));
  }
  ind.omega_xi = std::abs(ind.omega[0]);

  // phi xi must coincide with phi_bar xi (xi is the first tangent vector)
  Vector phi_xi_ambient(static_cast<std::size_t>(S.dim()), 0.0);
  for (int i = 0; i < m; ++i)
    phi_xi_ambient = add(phi_xi_ambient, scaled(ind.tangent[static_cast<std::size_t>(i)], ind.phi(i, 0)));
  ind.phi_xi_match = enorm(sub(phi_xi_ambient, frame.phi_xi));

  return ind;
}

double g_induced(const InducedStructure& ind, const Vector& X, const Vector& Y) {
  if (static_cast<int>(X.size()) != ind.tdim() || static_cast<int>(Y.size()) != ind.tdim())
    throw DimensionMismatch("g_induced: tangent coordinate dimension");
  return edot(X, ind.gram.apply(Y));
}

double omega_of(const InducedStructure& ind, const Vector& X) { return edot(ind.omega, X); }

double eta_of(const InducedStructure& ind, const Vector& X) {
  return edot(ind.eta_restricted, X);
}

double g_tilde(const InducedStructure& ind, const Vector& X, const Vector& Y) {
  return g_induced(ind, X, Y) + omega_of(ind, X) * omega_of(ind, Y);
}

double HermitianReport::max_residual() const {
  double m = hermitian;
  m = std::max(m, compatibility);
  m = std::max(m, skew_exchange);
  m = std::max(m, gtilde_xi);
  m = std::max(m, gtilde_phi_xi);
  return m;
}

HermitianReport verify_hermitian(const InducedStructure& ind, int trials, double /*tol*/,
                                 std::uint64_t seed) {
  HermitianReport rep;
  rep.trials = trials;
  rep.seed = seed;
  const int m = ind.tdim();

  Vector xi_coords(static_cast<std::size_t>(m), 0.0);
  xi_coords[0] = 1.0;
  const Vector phi_xi_coords = ind.phi.apply(xi_coords);

  SplitMix64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    const Vector X = rng.vector(m, -1.0, 1.0);
    const Vector Y = rng.vector(m, -1.0, 1.0);
    const Vector pX = ind.phi.apply(X);
    const Vector pY = ind.phi.apply(Y);

    rep.hermitian =
        std::max(rep.hermitian, std::abs(g_tilde(ind, pX, pY) - g_tilde(ind, X, Y)));
    rep.compatibility =
        std::max(rep.compatibility,
                 std::abs(g_induced(ind, pX, pY) - g_induced(ind, X, Y) +
                          eta_of(ind, X) * eta_of(ind, Y) - omega_of(ind, X) * omega_of(ind, Y)));
    rep.skew_exchange =
        std::max(rep.skew_exchange,
                 std::abs(g_induced(ind, pX, Y) + omega_of(ind, X) * eta_of(ind, Y) +
                          g_induced(ind, X, pY) + omega_of(ind, Y) * eta_of(ind, X)));
    rep.gtilde_xi = std::max(rep.gtilde_xi, std::abs(g_tilde(ind, X, xi_coords)));
    rep.gtilde_phi_xi = std::max(rep.gtilde_phi_xi, std::abs(g_tilde(ind, X, phi_xi_coords)));
  }
  return rep;
}

NonexistenceWitness nonexistence_witness(const InducedStructure& ind, const ZetaDecomposition& dec,
                                         double tol) {
  NonexistenceWitness w;
  const Classification cls = classify(dec, tol);
  if (!cls.proper) return w;  // not proper inascreen, vacuous
  w.applicable = true;
  w.b = dec.b;

  const int m = ind.tdim();
  Vector xi_coords(static_cast<std::size_t>(m), 0.0);
  xi_coords[0] = 1.0;
  const Vector phi_xi_coords = ind.phi.apply(xi_coords);

  w.omega_phi_xi = omega_of(ind, phi_xi_coords);
  w.omega_phi_xi_vs_b = std::abs(w.omega_phi_xi - dec.b);
  w.hermitian_defect_xi_xi =
      std::abs(g_induced(ind, phi_xi_coords, phi_xi_coords) - g_induced(ind, xi_coords, xi_coords));
  w.defect_vs_b_sq = std::abs(w.hermitian_defect_xi_xi - dec.b * dec.b);
  w.skew_defect = std::abs(w.omega_phi_xi * dec.b);

  w.pass = std::abs(w.omega_phi_xi) > tol && w.omega_phi_xi_vs_b <= tol &&
           w.defect_vs_b_sq <= tol && w.skew_defect > tol * tol;
  return w;
}

}  // namespace nullsurf
