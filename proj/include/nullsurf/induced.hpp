#ifndef NULLSURF_INDUCED_HPP_
#define NULLSURF_INDUCED_HPP_

#include <cstdint>

#include "nullsurf/classify.hpp"

namespace nullsurf {

// Tangential/normal split of phi along a hypersurface nowhere tangent to
// zeta: phi_bar X = phi X + omega(X) zeta. phi is an almost complex structure
// on TM; everything is stored in coordinates over the tangent basis
// {xi} + screen.
struct InducedStructure {
  std::vector<Vector> tangent;  // 2n ambient vectors
  Mat phi;                      // 2n x 2n, tangent coordinates
  Vector omega;                 // 2n covector coefficients
  Vector eta_restricted;        // 2n covector coefficients
  Mat gram;                     // induced metric on the tangent basis
  double b = 0.0;

  // construction diagnostics
  double tangency_residual = 0.0;   // max |g(phi X, xi)| over the basis
  double transversal_leak = 0.0;    // max N-component of phi X over the basis
  double phi_squared = 0.0;         // max entry of phi^2 + I
  double omega_phi_vs_eta = 0.0;    // max |omega(phi X) - eta(X)| over the basis
  double omega_xi = 0.0;            // |omega(xi)|
  double phi_xi_match = 0.0;        // ||phi xi - phi_bar xi||

  int tdim() const { return static_cast<int>(tangent.size()); }
};

// omega(X) = g(phi_bar X, xi) / b. Throws ZetaTangent when |b| <= tol.
InducedStructure induced_phi_omega(const AmbientStructure& S, const NullFrame& frame,
                                   const ZetaDecomposition& dec, double tol);

// modified metric g~ = g + omega (x) omega, degenerate on M
double g_tilde(const InducedStructure& ind, const Vector& X, const Vector& Y);
double g_induced(const InducedStructure& ind, const Vector& X, const Vector& Y);
double omega_of(const InducedStructure& ind, const Vector& X);
double eta_of(const InducedStructure& ind, const Vector& X);

struct HermitianReport {
  double hermitian = 0.0;        // g~(phi X, phi Y) - g~(X, Y)
  double compatibility = 0.0;    // g(phi X, phi Y) - g(X,Y) + eta eta - omega omega
  double skew_exchange = 0.0;    // g(phi X,Y) + omega(X) eta(Y) + g(X, phi Y) + omega(Y) eta(X)
  double gtilde_xi = 0.0;        // g~(X, xi)
  double gtilde_phi_xi = 0.0;    // g~(X, phi xi)
  int trials = 0;
  std::uint64_t seed = 0;

  double max_residual() const;
};
HermitianReport verify_hermitian(const InducedStructure& ind, int trials, double tol,
                                 std::uint64_t seed = 0);

// Concrete obstruction quantities bounded away from zero on every proper
// inascreen frame: omega(phi xi) = b != 0, and the (g, phi) Hermitian defect
// at (xi, xi) equals b^2.
struct NonexistenceWitness {
  bool applicable = false;
  double omega_phi_xi = 0.0;
  double b = 0.0;
  double hermitian_defect_xi_xi = 0.0;  // |g(phi xi, phi xi) - g(xi, xi)|
  double skew_defect = 0.0;             // |omega(phi xi) b|
  double omega_phi_xi_vs_b = 0.0;       // |omega(phi xi) - b|
  double defect_vs_b_sq = 0.0;          // |defect - b^2|
  bool pass = true;
};
NonexistenceWitness nonexistence_witness(const InducedStructure& ind, const ZetaDecomposition& dec,
                                         double tol);

}  // namespace nullsurf

#endif  // NULLSURF_INDUCED_HPP_
