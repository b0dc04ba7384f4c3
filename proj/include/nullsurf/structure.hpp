#ifndef NULLSURF_STRUCTURE_HPP_
#define NULLSURF_STRUCTURE_HPP_

#include <cstdint>
#include <vector>

#include "nullsurf/linalg.hpp"

namespace nullsurf {

// Flat almost contact metric model on R^{2n+1}: metric diag(s1,s1,...,sn,sn,1),
// phi rotating each coordinate pair and killing the z-direction, zeta the unit
// z-field, eta = dz. Immutable after construction.
struct AmbientStructure {
  Metric metric;
  Mat phi;      // (2n+1) x (2n+1)
  Vector zeta;
  Vector eta;   // covector coefficients

  int dim() const { return metric.dim(); }
  int pairs() const { return metric.pairs(); }

  Vector apply_phi(const Vector& v) const { return phi.apply(v); }
  double eta_of(const Vector& v) const { return edot(eta, v); }
  double g(const Vector& u, const Vector& v) const { return inner(metric, u, v); }
};

// phi(e_{2k-1}) = e_{2k}, phi(e_{2k}) = -e_{2k-1}, phi(e_{2n+1}) = 0.
// Throws RiemannianSignature when no sign is negative.
AmbientStructure standard_model(int n, const std::vector<int>& signs);

// Max absolute residual of each structure axiom, evaluated on the standard
// basis and `trials` seeded random vector pairs. Failures are reported, never
// thrown.
struct ValidationReport {
  double eta_zeta = 0.0;        // eta(zeta) - 1
  double phi_squared = 0.0;     // phi^2 v + v - eta(v) zeta
  double phi_zeta = 0.0;        // phi zeta
  double eta_after_phi = 0.0;   // eta(phi v)
  double compatibility = 0.0;   // g(phi u, phi v) - g(u,v) + eta(u) eta(v)
  double metric_duality = 0.0;  // g(v, zeta) - eta(v)
  double skewness = 0.0;        // g(phi u, v) + g(u, phi v)
  int trials = 0;
  std::uint64_t seed = 0;
  double tol = 0.0;

  double max_residual() const;
  bool pass() const { return max_residual() <= tol; }
};

ValidationReport validate_structure(const AmbientStructure& S, int trials, double tol,
                                    std::uint64_t seed = 0);

}  // namespace nullsurf

#endif  // NULLSURF_STRUCTURE_HPP_
