#include "nullsurf/structure.hpp"

#include <algorithm>
#include <cmath>

#include "nullsurf/rng.hpp"

namespace nullsurf {

AmbientStructure standard_model(int n, const std::vector<int>& signs) {
  if (n < 1) throw DimensionMismatch("standard_model: n must be >= 1");
  if (static_cast<int>(signs.size()) != n)
    throw DimensionMismatch("standard_model: need exactly n signs");
  AmbientStructure S;
  S.metric = Metric::from_pair_signs(signs);  // rejects all-positive signatures
  const int d = S.metric.dim();
  S.phi = Mat(d, d);
  for (int k = 0; k < n; ++k) {
    S.phi(2 * k + 1, 2 * k) = 1.0;   // e_{2k-1} -> e_{2k}
    S.phi(2 * k, 2 * k + 1) = -1.0;  // e_{2k}   -> -e_{2k-1}
  }
  S.zeta = Vector(static_cast<std::size_t>(d), 0.0);
  S.zeta.back() = 1.0;
  S.eta = Vector(static_cast<std::size_t>(d), 0.0);
  S.eta.back() = 1.0;
  return S;
}

double ValidationReport::max_residual() const {
  double m = std::abs(eta_zeta);
  m = std::max(m, phi_squared);
  m = std::max(m, phi_zeta);
  m = std::max(m, eta_after_phi);
  m = std::max(m, compatibility);
  m = std::max(m, metric_duality);
  m = std::max(m, skewness);
  return m;
}

namespace {

void accumulate_pair(const AmbientStructure& S, const Vector& u, const Vector& v,
                     ValidationReport& r) {
  const Vector pu = S.apply_phi(u);
  const Vector pv = S.apply_phi(v);

  // phi^2 u = -u + eta(u) zeta
  const Vector ppu = S.apply_phi(pu);
  Vector expect = scaled(u, -1.0);
  expect = add(expect, scaled(S.zeta, S.eta_of(u)));
  r.phi_squared = std::max(r.phi_squared, enorm(sub(ppu, expect)));

  r.eta_after_phi = std::max(r.eta_after_phi, std::abs(S.eta_of(pu)));
  r.compatibility =
      std::max(r.compatibility, std::abs(S.g(pu, pv) - S.g(u, v) + S.eta_of(u) * S.eta_of(v)));
  r.metric_duality = std::max(r.metric_duality, std::abs(S.g(u, S.zeta) - S.eta_of(u)));
  r.skewness = std::max(r.skewness, std::abs(S.g(pu, v) + S.g(u, pv)));
}

}  // namespace

ValidationReport validate_structure(const AmbientStructure& S, int trials, double tol,
                                    std::uint64_t seed) {
  ValidationReport r;
  r.trials = trials;
  r.seed = seed;
  r.tol = tol;

  r.eta_zeta = std::abs(S.eta_of(S.zeta) - 1.0);
  r.phi_zeta = enorm(S.apply_phi(S.zeta));

  const int d = S.dim();
  std::vector<Vector> basis;
  basis.reserve(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) {
    Vector e(static_cast<std::size_t>(d), 0.0);
    e[static_cast<std::size_t>(i)] = 1.0;
    basis.push_back(std::move(e));
  }
  for (const auto& u : basis)
    for (const auto& v : basis) accumulate_pair(S, u, v, r);

  SplitMix64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    const Vector u = rng.vector(d, -1.0, 1.0);
    const Vector v = rng.vector(d, -1.0, 1.0);
    accumulate_pair(S, u, v, r);
  }
  return r;
}

}  // namespace nullsurf
