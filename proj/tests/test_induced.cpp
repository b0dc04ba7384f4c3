#include <doctest.h>

#include <cmath>

#include "nullsurf/induced.hpp"
#include "support/corpus.hpp"
#include "support/exact_oracle.hpp"

using namespace nullsurf;

namespace {

const double kSqrt2 = std::sqrt(2.0);

AmbientStructure model5() { return standard_model(2, {-1, 1}); }
Hypersurface fixture_b(double alpha = 1.0) {
  return Hypersurface::affine({-alpha * kSqrt2, 0, alpha, 0, alpha}, 0.0);
}
Vector origin5() { return Vector(5, 0.0); }

struct FixtureB {
  AmbientStructure S = model5();
  NullFrame frame;
  ZetaDecomposition dec;
  InducedStructure ind;

  explicit FixtureB(double alpha = 1.0) {
    frame = build_null_frame(S, fixture_b(alpha), origin5(), ScreenPolicy::basis_scan(), 1e-9);
    dec = decompose_zeta(S, frame, 1e-9);
    ind = induced_phi_omega(S, frame, dec, 1e-9);
  }
};

}  // namespace

TEST_SUITE_BEGIN("induced");

TEST_CASE("tangential hypersurfaces are rejected") {
  const AmbientStructure S = model5();
  const Hypersurface plane_a = Hypersurface::affine({-1, 0, 1, 0, 0}, 0.0);
  const NullFrame f = build_null_frame(S, plane_a, origin5(), ScreenPolicy::basis_scan(), 1e-9);
  const ZetaDecomposition dec = decompose_zeta(S, f, 1e-9);
  CHECK_THROWS_AS(induced_phi_omega(S, f, dec, 1e-9), ZetaTangent);
}

TEST_CASE("fixture B induced structure") {
  const FixtureB fx;
  const int m = fx.ind.tdim();
  REQUIRE(m == 4);

  // omega(xi) = 0 and phi xi = phi_bar xi
  CHECK(fx.ind.omega_xi == 0.0);
  CHECK(fx.ind.phi_xi_match <= 1e-15);

  // omega(phi xi) = b = 1
  Vector xi_coords(static_cast<std::size_t>(m), 0.0);
  xi_coords[0] = 1.0;
  const Vector phi_xi_coords = fx.ind.phi.apply(xi_coords);
  CHECK(std::abs(edot(fx.ind.omega, phi_xi_coords) - 1.0) <= 1e-14);

  // structural residuals
  CHECK(fx.ind.phi_squared <= 1e-13);
  CHECK(fx.ind.omega_phi_vs_eta <= 1e-13);
  CHECK(fx.ind.tangency_residual <= 1e-14);
  CHECK(fx.ind.transversal_leak <= 1e-14);

  // omega on the tangent basis matches the exact oracle
  const auto of = oracle::exact_frame(oracle::fixture_b_xi(), oracle::basis(0));
  for (int j = 0; j < m; ++j) {
    oracle::Vec5 tj{};
    for (int i = 0; i < 5; ++i) {
      // tangent vectors of this fixture have entries in {0, +-1, +-1/2, sqrt2 parts}
      const double x = fx.ind.tangent[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
      // decompose x = r + s*sqrt2 with s in {0, +-1}: fixture entries are exact
      if (std::abs(x - kSqrt2) < 1e-12)
        tj[static_cast<std::size_t>(i)] = oracle::Q2::sqrt2();
      else if (std::abs(x + kSqrt2) < 1e-12)
        tj[static_cast<std::size_t>(i)] = -oracle::Q2::sqrt2();
      else
        tj[static_cast<std::size_t>(i)] = oracle::Q2(oracle::Frac(std::llround(x * 4), 4));
    }
    const double expect = oracle::exact_omega(of, tj).value();
    CHECK(std::abs(fx.ind.omega[static_cast<std::size_t>(j)] - expect) <= 1e-14);
  }
}

TEST_CASE("g_tilde degeneracy and fixture values") {
  const FixtureB fx;
  const int m = fx.ind.tdim();
  Vector xi_coords(static_cast<std::size_t>(m), 0.0);
  xi_coords[0] = 1.0;

  CHECK(std::abs(g_tilde(fx.ind, xi_coords, xi_coords)) <= 1e-15);

  SplitMix64 rng(91);
  const Vector phi_xi_coords = fx.ind.phi.apply(xi_coords);
  for (int t = 0; t < 100; ++t) {
    const Vector X = rng.vector(m, -1, 1);
    CHECK(std::abs(g_tilde(fx.ind, X, xi_coords)) <= 1e-13);
    CHECK(std::abs(g_tilde(fx.ind, X, phi_xi_coords)) <= 1e-13);
  }

  // W' = (0,0,-1/2,0,1/2) = (1/2) * screen_3, omega(W') = 0, g~(W',W') = 1/2
  Vector wp_coords(static_cast<std::size_t>(m), 0.0);
  wp_coords[3] = 0.5;
  CHECK(std::abs(edot(fx.ind.omega, wp_coords)) <= 1e-14);
  CHECK(std::abs(g_tilde(fx.ind, wp_coords, wp_coords) - 0.5) <= 1e-14);

  const Vector zero(static_cast<std::size_t>(m), 0.0);
  CHECK(g_tilde(fx.ind, zero, zero) == 0.0);
}

TEST_CASE("hermitian identities hold and corruption is detected") {
  const FixtureB fx;
  const HermitianReport rep = verify_hermitian(fx.ind, 1000, 1e-9, 17);
  CHECK(rep.hermitian <= 1e-12);
  CHECK(rep.compatibility <= 1e-12);
  CHECK(rep.skew_exchange <= 1e-12);
  CHECK(rep.gtilde_xi <= 1e-12);
  CHECK(rep.gtilde_phi_xi <= 1e-12);

  InducedStructure corrupted = fx.ind;
  corrupted.omega[2] += 1e-3;
  const HermitianReport bad = verify_hermitian(corrupted, 1000, 1e-9, 17);
  CHECK(bad.hermitian > 1e-4);
}

TEST_CASE("nonexistence witnesses on fixture B and its rescalings") {
  const FixtureB fx;
  const NonexistenceWitness w = nonexistence_witness(fx.ind, fx.dec, 1e-9);
  CHECK(w.applicable);
  CHECK(w.pass);
  CHECK(std::abs(w.omega_phi_xi - 1.0) <= 1e-14);
  CHECK(std::abs(w.hermitian_defect_xi_xi - 1.0) <= 1e-14);

  // alpha F doubles b and quadruples the defect
  const FixtureB fx2(2.0);
  CHECK(std::abs(fx2.dec.b - 2.0) <= 1e-14);
  const NonexistenceWitness w2 = nonexistence_witness(fx2.ind, fx2.dec, 1e-9);
  CHECK(std::abs(w2.omega_phi_xi - 2.0) <= 1e-13);
  CHECK(std::abs(w2.hermitian_defect_xi_xi - 4.0) <= 1e-13);

  // ascreen frames are out of scope for the witness
  const AmbientStructure S = model5();
  const NullFrame fz = build_null_frame(S, fixture_b(), origin5(),
                                        ScreenPolicy::auxiliary_vector({0, 0, 0, 0, 1}), 1e-9);
  const ZetaDecomposition dz = decompose_zeta(S, fz, 1e-9);
  const InducedStructure iz = induced_phi_omega(S, fz, dz, 1e-9);  // b = 1, still defined
  const NonexistenceWitness wz = nonexistence_witness(iz, dz, 1e-9);
  CHECK_FALSE(wz.applicable);
}

TEST_CASE("induced identities across proper corpus members") {
  const AmbientStructure S = model5();
  const auto items = corpus::lightlike_hyperplanes(S, 25, 3007);
  int proper_seen = 0;
  for (const auto& it : items) {
    const Hypersurface H = Hypersurface::affine(it.covector, it.level);
    const NullFrame f = build_null_frame(S, H, it.point, ScreenPolicy::basis_scan(), 1e-9);
    const ZetaDecomposition dec = decompose_zeta(S, f, 1e-9);
    const Classification cls = classify(dec, 1e-9);
    if (!cls.proper) continue;
    ++proper_seen;
    const InducedStructure ind = induced_phi_omega(S, f, dec, 1e-9);
    CHECK(ind.phi_squared <= 1e-9);
    CHECK(ind.omega_phi_vs_eta <= 1e-9);
    const HermitianReport rep = verify_hermitian(ind, 200, 1e-9, 23);
    CHECK(rep.max_residual() <= 1e-9);
    const NonexistenceWitness w = nonexistence_witness(ind, dec, 1e-9);
    CHECK(w.pass);
  }
  CHECK(proper_seen > 10);  // the random corpus is essentially all proper
}

TEST_SUITE_END();
