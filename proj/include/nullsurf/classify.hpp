#ifndef NULLSURF_CLASSIFY_HPP_
#define NULLSURF_CLASSIFY_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nullsurf/hypersurface.hpp"

namespace nullsurf {

// zeta = W' + f1 phi N + f2 phi xi + a xi + b N, with W' in D'.
// On the degenerate split (2ab = 1) W' is forced to zero and lambda records
// the ratio phi xi = lambda phi N.
struct ZetaDecomposition {
  double a = 0.0;  // eta(N)
  double b = 0.0;  // eta(xi)
  double f1 = 0.0;
  double f2 = 0.0;
  Vector W;
  Vector Wprime;
  std::optional<double> lambda;
  bool degenerate = false;

  // diagnostics
  double residual = 0.0;           // ||zeta - reconstruction||_2
  double unit_identity = 0.0;      // g(W,W) + 2ab - 1
  double pair_phi_xi = 0.0;         // b^2 f2 - f1 (1 - ab)
  double pair_phi_n = 0.0;          // a^2 f1 - f2 (1 - ab)
  double vanish_f1 = 0.0;           // (2ab - 1) f1
  double vanish_f2 = 0.0;           // (2ab - 1) f2
  double wprime_orth = 0.0;        // max pairing of W' with phi xi, phi N, xi, N
  double gram_det = 0.0;           // gram_det2(phi xi, phi N)
  double gram_det_identity = 0.0;  // gram_det - (2ab - 1)

  double max_identity_residual() const;
};

// Throws FrameInvalid when the frame constraints are violated beyond tol.
ZetaDecomposition decompose_zeta(const AmbientStructure& S, const NullFrame& frame, double tol);

enum class PositionClass { Ascreen, Inascreen };

std::string to_string(PositionClass c);

struct Classification {
  PositionClass label = PositionClass::Inascreen;
  bool tangential = false;  // inascreen with a = b = 0
  bool proper = false;      // inascreen with b != 0
  std::map<std::string, double> diagnostics;
};

// Exactly one label; throws InconsistentDecomposition when neither case fits
// (a broken frame).
Classification classify(const ZetaDecomposition& dec, double tol);

// Wherever b = 0, a must vanish as well (tangency forces zeta into the
// screen). Report-only.
struct CalinReport {
  int points_checked = 0;
  int applicable = 0;  // points with |b| <= tol
  int violations = 0;
  double max_a_where_b_zero = 0.0;
  bool pass = true;
};
CalinReport verify_calin(const AmbientStructure& S, const Hypersurface& H,
                         const std::vector<Vector>& points, const ScreenPolicy& policy,
                         double tol);

// Independence certificates for proper inascreen frames: phi xi, phi N
// independent, zeta independent of TM, ambient dimension >= 5.
struct IndependenceReport {
  bool applicable = false;
  double gram_det_abs = 0.0;
  bool phi_pair_independent = false;
  bool zeta_independent = false;
  bool dimension_ok = false;
  bool pass = true;
};
IndependenceReport check_independence(const AmbientStructure& S, const NullFrame& frame,
                                      const ZetaDecomposition& dec, double tol);

}  // namespace nullsurf

#endif  // NULLSURF_CLASSIFY_HPP_
