#ifndef NULLSURF_HYPERSURFACE_HPP_
#define NULLSURF_HYPERSURFACE_HPP_

#include <string>
#include <vector>

#include "nullsurf/structure.hpp"

namespace nullsurf {

// Implicit level set F(x) = c with a closed-form differential.
// Affine: F = <w, x>. Quadric: F = x^T A x + <w, x> with A symmetric.
struct Hypersurface {
  enum class Kind { Affine, Quadric };

  Kind kind = Kind::Affine;
  Mat quad;         // quadric coefficient matrix, symmetrized at construction
  Vector covector;  // linear part
  double level = 0.0;
  double min_point_norm = 0.0;  // points closer to the origin are rejected
  std::string builtin;          // preset name, empty for user-defined surfaces

  int dim() const { return static_cast<int>(covector.size()); }
  double value(const Vector& p) const;
  Vector differential(const Vector& p) const;

  static Hypersurface affine(Vector w, double c);
  static Hypersurface quadric(Mat A, Vector w, double c);
  // F(x) = g(x, x), the null cone of the metric; vertex excluded.
  static Hypersurface null_cone(const Metric& g);
};

// One Newton step toward {F = c} along the Euclidean gradient.
Vector retract_once(const Hypersurface& H, Vector q);

// Iterated Newton projection; returns the final iterate (caller checks the
// residual).
Vector project_to_surface(const Hypersurface& H, Vector q, int max_iters);

// Screen selection policy. basis-scan walks e1, e2, ... in index order;
// auxiliary-vector uses one caller-supplied candidate.
struct ScreenPolicy {
  enum class Kind { BasisScan, AuxiliaryVector };
  Kind kind = Kind::BasisScan;
  Vector auxiliary;

  static ScreenPolicy basis_scan() { return {}; }
  static ScreenPolicy auxiliary_vector(Vector v) {
    ScreenPolicy p;
    p.kind = Kind::AuxiliaryVector;
    p.auxiliary = std::move(v);
    return p;
  }
};

// Discrete choices made while building a frame. Frames are differentiable in
// the base point only while this signature is constant.
struct PivotSignature {
  int scan_index = -1;  // accepted basis index, -1 for an auxiliary vector
  bool projected_candidate = false;
  bool degenerate = false;  // rank-1 span{phi xi, phi N} (ascreen split)
  std::vector<int> screen_pivots;
  std::vector<int> dprime_pivots;

  bool operator==(const PivotSignature&) const = default;
};

// Pointwise null frame: xi spans TM^perp, N the transversal null partner with
// g(xi,N)=1, screen the chosen complement containing phi xi and phi N, dprime
// the part of the screen perpendicular to both.
struct NullFrame {
  Vector point;
  Vector xi;
  Vector N;
  Vector phi_xi;
  Vector phi_N;
  std::vector<Vector> screen;  // 2n-1 vectors
  std::vector<Vector> dprime;  // 2n-3 vectors, 2n-2 on the degenerate split
  double a = 0.0;              // eta(N)
  double b = 0.0;              // eta(xi)
  bool degenerate_span = false;
  PivotSignature pivots;

  int dim() const { return static_cast<int>(xi.size()); }
  // tangent basis {xi} followed by the screen
  std::vector<Vector> tangent_basis() const;
};

// xi = raise_index(dF(p)). Throws NotOnHypersurface / NotLightlike.
Vector normal_xi(const AmbientStructure& S, const Hypersurface& H, const Vector& p, double tol);

NullFrame build_null_frame(const AmbientStructure& S, const Hypersurface& H, const Vector& p,
                           const ScreenPolicy& policy, double tol);

// Euclidean-relative residuals of the frame constraints.
struct FrameResiduals {
  double xi_null = 0.0;
  double n_null = 0.0;
  double pairing = 0.0;        // g(xi, N) - 1
  double screen_vs_xi = 0.0;   // max |g(xi, s_j)|
  double screen_vs_n = 0.0;    // max |g(N, s_j)|
  double phi_in_screen = 0.0;  // span residual of phi xi, phi N against the screen
  double dprime_orth = 0.0;    // max |g(d, phi xi)|, |g(d, phi N)|
  bool screen_nondegenerate = true;

  double max_residual() const;
};
FrameResiduals frame_residuals(const AmbientStructure& S, const NullFrame& frame);

// Coordinates of an ambient vector in the frame basis
// [phi xi, (phi N), dprime..., xi, N].
struct FrameComponents {
  double along_phi_xi = 0.0;
  double along_phi_n = 0.0;  // zero on the degenerate split
  Vector dprime_coeffs;
  double along_xi = 0.0;
  double along_n = 0.0;
};
FrameComponents frame_decompose(const NullFrame& frame, const Vector& v);

// phi-invariance test of D' plus the screen-membership assertion for phi d.
struct DprimeInvariance {
  bool invariant = true;
  bool in_screen = true;
  double span_defect = 0.0;    // components of phi d along phi xi, phi N
  double screen_defect = 0.0;  // components of phi d along xi, N
  double pairing_a = 0.0;      // g(phi d, phi N) + a eta(d)
  double pairing_b = 0.0;      // g(phi d, phi xi) + b eta(d)
};
DprimeInvariance check_dprime_invariance(const AmbientStructure& S, const NullFrame& frame,
                                         double tol);

}  // namespace nullsurf

#endif  // NULLSURF_HYPERSURFACE_HPP_
