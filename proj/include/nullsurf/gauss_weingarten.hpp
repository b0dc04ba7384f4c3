#ifndef NULLSURF_GAUSS_WEINGARTEN_HPP_
#define NULLSURF_GAUSS_WEINGARTEN_HPP_

#include <cstdint>
#include <functional>

#include "nullsurf/classify.hpp"

namespace nullsurf {

// Deterministic frame field q -> build_null_frame(retract(q)). The build is
// differentiable only while its pivot signature stays constant; evaluation
// rejects probe points where it changes.
class FrameField {
 public:
  FrameField(const AmbientStructure& S, const Hypersurface& H, const Vector& base_point,
             const ScreenPolicy& policy, double tol);

  const NullFrame& base() const { return base_; }
  const Vector& base_point() const { return base_.point; }
  const AmbientStructure& structure() const { return S_; }
  const Hypersurface& surface() const { return H_; }

  // one Newton step onto {F = c}
  Vector retract(Vector q) const;

  // frame at q (not retracted here); throws PivotInstability on signature change
  NullFrame at(const Vector& q) const;

  // samples retracted points in a box of half-width r around the base point;
  // returns the largest half-width (<= r) at which all sampled signatures
  // matched, and records it as the certified smoothness radius
  double certify_radius(double r, int samples, std::uint64_t seed);
  double certified_radius() const { return certified_radius_; }

 private:
  AmbientStructure S_;  // held by value so the field owns its geometry
  Hypersurface H_;
  ScreenPolicy policy_;
  double tol_;
  NullFrame base_;
  double certified_radius_ = 0.0;
};

// Central difference (field(p + hX) - field(p - hX)) / 2h.
Vector ambient_derivative(const std::function<Vector(const Vector&)>& field, const Vector& p,
                          const Vector& X, double h);

// Extrinsic data extracted from finite-difference ambient derivatives of the
// frame field: B(X,Y) = g(D_X Y, xi), tau(X) = g(D_X N, xi),
// A_N X = -(D_X N - tau(X) N), A*_xi X = -D_X xi - tau(X) xi,
// C(X, PY) = g(D_X PY - B(X, PY) N, N), theta(X) = g(X, N).
struct SecondFundamentalData {
  NullFrame frame;
  std::vector<Vector> tangent;        // 2n ambient vectors at the base point
  Mat B;                              // 2n x 2n
  Mat C;                              // 2n x (2n-1), screen columns
  Vector tau;                         // 2n
  Vector theta;                       // 2n
  std::vector<Vector> A_N;            // ambient column per tangent direction
  std::vector<Vector> A_star;         // ambient column per tangent direction
  std::vector<std::vector<Vector>> dT;  // dT[i][j] = derivative of t_j along t_i
  std::vector<Vector> dN;             // derivative of N along t_i
  std::vector<Vector> dXi;            // derivative of xi along t_i
  double h = 0.0;

  int tdim() const { return static_cast<int>(tangent.size()); }
};

SecondFundamentalData second_fundamental(const FrameField& field, double h);
SecondFundamentalData second_fundamental(const AmbientStructure& S, const Hypersurface& H,
                                         const Vector& p, const ScreenPolicy& policy, double h,
                                         double tol);

struct GWReport {
  double b_symmetry = 0.0;   // B(X,Y) - B(Y,X)
  double shape_b = 0.0;      // g(A*_xi X, Y) - B(X,Y)
  double shape_c = 0.0;      // g(A_N X, PY) - C(X, PY)
  double nabla_g = 0.0;      // (nabla_X g)(Y,Z) - B(X,Y) theta(Z) - B(X,Z) theta(Y)
  double b_xi_column = 0.0;  // B(X, xi)

  double max_residual() const;
};
GWReport verify_gw_identities(const AmbientStructure& S, const FrameField& field,
                              const SecondFundamentalData& data, double h);

}  // namespace nullsurf

#endif  // NULLSURF_GAUSS_WEINGARTEN_HPP_
