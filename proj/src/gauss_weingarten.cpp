#include "nullsurf/gauss_weingarten.hpp"

#include <algorithm>
#include <cmath>

#include "nullsurf/rng.hpp"

namespace nullsurf {

FrameField::FrameField(const AmbientStructure& S, const Hypersurface& H, const Vector& base_point,
                       const ScreenPolicy& policy, double tol)
    : S_(S), H_(H), policy_(policy), tol_(tol), base_(build_null_frame(S, H, base_point, policy, tol)) {}

Vector FrameField::retract(Vector q) const { return retract_once(H_, std::move(q)); }

NullFrame FrameField::at(const Vector& q) const {
  NullFrame f = build_null_frame(S_, H_, q, policy_, tol_);
  if (!(f.pivots == base_.pivots))
    throw PivotInstability("frame field: pivot choices change near the base point");
  return f;
}

double FrameField::certify_radius(double r, int samples, std::uint64_t seed) {
  for (int level = 0; level < 7; ++level) {
    SplitMix64 rng(seed);
    bool ok = true;
    for (int s = 0; s < samples && ok; ++s) {
      Vector q = base_.point;
      for (auto& x : q) x += rng.uniform(-r, r);
      try {
        at(retract(std::move(q)));
      } catch (const Error&) {
        ok = false;
      }
    }
    if (ok) {
      certified_radius_ = r;
      return r;
    }
    r *= 0.5;
  }
  certified_radius_ = 0.0;
  return 0.0;
}

Vector ambient_derivative(const std::function<Vector(const Vector&)>& field, const Vector& p,
                          const Vector& X, double h) {
  if (h <= 0.0) throw EvaluationFailure("ambient_derivative: step must be positive");
  Vector plus, minus;
  try {
    plus = field(add(p, scaled(X, h)));
    minus = field(sub(p, scaled(X, h)));
  } catch (const Error& e) {
    throw EvaluationFailure(std::string("ambient_derivative: field evaluation failed: ") +
                            e.what());
  }
  return scaled(sub(plus, minus), 1.0 / (2.0 * h));
}

namespace {

std::vector<Vector> frame_fields(const NullFrame& f) {
  // tangent basis fields followed by N
  std::vector<Vector> out = f.tangent_basis();
  out.push_back(f.N);
  return out;
}

}  // namespace

SecondFundamentalData second_fundamental(const FrameField& field, double h) {
  const AmbientStructure& S = field.structure();
  SecondFundamentalData data;
  data.h = h;
  data.frame = field.base();
  data.tangent = data.frame.tangent_basis();
  const NullFrame& f0 = data.frame;
  const Vector& p = f0.point;
  const int m = static_cast<int>(data.tangent.size());
  const int sdim = static_cast<int>(f0.screen.size());

  data.B = Mat(m, m);
  data.C = Mat(m, sdim);
  data.tau = Vector(static_cast<std::size_t>(m), 0.0);
  data.theta = Vector(static_cast<std::size_t>(m), 0.0);
  data.dT.assign(static_cast<std::size_t>(m), {});
  data.dN.assign(static_cast<std::size_t>(m), Vector());
  data.dXi.assign(static_cast<std::size_t>(m), Vector());

  for (int i = 0; i < m; ++i) {
    const Vector& X = data.tangent[static_cast<std::size_t>(i)];
    NullFrame fp, fm;
    try {
      fp = field.at(field.retract(add(p, scaled(X, h))));
      fm = field.at(field.retract(sub(p, scaled(X, h))));
    } catch (const PivotInstability&) {
      throw;
    } catch (const Error& e) {
      throw EvaluationFailure(std::string("second_fundamental: probe frame failed: ") + e.what());
    }
    const auto plus = frame_fields(fp);
    const auto minus = frame_fields(fm);
    auto& row = data.dT[static_cast<std::size_t>(i)];
    row.reserve(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j)
      row.push_back(scaled(sub(plus[static_cast<std::size_t>(j)], minus[static_cast<std::size_t>(j)]),
                           1.0 / (2.0 * h)));
    data.dN[static_cast<std::size_t>(i)] =
        scaled(sub(plus.back(), minus.back()), 1.0 / (2.0 * h));
    data.dXi[static_cast<std::size_t>(i)] = row.front();
  }

  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j)
      data.B(i, j) = S.g(data.dT[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], f0.xi);
    data.tau[static_cast<std::size_t>(i)] = S.g(data.dN[static_cast<std::size_t>(i)], f0.xi);
    data.theta[static_cast<std::size_t>(i)] =
        S.g(data.tangent[static_cast<std::size_t>(i)], f0.N);

    Vector an = sub(data.dN[static_cast<std::size_t>(i)],
                    scaled(f0.N, data.tau[static_cast<std::size_t>(i)]));
    data.A_N.push_back(scaled(an, -1.0));
    Vector as = add(data.dXi[static_cast<std::size_t>(i)],
                    scaled(f0.xi, data.tau[static_cast<std::size_t>(i)]));
    data.A_star.push_back(scaled(as, -1.0));

    // C(X, PY) over the screen columns; P xi = 0, P s_j = s_j
    for (int j = 0; j < sdim; ++j) {
      const Vector& dPY = data.dT[static_cast<std::size_t>(i)][static_cast<std::size_t>(j + 1)];
      const Vector nabla = sub(dPY, scaled(f0.N, data.B(i, j + 1)));
      data.C(i, j) = S.g(nabla, f0.N);
    }
  }
  return data;
}

SecondFundamentalData second_fundamental(const AmbientStructure& S, const Hypersurface& H,
                                         const Vector& p, const ScreenPolicy& policy, double h,
                                         double tol) {
  FrameField field(S, H, p, policy, tol);
  return second_fundamental(field, h);
}

double GWReport::max_residual() const {
  double m = b_symmetry;
  m = std::max(m, shape_b);
  m = std::max(m, shape_c);
  m = std::max(m, nabla_g);
  m = std::max(m, b_xi_column);
  return m;
}

GWReport verify_gw_identities(const AmbientStructure& S, const FrameField& field,
                              const SecondFundamentalData& data, double h) {
  GWReport rep;
  const NullFrame& f0 = data.frame;
  const Vector& p = f0.point;
  const int m = data.tdim();
  const int sdim = static_cast<int>(f0.screen.size());

  for (int i = 0; i < m; ++i) {
    rep.b_xi_column = std::max(rep.b_xi_column, std::abs(data.B(i, 0)));
    for (int j = 0; j < m; ++j) {
      rep.b_symmetry = std::max(rep.b_symmetry, std::abs(data.B(i, j) - data.B(j, i)));
      rep.shape_b = std::max(
          rep.shape_b, std::abs(S.g(data.A_star[static_cast<std::size_t>(i)],
                                    data.tangent[static_cast<std::size_t>(j)]) -
                                data.B(i, j)));
    }
    for (int j = 0; j < sdim; ++j)
      rep.shape_c = std::max(
          rep.shape_c, std::abs(S.g(data.A_N[static_cast<std::size_t>(i)],
                                    f0.screen[static_cast<std::size_t>(j)]) -
                                data.C(i, j)));
  }

  // (nabla_X g)(Y, Z) = X(g(Y,Z)) - g(nabla_X Y, Z) - g(Y, nabla_X Z)
  //                   = B(X,Y) theta(Z) + B(X,Z) theta(Y)
  for (int i = 0; i < m; ++i) {
    const Vector& X = data.tangent[static_cast<std::size_t>(i)];
    const NullFrame fp = field.at(field.retract(add(p, scaled(X, h))));
    const NullFrame fm = field.at(field.retract(sub(p, scaled(X, h))));
    const auto tp = fp.tangent_basis();
    const auto tm = fm.tangent_basis();
    for (int j = 0; j < m; ++j) {
      const Vector nabla_j = sub(data.dT[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
                                 scaled(f0.N, data.B(i, j)));
      for (int k = 0; k < m; ++k) {
        const Vector nabla_k =
            sub(data.dT[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)],
                scaled(f0.N, data.B(i, k)));
        const double ds = (S.g(tp[static_cast<std::size_t>(j)], tp[static_cast<std::size_t>(k)]) -
                           S.g(tm[static_cast<std::size_t>(j)], tm[static_cast<std::size_t>(k)])) /
                          (2.0 * h);
        const double nabla_g =
            ds - S.g(nabla_j, data.tangent[static_cast<std::size_t>(k)]) -
            S.g(data.tangent[static_cast<std::size_t>(j)], nabla_k);
        const double expect = data.B(i, j) * data.theta[static_cast<std::size_t>(k)] +
                              data.B(i, k) * data.theta[static_cast<std::size_t>(j)];
        rep.nabla_g = std::max(rep.nabla_g, std::abs(nabla_g - expect));
      }
    }
  }
  return rep;
}

}  // namespace nullsurf
