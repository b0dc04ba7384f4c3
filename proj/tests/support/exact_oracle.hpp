// Test-only exact arithmetic over Q[sqrt(2)] for the 5-dimensional fixture
// computations. Recomputes frames, decompositions and induced data directly
// from the defining formulas, independently of the library code paths.
#ifndef NULLSURF_TESTS_EXACT_ORACLE_HPP_
#define NULLSURF_TESTS_EXACT_ORACLE_HPP_

#include <array>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace oracle {

struct Frac {
  long long num = 0;
  long long den = 1;

  Frac() = default;
  Frac(long long n) : num(n), den(1) {}
  Frac(long long n, long long d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) throw std::runtime_error("oracle: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  bool is_zero() const { return num == 0; }

  friend Frac operator+(Frac a, Frac b) { return Frac(a.num * b.den + b.num * a.den, a.den * b.den); }
  friend Frac operator-(Frac a, Frac b) { return Frac(a.num * b.den - b.num * a.den, a.den * b.den); }
  friend Frac operator*(Frac a, Frac b) { return Frac(a.num * b.num, a.den * b.den); }
  friend Frac operator/(Frac a, Frac b) {
    if (b.num == 0) throw std::runtime_error("oracle: division by zero");
    return Frac(a.num * b.den, a.den * b.num);
  }
  friend Frac operator-(Frac a) { return Frac(-a.num, a.den); }
  friend bool operator==(Frac a, Frac b) { return a.num == b.num && a.den == b.den; }
};

// q = r + s sqrt(2)
struct Q2 {
  Frac r, s;

  Q2() = default;
  Q2(Frac rational) : r(rational) {}
  Q2(long long n) : r(Frac(n)) {}
  Q2(Frac rational, Frac root2) : r(rational), s(root2) {}
  static Q2 sqrt2() { return Q2(Frac(0), Frac(1)); }

  double value() const { return r.value() + s.value() * std::sqrt(2.0); }
  bool is_zero() const { return r.is_zero() && s.is_zero(); }

  friend Q2 operator+(Q2 a, Q2 b) { return Q2(a.r + b.r, a.s + b.s); }
  friend Q2 operator-(Q2 a, Q2 b) { return Q2(a.r - b.r, a.s - b.s); }
  friend Q2 operator-(Q2 a) { return Q2(-a.r, -a.s); }
  friend Q2 operator*(Q2 a, Q2 b) {
    // (r1 + s1 v2)(r2 + s2 v2) = r1 r2 + 2 s1 s2 + (r1 s2 + s1 r2) v2
    return Q2(a.r * b.r + Frac(2) * (a.s * b.s), a.r * b.s + a.s * b.r);
  }
  friend Q2 operator/(Q2 a, Q2 b) {
    // conjugate: 1/(r + s v2) = (r - s v2) / (r^2 - 2 s^2)
    const Frac d = b.r * b.r - Frac(2) * (b.s * b.s);
    if (d.is_zero()) throw std::runtime_error("oracle: division by zero in Q[sqrt2]");
    const Q2 conj(b.r / d, -b.s / d);
    return a * conj;
  }
  friend bool operator==(Q2 a, Q2 b) { return a.r == b.r && a.s == b.s; }
};

using Vec5 = std::array<Q2, 5>;

// ambient model: metric diag(-1,-1,1,1,1), phi the pair rotation, zeta = e5
inline constexpr int kDim = 5;

inline Q2 inner(const Vec5& u, const Vec5& v) {
  return -(u[0] * v[0]) - (u[1] * v[1]) + u[2] * v[2] + u[3] * v[3] + u[4] * v[4];
}

inline Q2 edot(const Vec5& u, const Vec5& v) {
  Q2 s;
  for (int i = 0; i < kDim; ++i) s = s + u[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(i)];
  return s;
}

inline Vec5 phi(const Vec5& u) { return Vec5{-u[1], u[0], -u[3], u[2], Q2(0)}; }

inline Q2 eta(const Vec5& u) { return u[4]; }

inline Vec5 zeta() { return Vec5{Q2(0), Q2(0), Q2(0), Q2(0), Q2(1)}; }

inline Vec5 add(const Vec5& u, const Vec5& v) {
  Vec5 w;
  for (int i = 0; i < kDim; ++i) w[static_cast<std::size_t>(i)] = u[static_cast<std::size_t>(i)] + v[static_cast<std::size_t>(i)];
  return w;
}

inline Vec5 sub(const Vec5& u, const Vec5& v) {
  Vec5 w;
  for (int i = 0; i < kDim; ++i) w[static_cast<std::size_t>(i)] = u[static_cast<std::size_t>(i)] - v[static_cast<std::size_t>(i)];
  return w;
}

inline Vec5 scaled(const Vec5& u, Q2 c) {
  Vec5 w;
  for (int i = 0; i < kDim; ++i) w[static_cast<std::size_t>(i)] = u[static_cast<std::size_t>(i)] * c;
  return w;
}

inline Vec5 basis(int i) {
  Vec5 e{};
  e[static_cast<std::size_t>(i)] = Q2(1);
  return e;
}

// Exact frame data for a null xi with a candidate vector V:
//   V' = V - (g(V, phi xi)/g(phi xi, phi xi)) phi xi   (when phi xi non-null)
//   N  = (V' - (g(V',V')/(2 g(V',xi))) xi) / g(V',xi)
struct ExactFrame {
  Vec5 xi, N, phi_xi, phi_N;
  Q2 a, b;
};

inline ExactFrame exact_frame(const Vec5& xi, const Vec5& candidate) {
  ExactFrame f;
  f.xi = xi;
  f.phi_xi = phi(xi);
  f.b = eta(xi);

  Vec5 V = candidate;
  const Q2 pxx = inner(f.phi_xi, f.phi_xi);
  if (!pxx.is_zero()) V = sub(V, scaled(f.phi_xi, inner(V, f.phi_xi) / pxx));
  const Q2 gvx = inner(V, xi);
  if (gvx.is_zero()) throw std::runtime_error("oracle: candidate pairs to zero with xi");
  f.N = scaled(sub(V, scaled(xi, inner(V, V) / (Q2(2) * gvx))), Q2(1) / gvx);
  f.phi_N = phi(f.N);
  f.a = eta(f.N);
  return f;
}

// zeta = W' + f1 phi N + f2 phi xi + a xi + b N
struct ExactDecomposition {
  Q2 a, b, f1, f2;
  Vec5 W, Wprime;
  Q2 lambda;       // meaningful only when degenerate
  bool degenerate = false;
};

inline ExactDecomposition exact_decomposition(const ExactFrame& f) {
  ExactDecomposition d;
  d.a = inner(f.N, zeta());
  d.b = inner(f.xi, zeta());
  d.W = sub(zeta(), add(scaled(f.xi, d.a), scaled(f.N, d.b)));

  const Q2 det = Q2(2) * d.a * d.b - Q2(1);
  d.degenerate = det.is_zero();
  if (!d.degenerate) {
    // [ g(pn,px) g(px,px) ] [f1]   [ g(W,px) ]
    // [ g(pn,pn) g(px,pn) ] [f2] = [ g(W,pn) ]
    const Q2 m00 = inner(f.phi_N, f.phi_xi), m01 = inner(f.phi_xi, f.phi_xi);
    const Q2 m10 = inner(f.phi_N, f.phi_N), m11 = inner(f.phi_xi, f.phi_N);
    const Q2 r0 = inner(d.W, f.phi_xi), r1 = inner(d.W, f.phi_N);
    const Q2 den = m00 * m11 - m01 * m10;
    d.f1 = (r0 * m11 - m01 * r1) / den;
    d.f2 = (m00 * r1 - r0 * m10) / den;
    d.Wprime = sub(d.W, add(scaled(f.phi_N, d.f1), scaled(f.phi_xi, d.f2)));
  } else {
    d.Wprime = Vec5{};
    d.lambda = edot(f.phi_xi, f.phi_N) / edot(f.phi_N, f.phi_N);
    d.f1 = Q2(0);
    d.f2 = Q2(0);
  }
  return d;
}

// omega(X) = g(phi X, xi) / b
inline Q2 exact_omega(const ExactFrame& f, const Vec5& X) {
  return inner(phi(X), f.xi) / eta(f.xi);
}

// fixture normals
inline Vec5 fixture_a_xi() { return Vec5{Q2(1), Q2(0), Q2(1), Q2(0), Q2(0)}; }
inline Vec5 fixture_b_xi() { return Vec5{Q2::sqrt2(), Q2(0), Q2(1), Q2(0), Q2(1)}; }

}  // namespace oracle

#endif  // NULLSURF_TESTS_EXACT_ORACLE_HPP_
