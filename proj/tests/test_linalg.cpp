#include <doctest.h>

#include <cmath>

#include "nullsurf/linalg.hpp"
#include "nullsurf/rng.hpp"

using namespace nullsurf;

namespace {
const Metric g5 = Metric::from_pair_signs({-1, 1});
const double kSqrt2 = std::sqrt(2.0);
}  // namespace

TEST_SUITE_BEGIN("linalg");

TEST_CASE("inner products on the 5-dim model") {
  CHECK(inner(g5, {1, 0, 1, 0, 0}, {1, 0, 1, 0, 0}) == 0.0);
  CHECK(inner(g5, {0, 0, 0, 0, 1}, {0, 0, 0, 0, 1}) == 1.0);
  CHECK(std::abs(inner(g5, {kSqrt2, 0, 1, 0, 1}, {kSqrt2, 0, 1, 0, 1})) < 1e-12);
  CHECK_THROWS_AS(inner(g5, {1, 0, 0}, {1, 0, 0, 0, 0}), DimensionMismatch);
}

TEST_CASE("inner is symmetric and bilinear") {
  SplitMix64 rng(11);
  for (int t = 0; t < 200; ++t) {
    const Vector u = rng.vector(5, -1, 1);
    const Vector v = rng.vector(5, -1, 1);
    const Vector w = rng.vector(5, -1, 1);
    const double c = rng.uniform(-2, 2);
    CHECK(inner(g5, u, v) == inner(g5, v, u));
    CHECK(std::abs(inner(g5, add(u, scaled(v, c)), w) - inner(g5, u, w) - c * inner(g5, v, w)) <
          1e-12);
  }
}

TEST_CASE("raise_index on fixture covectors") {
  CHECK(raise_index(g5, {-1, 0, 1, 0, 0}) == Vector{1, 0, 1, 0, 0});
  CHECK(raise_index(g5, {0, 0, 0, 0, 1}) == Vector{0, 0, 0, 0, 1});
  CHECK(raise_index(g5, {-kSqrt2, 0, 1, 0, 1}) == Vector{kSqrt2, 0, 1, 0, 1});
}

TEST_CASE("raise then lower is the identity") {
  SplitMix64 rng(12);
  for (int t = 0; t < 200; ++t) {
    const Vector w = rng.vector(5, -3, 3);
    CHECK(lower_index(g5, raise_index(g5, w)) == w);
    // duality: g(raise(w), v) = <w, v>
    const Vector v = rng.vector(5, -3, 3);
    CHECK(std::abs(inner(g5, raise_index(g5, w), v) - edot(w, v)) < 1e-12);
  }
}

TEST_CASE("gram_det2 fixture values") {
  // fixture A pair
  const Vector pxA{0, 1, 0, 1, 0}, pnA{0, -0.5, 0, 0.5, 0};
  CHECK(std::abs(gram_det2(g5, pxA, pnA) - (-1.0)) < 1e-12);
  // repeated vector
  const Vector u{0.3, -1.2, 0.7, 2.0, -0.4};
  CHECK(gram_det2(g5, u, u) == 0.0);
  // fixture B pair
  const Vector pxB{0, kSqrt2, 0, 1, 0}, pnB{0, -kSqrt2 / 4, 0, 0.25, 0};
  CHECK(std::abs(gram_det2(g5, pxB, pnB) - (-0.5)) < 1e-12);
}

TEST_CASE("orthocomplement on the fixture screens") {
  // fixture A screen {e2, e4, e5}, span {phi xi, phi N}
  const Subspace screen = make_subspace(
      g5, {{0, 1, 0, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}}, 1e-12);
  const Subspace span =
      make_subspace(g5, {{0, 1, 0, 1, 0}, {0, -0.5, 0, 0.5, 0}}, 1e-12);
  const Subspace dp = orthocomplement(g5, span, screen, 1e-12, true);
  REQUIRE(dp.dim() == 1);
  const double cosang = std::abs(edot(dp.basis[0], {0, 0, 0, 0, 1})) / enorm(dp.basis[0]);
  CHECK(std::abs(cosang - 1.0) < 1e-12);

  // empty span returns `within` itself
  const Subspace empty = make_subspace(g5, {}, 1e-12);
  const Subspace same = orthocomplement(g5, empty, screen, 1e-12);
  CHECK(same.dim() == 3);
  for (int j = 0; j < 3; ++j) CHECK(same.basis[static_cast<std::size_t>(j)] == screen.basis[static_cast<std::size_t>(j)]);

  // fixture B screen {e2, e4, (0,0,-1,0,1)}, span {phi xi, phi N}
  const Subspace screenB = make_subspace(
      g5, {{0, 1, 0, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, -1, 0, 1}}, 1e-12);
  const Subspace spanB = make_subspace(
      g5, {{0, kSqrt2, 0, 1, 0}, {0, -kSqrt2 / 4, 0, 0.25, 0}}, 1e-12);
  const Subspace dpB = orthocomplement(g5, spanB, screenB, 1e-12, true);
  REQUIRE(dpB.dim() == 1);
  const Vector expect{0, 0, -0.5, 0, 0.5};
  const double cosB = std::abs(edot(dpB.basis[0], expect)) / (enorm(dpB.basis[0]) * enorm(expect));
  CHECK(std::abs(cosB - 1.0) < 1e-12);
}

TEST_CASE("orthocomplement output is orthogonal to the span") {
  SplitMix64 rng(13);
  std::vector<Vector> full;
  for (int i = 0; i < 5; ++i) {
    Vector e(5, 0.0);
    e[static_cast<std::size_t>(i)] = 1.0;
    full.push_back(e);
  }
  const Subspace whole = make_subspace(g5, full, 1e-12);
  for (int t = 0; t < 50; ++t) {
    const Subspace span = make_subspace(g5, {rng.vector(5, -1, 1), rng.vector(5, -1, 1)}, 1e-9);
    const Subspace comp = orthocomplement(g5, span, whole, 1e-9);
    CHECK(comp.dim() + span.dim() == 5);
    for (const auto& b : comp.basis)
      for (const auto& s : span.basis) CHECK(std::abs(inner(g5, b, s)) < 1e-9);
  }
}

TEST_CASE("degenerate span rejected only for direct sums") {
  std::vector<Vector> full;
  for (int i = 0; i < 5; ++i) {
    Vector e(5, 0.0);
    e[static_cast<std::size_t>(i)] = 1.0;
    full.push_back(e);
  }
  const Subspace whole = make_subspace(g5, full, 1e-12);
  const Subspace null_span = make_subspace(g5, {{1, 0, 1, 0, 0}}, 1e-12);  // null direction
  CHECK_THROWS_AS(orthocomplement(g5, null_span, whole, 1e-12, true), DegenerateSpan);
  const Subspace comp = orthocomplement(g5, null_span, whole, 1e-12, false);
  CHECK(comp.dim() == 4);
}

TEST_CASE("solve and nullspace sanity") {
  Mat A(2, 2);
  A(0, 0) = 2;
  A(0, 1) = 1;
  A(1, 0) = 1;
  A(1, 1) = 3;
  const Vector x = solve(A, {5, 10});
  CHECK(std::abs(x[0] - 1.0) < 1e-12);
  CHECK(std::abs(x[1] - 3.0) < 1e-12);

  Mat S(2, 2);
  S(0, 0) = 1;
  S(0, 1) = 2;
  S(1, 0) = 2;
  S(1, 1) = 4;
  CHECK_THROWS_AS(solve(S, {1, 1}), SingularSystem);

  Mat C(2, 5);
  C(0, 0) = 1;
  C(0, 2) = -1;
  C(1, 4) = 1;
  const auto ns = nullspace(C, 1e-12);
  CHECK(ns.rank == 2);
  CHECK(ns.basis.size() == 3);
  for (const auto& v : ns.basis) {
    CHECK(std::abs(v[0] - v[2]) < 1e-12);
    CHECK(std::abs(v[4]) < 1e-12);
  }
}

TEST_CASE("metric construction rules") {
  CHECK_THROWS_AS(Metric::from_pair_signs({1, 1}), RiemannianSignature);
  CHECK_THROWS_AS(Metric::from_pair_signs({}), DimensionMismatch);
  CHECK_THROWS_AS(Metric::from_pair_signs({-1, 2}), Error);
  CHECK_THROWS_AS(Metric::from_diagonal({-1, 1, 1, 1, 1}), Error);  // unpaired signs
  CHECK_THROWS_AS(Metric::from_diagonal({-1, -1, 1, 1}), DimensionMismatch);
  const Metric m = Metric::from_diagonal({-1, -1, 1, 1, 1});
  CHECK(m.dim() == 5);
  CHECK(m.pairs() == 2);
}

TEST_SUITE_END();
