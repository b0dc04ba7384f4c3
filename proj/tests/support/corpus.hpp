// Seeded corpora of lightlike affine hyperplanes used across the test suites.
#ifndef NULLSURF_TESTS_CORPUS_HPP_
#define NULLSURF_TESTS_CORPUS_HPP_

#include <cmath>
#include <vector>

#include "nullsurf/hypersurface.hpp"
#include "nullsurf/rng.hpp"

namespace corpus {

struct Item {
  nullsurf::Vector covector;
  double level = 0.0;
  nullsurf::Vector point;  // lies exactly on the plane
};

// Covectors split across the negative and positive metric slots, each part
// normalized to unit length, so the raised normal is null by construction.
// Draws whose basis-scan frame has a long transversal partner are rejected:
// the corpus checks absolute 1e-9 identities, which only make sense on
// O(1)-conditioned frames.
inline std::vector<Item> lightlike_hyperplanes(const nullsurf::AmbientStructure& S, int count,
                                               std::uint64_t seed, double box = 1.0) {
  nullsurf::SplitMix64 rng(seed);
  const int d = S.dim();
  std::vector<Item> out;
  int attempts = 0;
  while (static_cast<int>(out.size()) < count && ++attempts < 1000 * count) {
    nullsurf::Vector w = rng.vector(d, -1.0, 1.0);
    double neg = 0.0, pos = 0.0;
    for (int i = 0; i < d; ++i) {
      const double x = w[static_cast<std::size_t>(i)];
      (S.metric.sign(i) < 0 ? neg : pos) += x * x;
    }
    neg = std::sqrt(neg);
    pos = std::sqrt(pos);
    if (neg < 0.1 || pos < 0.1) continue;  // redraw nearly one-sided covectors
    for (int i = 0; i < d; ++i) w[static_cast<std::size_t>(i)] /= S.metric.sign(i) < 0 ? neg : pos;

    Item item;
    item.point = rng.vector(d, -box, box);
    item.level = nullsurf::edot(w, item.point);
    item.covector = w;

    try {
      const nullsurf::NullFrame f =
          nullsurf::build_null_frame(S, nullsurf::Hypersurface::affine(w, item.level), item.point,
                                     nullsurf::ScreenPolicy::basis_scan(), 1e-9);
      if (nullsurf::enorm(f.N) > 10.0) continue;
    } catch (const nullsurf::Error&) {
      continue;
    }
    out.push_back(std::move(item));
  }
  return out;
}

}  // namespace corpus

#endif  // NULLSURF_TESTS_CORPUS_HPP_
