#ifndef NULLSURF_RNG_HPP_
#define NULLSURF_RNG_HPP_

#include <cstdint>
#include <vector>

namespace nullsurf {

// splitmix64: portable, seeded, identical streams on every platform.
// Reports record seeds, so reruns must reproduce samples bit-for-bit.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, 1), 53-bit resolution
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  std::vector<double> vector(int dim, double lo, double hi) {
    std::vector<double> v(static_cast<std::size_t>(dim));
    for (auto& x : v) x = uniform(lo, hi);
    return v;
  }

 private:
  std::uint64_t state_;
};

}  // namespace nullsurf

#endif  // NULLSURF_RNG_HPP_
