#pragma once

// Seeded RNG with hand-rolled mappings. std::uniform_real_distribution is
// implementation-defined, and verify runs promise identical reports for
// identical seeds, so only the raw mt19937_64 stream is used.

#include <complex>
#include <cstdint>
#include <random>

namespace isocover {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t bits() { return eng_(); }

  double unit() {  // [0,1)
    return static_cast<double>(bits() >> 11) * 0x1.0p-53;
  }

  double sym() { return 2.0 * unit() - 1.0; }  // [-1,1)

  std::complex<double> box() { return {sym(), sym()}; }  // [-1,1)^2

  int range(int lo, int hi) {  // inclusive
    return lo + static_cast<int>(bits() % static_cast<std::uint64_t>(hi - lo + 1));
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace isocover
