#pragma once

#include <cstdint>
#include <random>

namespace foa {

// Deterministic random source.  Raw mt19937_64 output is mapped to doubles
// by hand because the standard distributions are implementation-defined;
// this keeps generated instances byte-identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double unit() { return (gen_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

  // Inclusive on both ends.
  int uniform_int(int lo, int hi) {
    const int span = hi - lo + 1;
    int v = lo + static_cast<int>(unit() * span);
    return v > hi ? hi : v;
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace foa
