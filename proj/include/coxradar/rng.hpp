#pragma once

#include <cmath>
#include <cstdint>

namespace coxradar {

inline uint64_t splitmix64(uint64_t& state) {
  uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

/// xoshiro256++ with hand-rolled distributions. std:: distributions are
/// implementation-defined sequences; realizations here must be bit-identical
/// for a given seed on every platform and compiler.
class Rng {
 public:
  explicit Rng(uint64_t seed) {
    uint64_t sm = seed;
    for (auto& w : s_) w = splitmix64(sm);
  }

  /// Stream derived from (root, stream id); independent of draw order across
  /// streams, so parallel consumers stay reproducible.
  static Rng substream(uint64_t root, uint64_t stream) {
    uint64_t sm = root;
    const uint64_t a = splitmix64(sm);
    uint64_t sm2 = stream ^ 0xd1b54a32d192ed03ull;
    const uint64_t b = splitmix64(sm2);
    return Rng(a ^ (b * 0x2545f4914f6cdd1dull + 0x9e3779b97f4a7c15ull));
  }

  uint64_t next() {
    const uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + (b - a) * uniform(); }

  /// Exponential with the given mean; strictly positive.
  double exponential(double mean) { return -mean * std::log1p(-uniform()); }

  bool coin() { return (next() >> 63) != 0; }

  /// Knuth's product method, chunked so the e^-mean factor never underflows.
  long poisson(double mean) {
    long total = 0;
    while (mean > 0.0) {
      const double chunk = mean > 30.0 ? 30.0 : mean;
      mean -= chunk;
      const double limit = std::exp(-chunk);
      double prod = 1.0;
      long k = -1;
      do {
        ++k;
        prod *= uniform();
      } while (prod > limit);
      total += k;
    }
    return total;
  }

 private:
  static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
  uint64_t s_[4];
};

}  // namespace coxradar
