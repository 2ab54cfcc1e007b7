#pragma once

// Deterministic seeding. Every property/trial pair gets its own stream
// derived from (seed, property id, trial); reports are reproducible
// byte-for-byte for a fixed seed.

#include <cstdint>
#include <string_view>

namespace dressing {

struct SplitMix64 {
  uint64_t s;

  explicit SplitMix64(uint64_t seed) : s(seed) {}

  uint64_t next() {
    uint64_t z = (s += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  double uniform() {  // [0, 1)
    return double(next() >> 11) * 0x1.0p-53;
  }

  // Uniform in [lo, hi].
  double range(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Dyadic rational k/64 with k in [-kmax, kmax]; products of a few of these
  // with small integers are exact in double precision, which keeps the
  // structural-zero identities exact.
  double dyadic(int kmax = 32) {
    uint64_t span = uint64_t(2 * kmax + 1);
    int k = int(next() % span) - kmax;
    return double(k) / 64.0;
  }

  int uniform_int(int lo, int hi) {  // [lo, hi]
    return lo + int(next() % uint64_t(hi - lo + 1));
  }
};

inline uint64_t fnv1a(std::string_view s, uint64_t h = 0xcbf29ce484222325ull) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

inline SplitMix64 stream_for(uint64_t seed, std::string_view property, uint64_t trial) {
  uint64_t h = fnv1a(property);
  h ^= seed + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  h ^= (trial + 1) * 0xd1b54a32d192ed03ull;
  return SplitMix64(h);
}

}  // namespace dressing
