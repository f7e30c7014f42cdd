#pragma once

#include <cmath>
#include <cstdint>

namespace csg::rng {

// Counter-based generator: every draw is a pure function of a 4-word key, so
// streams can be split by (epoch, batch, beam, step) without carrying state.
// Mixing is SplitMix64 over the combined words.
struct Key {
  uint64_t a = 0, b = 0, c = 0, d = 0;
};

inline uint64_t mix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

inline uint64_t hash(const Key& k) {
  uint64_t h = mix64(k.a);
  h = mix64(h ^ k.b);
  h = mix64(h ^ k.c);
  h = mix64(h ^ k.d);
  return h;
}

// Uniform on the open interval (0,1); never returns 0 or 1, so log/loglog are safe.
inline double uniform(const Key& k) {
  return (static_cast<double>(hash(k) >> 11) + 0.5) * 0x1.0p-53;
}

inline double gumbel(const Key& k) {
  return -std::log(-std::log(uniform(k)));
}

// Uniform integer in [0, n) by 128-bit multiply (unbiased enough for n << 2^64).
inline uint64_t below(const Key& k, uint64_t n) {
  return static_cast<uint64_t>((static_cast<__uint128_t>(hash(k)) * n) >> 64);
}

// Small stateful stream for places where a sequence is more natural than keys.
// Deterministic across platforms (unlike std:: distributions).
class Stream {
 public:
  explicit Stream(const Key& k) : state_(hash(k)) {}
  explicit Stream(uint64_t seed) : state_(mix64(seed)) {}

  uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ull;
    return mix64(state_);
  }
  double next_uniform() { return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53; }
  double next_gumbel() { return -std::log(-std::log(next_uniform())); }
  // standard normal via Box-Muller (one value per call; no cache, keeps replay simple)
  double next_normal() {
    double u1 = next_uniform(), u2 = next_uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
  }
  uint64_t below(uint64_t n) {
    return static_cast<uint64_t>((static_cast<__uint128_t>(next_u64()) * n) >> 64);
  }

 private:
  uint64_t state_;
};

}  // namespace csg::rng
