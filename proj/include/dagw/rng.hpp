#pragma once
#include <cstdint>

namespace dagw {

// splitmix64 (Steele, Lea, Flood; public-domain reference constants).
// Every randomized choice in the tool draws from this generator so that a
// (config, seed) pair reproduces the same execution bit-for-bit on any
// platform. Modulo reduction is used for bounded draws: the tiny bias is
// irrelevant here, determinism is what matters.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : s_(seed) {}

  uint64_t next() {
    uint64_t z = (s_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  // Uniform-ish value in [0, n); n = 0 yields 0.
  uint64_t below(uint64_t n) { return n ? next() % n : 0; }
  bool coin() { return next() & 1; }

 private:
  uint64_t s_;
};

}  // namespace dagw
