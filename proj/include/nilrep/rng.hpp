#pragma once

#include <cstdint>
#include <random>

namespace nilrep {

// Deterministic random source.  Uses mt19937_64 directly with hand-rolled
// range reduction so that identical seeds give identical streams regardless
// of the standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  // Uniform integer in [lo, hi], inclusive.
  long uniform(long lo, long hi) {
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    // Rejection sampling to avoid modulo bias.
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t v;
    do {
      v = gen_();
    } while (v >= limit);
    return lo + static_cast<long>(v % span);
  }

  // Uniform nonzero integer in [lo, hi] (requires lo < 0 < hi).
  long uniform_nonzero(long lo, long hi) {
    long v;
    do {
      v = uniform(lo, hi);
    } while (v == 0);
    return v;
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace nilrep
