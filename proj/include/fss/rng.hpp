#pragma once

#include <cstdint>

namespace fss {

// splitmix64.  Small, fully specified, identical on every platform;
// the standard-library distributions are not guaranteed to be, and
// reports must be byte-stable across runs and machines.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, n), rejection sampled
  std::uint64_t below(std::uint64_t n) {
    if (n <= 1) return 0;
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return v % n;
  }

  // uniform integer in [lo, hi]
  std::int64_t int_in(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  // derive an independent stream deterministically
  static std::uint64_t mix(std::uint64_t seed, std::uint64_t salt) {
    Rng r(seed ^ (0x632be59bd9b4e019ULL * (salt + 1)));
    return r.next();
  }

 private:
  std::uint64_t state_;
};

}  // namespace fss
