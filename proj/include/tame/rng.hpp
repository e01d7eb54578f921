#pragma once

#include <cstdint>

namespace tame {

/// Deterministic splitmix64 stream. Test batteries and sampling use this
/// instead of <random> so that reports are byte-identical across standard
/// library implementations.
class DetRng {
 public:
  explicit DetRng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, bound). bound must be nonzero.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

  /// Uniform in [lo, hi] inclusive.
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  /// Derives an independent stream for a named sub-task.
  DetRng fork(std::uint64_t salt) const {
    DetRng r(state_ ^ (salt * 0x9e3779b97f4a7c15ull + 0x2545f4914f6cdd1dull));
    r.next();
    return r;
  }

 private:
  std::uint64_t state_;
};

}  // namespace tame
