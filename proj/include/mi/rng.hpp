#pragma once

#include <cstdint>
#include <vector>

namespace mi {

/// Deterministic per-trial random stream. Trial streams are derived from
/// (seed, trial index) alone, so campaign reports do not depend on worker
/// count or scheduling. The mixer is splitmix64.
class TrialRng {
public:
  TrialRng(std::uint64_t seed, std::uint64_t trial) {
    state_ = mix(seed + 0x9e3779b97f4a7c15ULL * (trial + 1));
  }

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix(state_);
  }

  /// Uniform draw in [lo, hi] (inclusive).
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(next() % span);
  }

  template <class T>
  const T& pick(const std::vector<T>& items) {
    return items[static_cast<std::size_t>(next() % items.size())];
  }

private:
  static std::uint64_t mix(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ULL;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebULL;
    z ^= z >> 31;
    return z;
  }

  std::uint64_t state_;
};

} // namespace mi
