#pragma once

#include <cstdint>
#include <random>
#include <span>

#include "orbit/scalar.hpp"

namespace orbit {

/// mt19937_64 with draws reduced by plain modulo, so a seed yields the same
/// stream on every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform-ish integer in [lo, hi].
  long uniform(long lo, long hi) {
    auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(engine_() % span);
  }
  bool coin() { return engine_() % 2 == 0; }

  /// p/q with |p| <= max_num and 1 <= q <= max_den.
  Rational rational(long max_num = 9, long max_den = 9) {
    Rational out(uniform(-max_num, max_num), uniform(1, max_den));
    out.canonicalize();
    return out;
  }

  template <typename T>
  const T& pick(std::span<const T> pool) {
    return pool[static_cast<std::size_t>(uniform(0, static_cast<long>(pool.size()) - 1))];
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace orbit
