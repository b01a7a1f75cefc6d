#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

namespace beba {

/// Mixes a master seed with a stream counter into an independent seed.
/// Used to give every campaign item its own stream so results do not depend
/// on execution order.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) noexcept;

/// Seeded random source with platform-independent output.
///
/// Wraps std::mt19937_64 (whose sequence is fixed by the standard) and maps
/// raw words to doubles and bounded integers itself, because the standard
/// distributions are implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  static Rng substream(std::uint64_t seed, std::uint64_t stream) {
    return Rng(derive_seed(seed, stream));
  }

  std::uint64_t next() { return engine_(); }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform();

  /// Uniform on [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform integer in [0, bound). `bound` must be positive.
  std::size_t below(std::size_t bound);

 private:
  std::mt19937_64 engine_;
};

}  // namespace beba
