#pragma once

#include <cstdint>
#include <random>

namespace evt {

/// Tag written into reports so every published number names the stream that
/// produced it.
inline constexpr const char* kRngTag = "mt19937_64/u53mid";

/// Deterministic uniform source used everywhere the library samples.
///
/// The algorithm is pinned so results replicate across builds and platforms:
/// the engine is std::mt19937_64 (its output sequence is fixed by the
/// standard) and uniforms are dyadic cell midpoints
///     u = ((word >> 11) + 0.5) * 2^-53,
/// which lie strictly inside (0, 1). Quantile transforms therefore never see
/// the endpoints 0 or 1.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

  /// Uniform draw in the open interval (0, 1).
  double uniform() {
    return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
  }

 private:
  std::mt19937_64 engine_;
};

/// Child seed for stream `index` of a run seeded with `seed` (splitmix64
/// finalizer). Distinct indices give decorrelated streams, so per-replicate
/// work is order-independent and bit-reproducible.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace evt
