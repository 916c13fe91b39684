#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace fusetrack {

/// Derives an independent stream seed from a base seed and a component name.
/// The name is FNV-1a hashed and mixed with the base through splitmix64, so
/// adding new named components never perturbs existing streams.
std::uint64_t derive_seed(std::uint64_t base, std::string_view component);

/// Deterministic random source. Distribution shaping is done in-house
/// (Box-Muller for gaussians) so output streams are identical across
/// standard-library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  /// Uniform double in [0, 1).
  double uniform() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Standard normal deviate.
  double gaussian();

  double gaussian(double mean, double sigma) { return mean + sigma * gaussian(); }

 private:
  std::mt19937_64 gen_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace fusetrack
