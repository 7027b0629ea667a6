#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>

namespace fejer {

/// SplitMix64 finalizer.
constexpr std::uint64_t splitmix64_mix(std::uint64_t z) noexcept
{
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Counter-based random stream keyed by (master_seed, stream_id).
///
/// The i-th output is splitmix64_mix(key + i * golden) with key derived from
/// both seeds, i.e. a SplitMix64 sequence started at `key`. Two streams with
/// the same pair produce identical output on any thread, in any order.
/// Satisfies UniformRandomBitGenerator.
class RngStream
{
public:
  using result_type = std::uint64_t;

  RngStream(std::uint64_t master_seed, std::uint64_t stream_id) noexcept
    : master_(master_seed)
    , stream_(stream_id)
    , key_(splitmix64_mix(splitmix64_mix(master_seed) ^ (stream_id * 0xD1B54A32D192ED03ULL + 1)))
  {
  }

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

  result_type operator()() noexcept
  {
    ++counter_;
    return splitmix64_mix(key_ + counter_ * 0x9E3779B97F4A7C15ULL);
  }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() noexcept { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  /// Uniform on (0, 1), safe for logarithms.
  double uniform_open() noexcept
  {
    return (static_cast<double>((*this)() >> 11) + 0.5) * 0x1.0p-53;
  }

  /// Standard normal via the Box-Muller transform (pairs are cached).
  double normal() noexcept
  {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double r = std::sqrt(-2.0 * std::log(uniform_open()));
    const double t = 2.0 * std::numbers::pi * uniform();
    spare_ = r * std::sin(t);
    has_spare_ = true;
    return r * std::cos(t);
  }

  /// Exponential with unit rate.
  double exponential() noexcept { return -std::log(uniform_open()); }

  std::uint64_t master_seed() const noexcept { return master_; }
  std::uint64_t stream_id() const noexcept { return stream_; }

private:
  std::uint64_t master_;
  std::uint64_t stream_;
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

} // namespace fejer
