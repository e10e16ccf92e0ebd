#ifndef DFPAIR_RNG_HPP
#define DFPAIR_RNG_HPP

#include <cstdint>
#include <random>

namespace dfpair
{

/**
 * Seedable, portable random source.
 *
 * Wraps std::mt19937_64, whose output sequence is fixed by the standard.
 * Real draws are converted here rather than through the std distributions,
 * whose algorithms differ between standard library vendors.
 */
class Rng
{
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform integer on [0, n); n must be positive.
  std::uint64_t below(std::uint64_t n)
  {
    // Rejection sampling keeps the result unbiased and vendor-independent.
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t x = engine_();
    while (x >= limit)
      x = engine_();
    return x % n;
  }

private:
  std::mt19937_64 engine_;
};

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept
{
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Independent sub-seed number `stream` of a run seed.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) noexcept
{
  return mix64(seed + mix64(stream));
}

} // namespace dfpair

#endif
