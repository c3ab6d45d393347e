#ifndef GRASP_RNG_HPP_
#define GRASP_RNG_HPP_

#include <cstdint>
#include <initializer_list>

namespace grasp
{

/// Deterministic 64-bit generator (splitmix64 core). All randomness in the
/// project flows through this type so results are reproducible bit-for-bit
/// from a single seed, independent of the standard library's distributions.
class Rng
{
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next()
  {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform integer in [0, n).
  std::uint64_t uniform_int(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

  /// Standard normal via polar Box-Muller (spare value discarded for
  /// stream determinism).
  double normal();

  /// Unit vector uniform on the sphere.
  void unit_vector(double out[3]);

  /// Derives an independent stream from a base seed and index parts.
  static std::uint64_t derive(std::uint64_t seed, std::initializer_list<std::uint64_t> parts);

private:
  std::uint64_t state_;
};

/// FNV-1a 64-bit hash over a byte range.
std::uint64_t fnv1a64(const void* data, std::size_t size, std::uint64_t basis = 0xcbf29ce484222325ULL);

}  // namespace grasp

#endif  // GRASP_RNG_HPP_
