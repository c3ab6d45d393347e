#include "grasp/rng.hpp"

#include <cmath>

namespace grasp
{

double Rng::normal()
{
  while (true) {
    const double u = 2.0 * uniform() - 1.0;
    const double v = 2.0 * uniform() - 1.0;
    const double s = u * u + v * v;
    if (s > 0.0 && s < 1.0) {
      return u * std::sqrt(-2.0 * std::log(s) / s);
    }
  }
}

void Rng::unit_vector(double out[3])
{
  while (true) {
    const double x = 2.0 * uniform() - 1.0;
    const double y = 2.0 * uniform() - 1.0;
    const double z = 2.0 * uniform() - 1.0;
    const double n2 = x * x + y * y + z * z;
    if (n2 > 1e-12 && n2 <= 1.0) {
      const double inv = 1.0 / std::sqrt(n2);
      out[0] = x * inv;
      out[1] = y * inv;
      out[2] = z * inv;
      return;
    }
  }
}

std::uint64_t Rng::derive(std::uint64_t seed, std::initializer_list<std::uint64_t> parts)
{
  std::uint64_t h = seed ^ 0x9e3779b97f4a7c15ULL;
  for (std::uint64_t p : parts) {
    h ^= p + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    Rng mix(h);
    h = mix.next();
  }
  return h;
}

std::uint64_t fnv1a64(const void* data, std::size_t size, std::uint64_t basis)
{
  const auto* bytes = static_cast<const unsigned char*>(data);
  std::uint64_t h = basis;
  for (std::size_t i = 0; i < size; ++i) {
    h ^= bytes[i];
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace grasp
