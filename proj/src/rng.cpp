#include <pbf/rng.hpp>

namespace pbf {

std::uint64_t Rng::splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Rng::Rng(std::uint64_t seed) : seed_(seed) {
  std::uint64_t state = seed;
  std::seed_seq seq{static_cast<std::uint32_t>(state = splitmix64(state)),
                    static_cast<std::uint32_t>(state >> 32),
                    static_cast<std::uint32_t>(state = splitmix64(state)),
                    static_cast<std::uint32_t>(state >> 32)};
  engine_.seed(seq);
}

Rng Rng::split(std::uint64_t stream) const {
  return Rng(splitmix64(seed_ ^ splitmix64(stream + 1)));
}

double Rng::beta(double a, double b) {
  std::gamma_distribution<double> ga(a, 1.0);
  std::gamma_distribution<double> gb(b, 1.0);
  const double x = ga(engine_);
  const double y = gb(engine_);
  return x / (x + y);
}

}  // namespace pbf
