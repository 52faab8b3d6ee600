#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

namespace eqtc {

namespace rng {

/// SplitMix64 finalizer; used to derive independent engine seeds.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Fixed stream ids. Each check in the harness draws from its own stream so
// adding samples to one check never shifts another check's inputs.
namespace stream {
inline constexpr std::uint64_t kDefault = 0;
inline constexpr std::uint64_t kCoverage = 1;
inline constexpr std::uint64_t kEndpoints = 2;
inline constexpr std::uint64_t kEquivariance = 3;
inline constexpr std::uint64_t kTangency = 4;
inline constexpr std::uint64_t kContinuity = 5;
inline constexpr std::uint64_t kDomainInvariance = 6;
inline constexpr std::uint64_t kWitness = 7;
inline constexpr std::uint64_t kFieldCertificate = 8;
inline constexpr std::uint64_t kComplexes = 9;
}  // namespace stream

}  // namespace rng

/// Seeded sampler. The engine is std::mt19937_64, whose output sequence is
/// fixed by the standard; the uniform and normal transforms are written out
/// here because the <random> distributions are implementation-defined.
class SphereSampler {
 public:
  explicit SphereSampler(std::uint64_t seed, std::uint64_t stream = rng::stream::kDefault)
      : engine_(rng::mix64(seed ^ rng::mix64(stream + 0x5EED))) {}

  std::uint64_t bits() { return engine_(); }

  /// Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, bound).
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t r;
    do r = engine_();
    while (r >= limit);
    return r % bound;
  }

  /// Standard normal via Box-Muller; the second variate is cached.
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double u1 = 1.0 - uniform();  // (0, 1]
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double phi = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(phi);
    has_spare_ = true;
    return r * std::cos(phi);
  }

  /// Uniform point on the unit sphere in R^ambient (normalized Gaussian).
  std::vector<double> point(std::size_t ambient) {
    std::vector<double> v(ambient);
    double r2 = 0.0;
    do {
      r2 = 0.0;
      for (double& c : v) {
        c = normal();
        r2 += c * c;
      }
    } while (r2 < 1e-300);
    const double r = std::sqrt(r2);
    for (double& c : v) c /= r;
    return v;
  }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

/// `count` uniform points on S^dim (vectors in R^{dim+1}).
inline std::vector<std::vector<double>> uniform_sphere_sampler(std::uint64_t seed, int dim, std::size_t count) {
  if (dim < 1) throw std::invalid_argument("uniform_sphere_sampler: dim must be >= 1");
  SphereSampler s(seed);
  std::vector<std::vector<double>> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(s.point(static_cast<std::size_t>(dim + 1)));
  return out;
}

}  // namespace eqtc
