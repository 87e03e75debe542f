#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

namespace feprob {

/// SplitMix64 output function.
constexpr std::uint64_t splitmix64_mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

/// Counter-based uniform stream: draw i is a pure function of (seed, i), so
/// any chunking of a sample range reproduces the same values bit for bit.
class CounterRng {
public:
  explicit CounterRng(std::uint64_t seed)
      : key_(splitmix64_mix(seed + 0x9E3779B97F4A7C15ull)) {}

  std::uint64_t bits(std::uint64_t counter) const {
    return splitmix64_mix(key_ + (counter + 1) * 0x9E3779B97F4A7C15ull);
  }

  /// Uniform double in [0, 1) for the given counter.
  double uniform(std::uint64_t counter) const {
    return static_cast<double>(bits(counter) >> 11) * 0x1.0p-53;
  }

private:
  std::uint64_t key_;
};

/// Uniform point on the n-simplex: n+1 exponential variates, normalized
/// (Dirichlet(1,...,1)). Consumes counters [base, base + n + 1).
inline std::vector<double> dirichlet_point(const CounterRng& rng, int n,
                                           std::uint64_t base) {
  std::vector<double> lambdas(static_cast<std::size_t>(n) + 1);
  double sum = 0.0;
  for (int j = 0; j <= n; ++j) {
    const double u = rng.uniform(base + static_cast<std::uint64_t>(j));
    const double e = -std::log1p(-u); // u < 1 strictly
    lambdas[static_cast<std::size_t>(j)] = e;
    sum += e;
  }
  if (sum <= 0.0) { // all draws exactly zero; fall back to the centroid
    for (double& l : lambdas) l = 1.0 / (n + 1);
    return lambdas;
  }
  for (double& l : lambdas) l /= sum;
  return lambdas;
}

} // namespace feprob
