#pragma once

#include <cstdint>

#include "feprob/accuracy.hpp"

namespace feprob {

/// The pair of error constants C_k = C*_k |u|_{k+1} and C_m = C*_m |u|_{m+1}
/// together with the critical mesh size they induce.
struct LawParameters {
  int k = 1;
  int m = 2;
  double c_k = 1.0;
  double c_m = 1.0;
  double h_star = 1.0;

  int q() const { return m - k; }

  /// Validates m > k >= 1 and positive constants, derives h_star.
  static LawParameters make(int k, int m, double c_k, double c_m);
};

struct MonteCarloResult {
  double estimate = 0.0;
  double standard_error = 0.0; // sqrt(estimate (1 - estimate) / samples)
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::uint64_t chunks = 1; // chunk plan, part of the reproducibility contract
};

/// Mesh size extended with a distinguished infinity, the domain of the
/// pointwise limit law.
struct MeshSize {
  static MeshSize finite(double h);
  static MeshSize infinity();

  bool is_infinite() const { return infinite_; }
  double value() const; // finite sizes only

private:
  double value_ = 0.0;
  bool infinite_ = false;
};

/// Two-step accuracy law: 1 below h*, 0 above, 1/2 at h = h* (the sigmoid's
/// exact value there; the crossing point itself carries no verdict).
double step_law(double h, double h_star);

/// Sigmoid law for q = m - k:
///   1 - (1/2) (h/h*)^q   for h <= h*
///   (1/2) (h*/h)^q       for h >= h*
double sigmoid_law(double h, double h_star, int q);

/// Prob{Y <= X} for independent X ~ U[0,a], Y ~ U[0,b]:
/// 1 - b/(2a) if b <= a, else a/(2b).
double analytic_uniform_prob(double a, double b);

/// Seeded estimate of analytic_uniform_prob from `samples` independent pairs.
/// Pair i consumes counters (2i, 2i+1), so the result is bit-identical under
/// any chunking of the sample range. Requires samples >= 100.
MonteCarloResult monte_carlo_prob(double a, double b, std::uint64_t samples,
                                  std::uint64_t seed);

/// P_q(h) = sigmoid_law(h, h*_q, q) with h*_q from the accuracy constants,
/// evaluated in log domain so q up to 10^4 is safe.
double law_sequence_eval(int k, int q, double h, const EllipticityData& e,
                         const DomainData& d, const SeminormProvider& s);

/// Pointwise limit of P_q as q -> infinity: 1 on finite h, 1/2 at infinity.
double pointwise_limit(const MeshSize& h);

} // namespace feprob
