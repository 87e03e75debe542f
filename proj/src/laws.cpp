#include "feprob/laws.hpp"

#include <cmath>

#include "feprob/errors.hpp"
#include "feprob/rng.hpp"

namespace feprob {

namespace {

void check_supports(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0))
    throw DomainError("uniform supports must be positive");
}

void check_mesh(double h, double h_star) {
  if (!(h > 0.0)) throw DomainError("mesh size h must be positive");
  if (!(h_star > 0.0)) throw DomainError("h* must be positive");
}

} // namespace

LawParameters LawParameters::make(int k, int m, double c_k, double c_m) {
  if (k < 1) throw DomainError("k must be >= 1");
  if (m <= k) throw DomainError("m must exceed k");
  LawParameters params;
  params.k = k;
  params.m = m;
  params.c_k = c_k;
  params.c_m = c_m;
  params.h_star = feprob::h_star(c_k, c_m, k, m); // validates positivity
  return params;
}

MeshSize MeshSize::finite(double h) {
  if (!(h > 0.0) || std::isinf(h))
    throw DomainError("finite mesh size must be positive and finite");
  MeshSize size;
  size.value_ = h;
  return size;
}

MeshSize MeshSize::infinity() {
  MeshSize size;
  size.infinite_ = true;
  return size;
}

double MeshSize::value() const {
  if (infinite_) throw UsageError("infinite mesh size has no numeric value");
  return value_;
}

double step_law(double h, double h_star) {
  check_mesh(h, h_star);
  if (h < h_star) return 1.0;
  if (h > h_star) return 0.0;
  return 0.5;
}

double sigmoid_law(double h, double h_star, int q) {
  check_mesh(h, h_star);
  if (q < 1) throw DomainError("q = m - k must be >= 1");
  const double ratio = h / h_star;
  if (ratio <= 1.0) return 1.0 - 0.5 * std::pow(ratio, q);
  return 0.5 * std::pow(1.0 / ratio, q);
}

double analytic_uniform_prob(double a, double b) {
  check_supports(a, b);
  if (b <= a) return 1.0 - b / (2.0 * a);
  return a / (2.0 * b);
}

MonteCarloResult monte_carlo_prob(double a, double b, std::uint64_t samples,
                                  std::uint64_t seed) {
  check_supports(a, b);
  if (samples < 100) throw UsageError("Monte Carlo needs samples >= 100");
  const CounterRng rng(seed);
  std::uint64_t hits = 0;
  for (std::uint64_t i = 0; i < samples; ++i) {
    const double x = a * rng.uniform(2 * i);
    const double y = b * rng.uniform(2 * i + 1);
    if (y <= x) ++hits;
  }
  MonteCarloResult result;
  result.estimate = static_cast<double>(hits) / static_cast<double>(samples);
  result.standard_error = std::sqrt(result.estimate * (1.0 - result.estimate) /
                                    static_cast<double>(samples));
  result.samples = samples;
  result.seed = seed;
  result.chunks = 1;
  return result;
}

double law_sequence_eval(int k, int q, double h, const EllipticityData& e,
                         const DomainData& d, const SeminormProvider& s) {
  if (!(h > 0.0)) throw DomainError("mesh size h must be positive");
  // log domain end to end: h*_q itself may exceed double range for large q
  const double log_ratio = std::log(h) - log_h_star_q(k, q, e, d, s);
  if (log_ratio <= 0.0) return 1.0 - 0.5 * std::exp(q * log_ratio);
  return 0.5 * std::exp(-q * log_ratio);
}

double pointwise_limit(const MeshSize& h) {
  return h.is_infinite() ? 0.5 : 1.0; // finite sizes are positive by type
}

} // namespace feprob
