#include "feprob/accuracy.hpp"

#include <cmath>
#include <numbers>

#include "feprob/errors.hpp"

namespace feprob {

namespace {

void check_order(int r) {
  if (r < 0)
    throw DomainError("semi-norm order must be >= 0, got " + std::to_string(r));
}

} // namespace

void validate(const EllipticityData& e) {
  if (!(e.ellipticity > 0.0) || !(e.continuity >= e.ellipticity))
    throw DomainError("ellipticity data requires M >= alpha > 0");
}

void validate(const DomainData& d) {
  if (!(d.diameter > 0.0)) throw DomainError("domain diameter must be positive");
  if (!(d.shape_ratio >= 1.0))
    throw DomainError("shape ratio sigma must be >= 1");
  if (!(d.lambda_max > 0.0)) throw DomainError("Lambda must be positive");
  if (d.dimension < 1) throw DomainError("dimension must be >= 1");
}

double SeminormProvider::seminorm(int r) const {
  return std::exp(log_seminorm(r));
}

double ModelSeminormProvider::log_seminorm(int r) const {
  check_order(r);
  return 0.5 * (r - 2) * std::numbers::ln2 + r * std::log(std::numbers::pi);
}

double ModelSeminormProvider::ratio_limit() const {
  return std::numbers::sqrt2 * std::numbers::pi;
}

GeometricSeminormProvider::GeometricSeminormProvider(double c, double rho)
    : c_(c), rho_(rho) {
  if (!(c > 0.0) || !(rho > 0.0))
    throw DomainError("geometric provider requires c > 0 and rho > 0");
}

double GeometricSeminormProvider::log_seminorm(int r) const {
  check_order(r);
  return std::log(c_) + r * std::log(rho_);
}

TableSeminormProvider::TableSeminormProvider(std::vector<double> values)
    : values_(std::move(values)) {
  if (values_.size() < 2)
    throw DomainError("table provider needs at least two semi-norm values");
  for (double v : values_)
    if (!(v > 0.0) || !std::isfinite(v))
      throw DomainError("table semi-norms must be finite and positive");
}

double TableSeminormProvider::log_seminorm(int r) const {
  check_order(r);
  if (static_cast<std::size_t>(r) >= values_.size())
    throw DomainError("semi-norm order " + std::to_string(r) +
                      " is beyond the table (largest available " +
                      std::to_string(values_.size() - 1) + ")");
  return std::log(values_[static_cast<std::size_t>(r)]);
}

double TableSeminormProvider::ratio_limit() const {
  return values_[values_.size() - 1] / values_[values_.size() - 2];
}

double domain_constant(const DomainData& d) {
  validate(d);
  const double n = d.dimension;
  return 1.0 + 2.0 * d.diameter + d.shape_ratio * n * (n + 1.0) * d.lambda_max;
}

double ck_star(int k, const EllipticityData& e, const DomainData& d) {
  validate(e);
  const int n = d.dimension;
  require_hypothesis(k, n);
  const double front =
      e.continuity * domain_constant(d) / e.ellipticity;
  return front * std::pow(static_cast<double>(k + n), n) * std::pow(k, n + 2) /
         (std::tgamma(static_cast<double>(k)) * (k - 0.5 * n));
}

double log_ck_star(int k, const EllipticityData& e, const DomainData& d) {
  validate(e);
  const int n = d.dimension;
  require_hypothesis(k, n);
  return std::log(e.continuity * domain_constant(d) / e.ellipticity) +
         n * std::log(static_cast<double>(k + n)) +
         (n + 2) * std::log(static_cast<double>(k)) -
         std::lgamma(static_cast<double>(k)) - std::log(k - 0.5 * n);
}

double interpolation_bound_l2(int k, int n, double h, double seminorm_u) {
  require_hypothesis(k, n);
  if (!(h >= 0.0)) throw DomainError("mesh size must be >= 0");
  if (!(seminorm_u >= 0.0)) throw DomainError("semi-norm must be >= 0");
  const double bracket =
      (1.0 + std::pow(static_cast<double>(k + n), n) * std::pow(k, n + 1)) /
      (std::tgamma(k + 1.0) * (k + 1.0 - 0.5 * n));
  return bracket * seminorm_u * std::pow(h, k + 1);
}

double interpolation_bound_h1(int k, int n, double h, double sigma,
                              double lambda, double seminorm_u) {
  require_hypothesis(k, n);
  if (!(h >= 0.0)) throw DomainError("mesh size must be >= 0");
  if (!(sigma >= 1.0)) throw DomainError("shape ratio sigma must be >= 1");
  if (!(lambda > 0.0)) throw DomainError("Lambda must be positive");
  if (!(seminorm_u >= 0.0)) throw DomainError("semi-norm must be >= 0");
  const double bracket =
      (1.0 + sigma * n * (n + 1.0) * lambda *
                 std::pow(static_cast<double>(k + n), n) * std::pow(k, n + 2)) /
      (std::tgamma(static_cast<double>(k)) * (k - 0.5 * n));
  return bracket * seminorm_u * std::pow(h, k);
}

double h_star(double c_k, double c_m, int k, int m) {
  if (m <= k) throw DomainError("h_star requires m > k");
  if (!(c_k > 0.0) || !(c_m > 0.0))
    throw DomainError("h_star requires positive constants");
  return std::pow(c_k / c_m, 1.0 / (m - k));
}

double log_h_star_q(int k, int q, const EllipticityData& e, const DomainData& d,
                    const SeminormProvider& s) {
  if (q < 1) throw DomainError("q must be >= 1");
  return (log_ck_star(k, e, d) + s.log_seminorm(k + 1) -
          log_ck_star(k + q, e, d) - s.log_seminorm(k + q + 1)) /
         q;
}

double h_star_q(int k, int q, const EllipticityData& e, const DomainData& d,
                const SeminormProvider& s) {
  return std::exp(log_h_star_q(k, q, e, d, s));
}

double log_theta(int k, int n) {
  require_hypothesis(k, n);
  return 0.5 * std::log(2.0 * std::numbers::pi) +
         n * std::log(static_cast<double>(k + n)) +
         (n + 2) * std::log(static_cast<double>(k)) -
         std::lgamma(static_cast<double>(k)) - std::log(k - 0.5 * n);
}

double stirling_factor(int k, int n, int q) {
  if (q < 1) throw DomainError("q must be >= 1");
  const double z = static_cast<double>(q) + k;
  return log_theta(k, n) - z + (z - 2.0 * n - 1.5) * std::log(z);
}

double h_star_q_asymptote(int q, double ratio_limit) {
  if (q < 1) throw DomainError("q must be >= 1");
  if (!(ratio_limit > 0.0)) throw DomainError("ratio limit must be positive");
  return q / (std::numbers::e * ratio_limit);
}

double log_model_seminorm(int r) {
  check_order(r);
  return 0.5 * (r - 2) * std::numbers::ln2 + r * std::log(std::numbers::pi);
}

double model_seminorm(int r) { return std::exp(log_model_seminorm(r)); }

std::vector<double> seminorm_ratio_sequence(const SeminormProvider& s, int k,
                                            int q_max) {
  if (q_max < 1) throw DomainError("q_max must be >= 1");
  std::vector<double> ratios;
  ratios.reserve(static_cast<std::size_t>(q_max) + 1);
  for (int q = 0; q <= q_max; ++q)
    ratios.push_back(
        std::exp(s.log_seminorm(k + q + 2) - s.log_seminorm(k + q + 1)));
  return ratios;
}

AsymptoticModel build_asymptotic_model(int k, const std::vector<int>& q_values,
                                       const EllipticityData& e,
                                       const DomainData& d,
                                       const SeminormProvider& s) {
  AsymptoticModel model;
  model.k = k;
  model.ratio_limit = s.ratio_limit();
  model.q_values = q_values;
  model.log_hstar_q.reserve(q_values.size());
  model.asymptote.reserve(q_values.size());
  for (int q : q_values) {
    model.log_hstar_q.push_back(log_h_star_q(k, q, e, d, s));
    model.asymptote.push_back(h_star_q_asymptote(q, model.ratio_limit));
  }
  return model;
}

} // namespace feprob
