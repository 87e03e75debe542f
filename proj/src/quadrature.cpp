#include "feprob/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "feprob/errors.hpp"

namespace feprob {

namespace {

/// Gauss-Legendre nodes/weights on [0, 1] by Newton iteration on P_m.
void gauss_legendre_unit(int points, std::vector<double>& nodes,
                         std::vector<double>& weights) {
  nodes.resize(static_cast<std::size_t>(points));
  weights.resize(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    // initial guess on [-1, 1]
    double t = std::cos(std::numbers::pi * (i + 0.75) / (points + 0.5));
    double derivative = 0.0;
    for (int iteration = 0; iteration < 100; ++iteration) {
      // Legendre recurrence: (j+1) P_{j+1} = (2j+1) t P_j - j P_{j-1}
      double p0 = 1.0, p1 = t;
      for (int j = 1; j < points; ++j) {
        const double p2 = ((2 * j + 1) * t * p1 - j * p0) / (j + 1);
        p0 = p1;
        p1 = p2;
      }
      derivative = points * (t * p1 - p0) / (t * t - 1.0);
      const double step = p1 / derivative;
      t -= step;
      if (std::abs(step) < 1e-15) break;
    }
    nodes[static_cast<std::size_t>(i)] = 0.5 * (t + 1.0);
    weights[static_cast<std::size_t>(i)] =
        1.0 / ((1.0 - t * t) * derivative * derivative); // 2/((1-t^2)P'^2) / 2
  }
}

/// Collapsed conical product rule on the n-simplex, exact to total degree
/// `degree` (plain Gauss-Legendre when n = 1). The Duffy map collapses
/// [0, 1]^n onto the simplex,
///   lambda_{j+1} = xi_j prod_{l<j} (1 - xi_l),  lambda_0 = prod_l (1 - xi_l),
/// with Jacobian prod_j (1 - xi_j)^{n-1-j}. Each Jacobian factor is folded
/// into a Gauss-Legendre axis rule whose point count is raised to match, so
/// every weight stays positive and validation never fights cancellation.
/// Weights carry the n! that normalizes them to sum 1.
QuadratureRule conical_product_rule(int n, int degree) {
  QuadratureRule rule;
  rule.dimension = n;

  const auto axes = static_cast<std::size_t>(n);
  std::vector<std::vector<double>> axis_nodes(axes), axis_weights(axes);
  int exact = degree + 3;
  for (std::size_t j = 0; j < axes; ++j) {
    const int jacobian_power = n - 1 - static_cast<int>(j);
    const int points = (degree + jacobian_power) / 2 + 1;
    gauss_legendre_unit(points, axis_nodes[j], axis_weights[j]);
    for (std::size_t i = 0; i < axis_nodes[j].size(); ++i)
      for (int p = 0; p < jacobian_power; ++p)
        axis_weights[j][i] *= 1.0 - axis_nodes[j][i];
    exact = std::min(exact, 2 * points - 1 - jacobian_power);
  }
  rule.exact_degree = exact;

  double factorial = 1.0;
  for (int j = 2; j <= n; ++j) factorial *= j;

  std::vector<std::size_t> index(axes, 0);
  for (;;) {
    std::vector<double> lambdas(axes + 1);
    double weight = factorial;
    double cone = 1.0; // prod of (1 - xi) over the axes already placed
    for (std::size_t j = 0; j < axes; ++j) {
      const double xi = axis_nodes[j][index[j]];
      weight *= axis_weights[j][index[j]];
      lambdas[j + 1] = xi * cone;
      cone *= 1.0 - xi;
    }
    lambdas[0] = cone;
    rule.nodes.push_back(BarycentricPoint(std::move(lambdas)));
    rule.weights.push_back(weight);

    std::size_t axis = axes;
    while (axis > 0 && ++index[axis - 1] == axis_nodes[axis - 1].size()) {
      index[axis - 1] = 0;
      --axis;
    }
    if (axis == 0) break;
  }
  return rule;
}

/// Recursively sweeps every monomial with |alpha| <= remaining + |prefix|,
/// carrying the prefix product weight * prod_{j < coord} lambda_j^alpha_j
/// across all nodes so each exponent step costs one multiply per node.
void validate_monomials(const QuadratureRule& rule, std::size_t coord,
                        int remaining, std::vector<int>& alpha,
                        const std::vector<double>& prefix, int n) {
  const std::size_t points = rule.nodes.size();
  if (coord == static_cast<std::size_t>(n)) {
    std::vector<double> term(prefix);
    for (int e = 0;; ++e) {
      alpha[coord] = e;
      const double exact = monomial_integral_normalized(alpha, n);
      double sum = 0.0, compensation = 0.0;
      for (std::size_t i = 0; i < points; ++i) {
        const double value = term[i] - compensation;
        const double next = sum + value;
        compensation = (next - sum) - value;
        sum = next;
      }
      if (std::abs(sum - exact) > 1e-12 * std::max(1.0, std::abs(exact))) {
        int total = 0;
        for (int a : alpha) total += a;
        throw Error("quadrature rule failed monomial validation at degree " +
                    std::to_string(total));
      }
      if (e == remaining) break;
      for (std::size_t i = 0; i < points; ++i) term[i] *= rule.nodes[i][coord];
    }
    alpha[coord] = 0;
    return;
  }
  std::vector<double> current(prefix);
  for (int e = 0;; ++e) {
    alpha[coord] = e;
    validate_monomials(rule, coord + 1, remaining - e, alpha, current, n);
    if (e == remaining) break;
    for (std::size_t i = 0; i < points; ++i) current[i] *= rule.nodes[i][coord];
  }
  alpha[coord] = 0;
}

void validate_rule(const QuadratureRule& rule, int n) {
  std::vector<int> alpha(static_cast<std::size_t>(n) + 1, 0);
  std::vector<double> prefix(rule.weights);
  validate_monomials(rule, 0, rule.exact_degree, alpha, prefix, n);
}

} // namespace

double monomial_integral_normalized(const std::vector<int>& alpha, int n) {
  // n! prod alpha_j! / (n + |alpha|)!, evaluated as a product of ratios
  int total = 0;
  for (int a : alpha) total += a;
  double log_value = std::lgamma(n + 1.0) - std::lgamma(n + total + 1.0);
  for (int a : alpha) log_value += std::lgamma(a + 1.0);
  return std::exp(log_value);
}

QuadratureRule quadrature_rule(int n, int degree) {
  if (n < 1 || n > 3)
    throw CapabilityError("quadrature supports n in {1, 2, 3}, got n=" +
                          std::to_string(n));
  if (degree < 1 || degree > 40)
    throw CapabilityError("quadrature supports degree in [1, 40], got " +
                          std::to_string(degree));
  QuadratureRule rule = conical_product_rule(n, degree);
  validate_rule(rule, n);
  return rule;
}

} // namespace feprob
