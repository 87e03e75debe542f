#pragma once

#include <vector>

#include "feprob/multi_index.hpp"
#include "feprob/simplex.hpp"

namespace feprob {

/// Quadrature rule on the reference n-simplex in barycentric coordinates.
/// Weights are normalized to the reference measure (they sum to 1), so
/// integrals scale as mes(K) * sum_i w_i f(node_i).
struct QuadratureRule {
  int dimension = 0;
  int exact_degree = 0;
  std::vector<BarycentricPoint> nodes;
  std::vector<double> weights;
};

/// Rule exact for all polynomials of total degree <= degree.
/// Gauss-Legendre for n = 1 and its collapsed conical product for n = 2, 3,
/// so all weights are positive. Every rule is validated against the
/// closed-form monomial integrals at construction.
QuadratureRule quadrature_rule(int n, int degree);

/// Exact value of (1/mes) * int_K prod_j lambda_j^{alpha_j} dx
/// = n! * prod_j alpha_j! / (n + |alpha|)!  (Dirichlet integral).
double monomial_integral_normalized(const std::vector<int>& alpha, int n);

/// int_K f dx by the rule; f is any callable on BarycentricPoint.
template <typename F>
double integrate(const QuadratureRule& rule, const SimplexGeometry& simplex, F&& f) {
  double sum = 0.0, compensation = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double term = rule.weights[i] * f(rule.nodes[i]) - compensation;
    const double next = sum + term;
    compensation = (next - sum) - term;
    sum = next;
  }
  return simplex.measure * sum;
}

} // namespace feprob
