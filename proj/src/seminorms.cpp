#include "feprob/seminorms.hpp"

#include <cmath>

#include "feprob/errors.hpp"

namespace feprob {

namespace {

double squared_cartesian_gradient(const PkBasis& basis, std::uint64_t i,
                                  const SimplexGeometry& simplex,
                                  const BarycentricPoint& point) {
  const std::vector<double> partials = basis.gradient(i, point);
  const int n = simplex.dimension;
  double norm2 = 0.0;
  for (int d = 0; d < n; ++d) {
    double component = 0.0;
    for (int l = 0; l <= n; ++l)
      component += partials[static_cast<std::size_t>(l)] *
                   simplex.bary_gradients[static_cast<std::size_t>(l)]
                                         [static_cast<std::size_t>(d)];
    norm2 += component * component;
  }
  return norm2;
}

void check_match(const PkBasis& basis, const SimplexGeometry& simplex,
                 const QuadratureRule& rule) {
  if (basis.n() != simplex.dimension || simplex.dimension != rule.dimension)
    throw UsageError("basis, simplex and rule dimensions disagree");
}

} // namespace

double seminorm_l2(const PkBasis& basis, std::uint64_t i,
                   const SimplexGeometry& simplex, const QuadratureRule& rule) {
  check_match(basis, simplex, rule);
  const double value = integrate(rule, simplex, [&](const BarycentricPoint& p) {
    const double v = basis.eval(i, p);
    return v * v;
  });
  return std::sqrt(std::max(value, 0.0));
}

double seminorm_h1(const PkBasis& basis, std::uint64_t i,
                   const SimplexGeometry& simplex, const QuadratureRule& rule) {
  check_match(basis, simplex, rule);
  const double value = integrate(rule, simplex, [&](const BarycentricPoint& p) {
    return squared_cartesian_gradient(basis, i, simplex, p);
  });
  return std::sqrt(std::max(value, 0.0));
}

double seminorm_l2(const PkBasis& basis, std::uint64_t i,
                   const SimplexGeometry& simplex) {
  return seminorm_l2(basis, i, simplex,
                     quadrature_rule(simplex.dimension, 2 * basis.k() + 2));
}

double seminorm_h1(const PkBasis& basis, std::uint64_t i,
                   const SimplexGeometry& simplex) {
  return seminorm_h1(basis, i, simplex,
                     quadrature_rule(simplex.dimension, 2 * basis.k() + 2));
}

double seminorm_l2(const MultiIndex& index, const SimplexGeometry& simplex) {
  if (index.dimension() != simplex.dimension)
    throw UsageError("multi-index and simplex dimensions disagree");
  const QuadratureRule rule =
      quadrature_rule(simplex.dimension, 2 * index.order() + 2);
  const double value = integrate(rule, simplex, [&](const BarycentricPoint& p) {
    const double v = basis_eval(index, p);
    return v * v;
  });
  return std::sqrt(std::max(value, 0.0));
}

double seminorm_h1(const MultiIndex& index, const SimplexGeometry& simplex) {
  if (index.dimension() != simplex.dimension)
    throw UsageError("multi-index and simplex dimensions disagree");
  const QuadratureRule rule =
      quadrature_rule(simplex.dimension, 2 * index.order() + 2);
  const int n = simplex.dimension;
  const double value = integrate(rule, simplex, [&](const BarycentricPoint& p) {
    const std::vector<double> partials = basis_gradient_barycentric(index, p);
    double norm2 = 0.0;
    for (int dcomp = 0; dcomp < n; ++dcomp) {
      double component = 0.0;
      for (int l = 0; l <= n; ++l)
        component += partials[static_cast<std::size_t>(l)] *
                     simplex.bary_gradients[static_cast<std::size_t>(l)]
                                           [static_cast<std::size_t>(dcomp)];
      norm2 += component * component;
    }
    return norm2;
  });
  return std::sqrt(std::max(value, 0.0));
}

SeminormSumsReport seminorm_sums(int n, int k, const SimplexGeometry& simplex) {
  if (n != simplex.dimension)
    throw UsageError("requested dimension does not match the simplex");
  const PkBasis basis(n, k);
  const QuadratureRule rule = quadrature_rule(n, 2 * k + 2);

  SeminormSumsReport report;
  report.dimension = n;
  report.degree = k;
  report.hypothesis_ok = 2 * k > n;

  for (std::uint64_t i = 0; i < basis.size(); ++i) {
    report.sum_l2 += seminorm_l2(basis, i, simplex, rule);
    report.sum_h1 += seminorm_h1(basis, i, simplex, rule);
  }

  const double root_measure = std::sqrt(simplex.measure);
  const double lattice_factor = std::pow(static_cast<double>(k + n), n);
  report.bound_l2 = root_measure * lattice_factor * std::pow(k, n + 1);
  report.bound_h1 = root_measure * n * (n + 1.0) *
                    (simplex.lambda_max / simplex.inscribed_diameter) *
                    lattice_factor * std::pow(k, n + 2);
  report.l2_ok = report.sum_l2 <= report.bound_l2 * (1.0 + 1e-12);
  report.h1_ok = report.sum_h1 <= report.bound_h1 * (1.0 + 1e-12);
  return report;
}

} // namespace feprob
