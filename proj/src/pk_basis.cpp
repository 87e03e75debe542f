#include "feprob/pk_basis.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "feprob/errors.hpp"
#include "feprob/rng.hpp"

namespace feprob {

namespace {

void check_aux_args(int i, int k) {
  if (k < 1) throw DomainError("basis order k must be >= 1");
  if (i < 0 || i > k)
    throw DomainError("entry order " + std::to_string(i) + " outside [0, k] with k=" +
                      std::to_string(k));
}

void check_dims(const MultiIndex& index, const BarycentricPoint& point) {
  if (index.size() != point.lambdas.size())
    throw UsageError("multi-index has " + std::to_string(index.size()) +
                     " entries but point has " + std::to_string(point.lambdas.size()) +
                     " coordinates");
}

} // namespace

double aux_poly_eval(int i, int k, double lambda) {
  check_aux_args(i, k);
  double product = 1.0;
  for (int c = 1; c <= i; ++c)
    product *= (k * lambda - (c - 1)) / c; // c - 1 first keeps c = 1 exact
  return product;
}

double aux_poly_derivative(int i, int k, double lambda) {
  check_aux_args(i, k);
  if (i == 0) return 0.0;
  // product-rule sum over the differentiated factor:
  // d/dlambda prod_c (k l - c + 1) = sum_t k prod_{c != t} (k l - c + 1)
  double factorial = 1.0;
  for (int c = 2; c <= i; ++c) factorial *= c;
  double sum = 0.0;
  for (int t = 1; t <= i; ++t) {
    double term = static_cast<double>(k);
    for (int c = 1; c <= i; ++c) {
      if (c == t) continue;
      term *= k * lambda - (c - 1);
    }
    sum += term;
  }
  return sum / factorial;
}

long long aux_poly_eval_lattice(int i, int k, int a) {
  check_aux_args(i, k);
  if (a < 0 || a > k)
    throw DomainError("lattice numerator " + std::to_string(a) + " outside [0, k]");
  if (i == 0) return 1;
  if (a < i) return 0; // a factor (a - c + 1) vanishes at c = a + 1
  long long value = 1;
  for (int c = 1; c <= i; ++c)
    value = value * (a - c + 1) / c; // exact: running value is C(a, c)
  return value;
}

double basis_eval(const MultiIndex& index, const BarycentricPoint& point) {
  check_dims(index, point);
  double product = 1.0;
  for (std::size_t j = 0; j < index.size(); ++j)
    product *= aux_poly_eval(index[j], index.order(), point[j]);
  return product;
}

long long basis_eval_lattice(const MultiIndex& index, const MultiIndex& node_index) {
  if (index.size() != node_index.size() || index.order() != node_index.order())
    throw UsageError("basis index and node index must share (n, k)");
  long long product = 1;
  for (std::size_t j = 0; j < index.size(); ++j) {
    product *= aux_poly_eval_lattice(index[j], index.order(), node_index[j]);
    if (product == 0) return 0;
  }
  return product;
}

std::vector<double> basis_gradient_barycentric(const MultiIndex& index,
                                               const BarycentricPoint& point) {
  check_dims(index, point);
  const std::size_t count = index.size();
  std::vector<double> values(count);
  for (std::size_t j = 0; j < count; ++j)
    values[j] = aux_poly_eval(index[j], index.order(), point[j]);
  std::vector<double> gradient(count);
  for (std::size_t l = 0; l < count; ++l) {
    double term = aux_poly_derivative(index[l], index.order(), point[l]);
    for (std::size_t j = 0; j < count; ++j) {
      if (j == l) continue;
      term *= values[j];
    }
    gradient[l] = term;
  }
  return gradient;
}

double lagrange_numerator_product(int np, double a, double b, double x) {
  if (np < 1) throw DomainError("node count exponent Np must be >= 1");
  if (!(a < b)) throw DomainError("interval requires a < b");
  if (x < a || x > b)
    throw DomainError("x outside [a, b]; the product bound is only claimed there");
  const double spacing = (b - a) / np;
  double product = 1.0;
  for (int j = 0; j <= np; ++j)
    product *= x - (a + j * spacing);
  return product;
}

PkBasis::PkBasis(int n, int k) : n_(n), k_(k), nodes_(lattice_points(n, k)) {}

double PkBasis::eval(std::size_t i, const BarycentricPoint& point) const {
  return basis_eval(nodes_[i].index, point);
}

std::vector<double> PkBasis::eval_all(const BarycentricPoint& point) const {
  std::vector<double> values(nodes_.size());
  for (std::size_t i = 0; i < nodes_.size(); ++i)
    values[i] = basis_eval(nodes_[i].index, point);
  return values;
}

std::vector<double> PkBasis::gradient(std::size_t i, const BarycentricPoint& point) const {
  return basis_gradient_barycentric(nodes_[i].index, point);
}

double PkBasis::interpolate(std::span<const double> values,
                            const BarycentricPoint& point) const {
  if (values.size() != nodes_.size())
    throw UsageError("interpolate expects " + std::to_string(nodes_.size()) +
                     " nodal values, got " + std::to_string(values.size()));
  double sum = 0.0;
  for (std::size_t i = 0; i < nodes_.size(); ++i)
    sum += values[i] * basis_eval(nodes_[i].index, point);
  return sum;
}

LocalBoundsReport verify_local_bounds(int n, int k, std::uint64_t samples,
                                      std::uint64_t seed) {
  if (samples < 1) throw DomainError("verify_local_bounds needs samples >= 1");
  const PkBasis basis(n, k);

  LocalBoundsReport report;
  report.n = n;
  report.k = k;
  report.samples = samples;
  report.seed = seed;
  report.value_bound = std::pow(static_cast<double>(k), n + 1);
  report.partial_bound = std::pow(static_cast<double>(k), n + 2);

  auto scan = [&](const BarycentricPoint& point) {
    for (std::size_t i = 0; i < basis.size(); ++i) {
      report.max_abs_value =
          std::max(report.max_abs_value, std::abs(basis.eval(i, point)));
      for (double partial : basis.gradient(i, point))
        report.max_abs_partial = std::max(report.max_abs_partial, std::abs(partial));
    }
  };

  // The lattice nodes are always scanned; the Kronecker property makes the
  // empirical max |p_i| reach 1 there.
  for (const auto& node : basis.nodes()) scan(node.point);

  const CounterRng rng(seed);
  const auto stride = static_cast<std::uint64_t>(n) + 1;
  for (std::uint64_t s = 0; s < samples; ++s)
    scan(BarycentricPoint(dirichlet_point(rng, n, s * stride)));

  report.value_ok = report.max_abs_value <= report.value_bound;
  report.partial_ok = report.max_abs_partial <= report.partial_bound;
  return report;
}

} // namespace feprob
