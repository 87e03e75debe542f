#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "feprob/multi_index.hpp"

namespace feprob {

/// Auxiliary polynomial P_i(lambda) = prod_{c=1..i} (k*lambda - c + 1)/c,
/// with P_0 = 1.
double aux_poly_eval(int i, int k, double lambda);

/// d/dlambda of aux_poly_eval, expanded by the product rule (O(i^2)).
double aux_poly_derivative(int i, int k, double lambda);

/// Exact value of P_i at the lattice rational lambda = a/k. Equals the
/// binomial coefficient C(a, i); in particular 0 whenever 0 <= a < i.
long long aux_poly_eval_lattice(int i, int k, int a);

/// Canonical basis function p_index(point) = prod_j P_{i_j}(lambda_j).
double basis_eval(const MultiIndex& index, const BarycentricPoint& point);

/// Exact integer value of p_index at the lattice node of `node_index`;
/// the Kronecker property p_i(M_j) = delta_ij holds exactly here.
long long basis_eval_lattice(const MultiIndex& index, const MultiIndex& node_index);

/// Vector of the n+1 partials dp_index/dlambda_l at the point.
std::vector<double> basis_gradient_barycentric(const MultiIndex& index,
                                               const BarycentricPoint& point);

/// Equispaced Lagrange numerator Pi(x) = prod_{j=0..np} (x - a - j*(b-a)/np).
/// x must lie in [a, b]; the bound |Pi| <= (np+1)! * ((b-a)/np)^{np+1} is
/// only claimed there.
double lagrange_numerator_product(int np, double a, double b, double x);

/// The full P_k basis on the reference n-simplex with its lattice numbering.
class PkBasis {
public:
  PkBasis(int n, int k);

  int n() const { return n_; }
  int k() const { return k_; }
  std::size_t size() const { return nodes_.size(); } // N
  const std::vector<LatticeNode>& nodes() const { return nodes_; }

  double eval(std::size_t i, const BarycentricPoint& point) const;
  std::vector<double> eval_all(const BarycentricPoint& point) const;
  std::vector<double> gradient(std::size_t i, const BarycentricPoint& point) const;

  /// Q(point) = sum_i values[i] * p_i(point); values in lattice order.
  double interpolate(std::span<const double> values,
                     const BarycentricPoint& point) const;

private:
  int n_;
  int k_;
  std::vector<LatticeNode> nodes_;
};

struct LocalBoundsReport {
  int n = 0;
  int k = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  double max_abs_value = 0.0;
  double max_abs_partial = 0.0;
  double value_bound = 0.0;   // k^{n+1}
  double partial_bound = 0.0; // k^{n+2}
  bool value_ok = false;
  bool partial_ok = false;

  bool pass() const { return value_ok && partial_ok; }
};

/// Empirical check of the pointwise bounds |p_i| <= k^{n+1} and
/// |dp_i/dlambda_l| <= k^{n+2} over `samples` seeded Dirichlet points plus
/// the lattice nodes themselves. Violations are reported, not thrown.
LocalBoundsReport verify_local_bounds(int n, int k, std::uint64_t samples,
                                      std::uint64_t seed);

} // namespace feprob
