#pragma once

#include <cstdint>

#include "feprob/pk_basis.hpp"
#include "feprob/quadrature.hpp"
#include "feprob/simplex.hpp"

namespace feprob {

/// |p_i|_{0,2,K} = sqrt(int_K p_i^2 dx) with the given rule.
double seminorm_l2(const PkBasis& basis, std::uint64_t i,
                   const SimplexGeometry& simplex, const QuadratureRule& rule);

/// |p_i|_{1,2,K} = sqrt(int_K |grad p_i|^2 dx); the Cartesian gradient is
/// assembled from barycentric partials through the affine map of K.
double seminorm_h1(const PkBasis& basis, std::uint64_t i,
                   const SimplexGeometry& simplex, const QuadratureRule& rule);

/// Same, with a fresh rule of degree 2k + 2 (exact for both integrands).
double seminorm_l2(const PkBasis& basis, std::uint64_t i,
                   const SimplexGeometry& simplex);
double seminorm_h1(const PkBasis& basis, std::uint64_t i,
                   const SimplexGeometry& simplex);

/// Single-function forms addressed by multi-index, no full basis needed.
double seminorm_l2(const MultiIndex& index, const SimplexGeometry& simplex);
double seminorm_h1(const MultiIndex& index, const SimplexGeometry& simplex);

/// Summed shape-function seminorms on K against their closed-form envelopes
///   sum_i |p_i|_{0,2,K} <= sqrt(mes K) (k+n)^n k^{n+1}
///   sum_i |p_i|_{1,2,K} <= sqrt(mes K) n (n+1) (Lambda / rho_K) (k+n)^n k^{n+2}
/// hypothesis_ok records whether k > n/2 holds; the sums and envelopes are
/// reported either way.
struct SeminormSumsReport {
  int dimension = 0;
  int degree = 0;
  double sum_l2 = 0.0;
  double sum_h1 = 0.0;
  double bound_l2 = 0.0;
  double bound_h1 = 0.0;
  bool l2_ok = false;
  bool h1_ok = false;
  bool hypothesis_ok = false;

  bool pass() const { return l2_ok && h1_ok; }
};

SeminormSumsReport seminorm_sums(int n, int k, const SimplexGeometry& simplex);

} // namespace feprob
