#pragma once

#include <cstdint>
#include <vector>

namespace feprob {

/// Multi-index (i_1, ..., i_{n+1}) with non-negative entries summing to the
/// basis order k. Identifies one lattice node / one canonical basis function.
class MultiIndex {
public:
  MultiIndex(std::vector<int> entries, int order);

  int order() const { return order_; }             // k
  int dimension() const;                           // n
  const std::vector<int>& entries() const { return entries_; }
  int operator[](std::size_t j) const { return entries_[j]; }
  std::size_t size() const { return entries_.size(); }

  bool operator==(const MultiIndex& other) const {
    return order_ == other.order_ && entries_ == other.entries_;
  }

private:
  std::vector<int> entries_;
  int order_;
};

/// Barycentric coordinates (lambda_1, ..., lambda_{n+1}).
///
/// Evaluation routines treat the basis as polynomials on R^{n+1}, so a point
/// is not forced onto the lambda-sum-1 plane; `checked` enforces the
/// sum-to-one invariant at API boundaries and `inside` reports membership in
/// the closed simplex.
struct BarycentricPoint {
  std::vector<double> lambdas;

  BarycentricPoint() = default;
  explicit BarycentricPoint(std::vector<double> l) : lambdas(std::move(l)) {}

  /// Validates sum(lambda) = 1 within 1e-12; throws DomainError otherwise.
  static BarycentricPoint checked(std::vector<double> lambdas);

  int dimension() const { return static_cast<int>(lambdas.size()) - 1; }
  double operator[](std::size_t j) const { return lambdas[j]; }
  bool inside() const; // all lambda_j in [0, 1]
};

/// One node of the principal lattice: index (i_1,...,i_{n+1}) at coordinates
/// lambda_j = i_j / k (exact integer ratios).
struct LatticeNode {
  MultiIndex index;
  BarycentricPoint point;
};

/// Dimension N = binomial(n+k, n) of P_k on an n-simplex. Throws DomainError
/// if the count overflows (rejects rather than wraps).
std::uint64_t pk_dimension(int n, int k);

/// All lattice nodes in lexicographic descending order on (i_1,...,i_{n+1}).
/// This order defines the library-wide single-index numbering.
std::vector<LatticeNode> lattice_points(int n, int k);

/// All multi-indices with the given entry count and sum, lexicographic
/// descending. Also used to enumerate quadrature point patterns.
std::vector<std::vector<int>> multi_indices(int entry_count, int sum);

} // namespace feprob
