#include "feprob/multi_index.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "feprob/errors.hpp"

namespace feprob {

MultiIndex::MultiIndex(std::vector<int> entries, int order)
    : entries_(std::move(entries)), order_(order) {
  if (order_ < 1) throw UsageError("multi-index order k must be >= 1");
  if (entries_.size() < 2) throw UsageError("multi-index needs n+1 >= 2 entries");
  long long sum = 0;
  for (int e : entries_) {
    if (e < 0 || e > order_)
      throw UsageError("multi-index entry " + std::to_string(e) +
                       " outside [0, k] with k=" + std::to_string(order_));
    sum += e;
  }
  if (sum != order_)
    throw UsageError("multi-index entries sum to " + std::to_string(sum) +
                     ", expected k=" + std::to_string(order_));
}

int MultiIndex::dimension() const { return static_cast<int>(entries_.size()) - 1; }

BarycentricPoint BarycentricPoint::checked(std::vector<double> lambdas) {
  if (lambdas.size() < 2)
    throw UsageError("barycentric point needs n+1 >= 2 coordinates");
  double sum = 0.0;
  for (double l : lambdas) sum += l;
  if (std::abs(sum - 1.0) > 1e-12)
    throw DomainError("barycentric coordinates sum to " + std::to_string(sum) +
                      ", expected 1 within 1e-12");
  return BarycentricPoint(std::move(lambdas));
}

bool BarycentricPoint::inside() const {
  for (double l : lambdas)
    if (l < 0.0 || l > 1.0) return false;
  return true;
}

std::uint64_t pk_dimension(int n, int k) {
  if (n < 1) throw DomainError("space dimension n must be >= 1");
  if (k < 1) throw DomainError("polynomial order k must be >= 1");
  // binomial(n+k, n) built incrementally; reject on overflow
  std::uint64_t result = 1;
  for (int j = 1; j <= n; ++j) {
    const std::uint64_t numerator = static_cast<std::uint64_t>(k) + j;
    if (result > std::numeric_limits<std::uint64_t>::max() / numerator)
      throw DomainError("pk_dimension(" + std::to_string(n) + ", " +
                        std::to_string(k) + ") overflows the count type");
    result = result * numerator / j; // exact: C(k+j, j) divisible by j
  }
  return result;
}

std::vector<std::vector<int>> multi_indices(int entry_count, int sum) {
  std::vector<std::vector<int>> result;
  std::vector<int> current(static_cast<std::size_t>(entry_count));
  // lexicographic descending: leading entries take the largest values first
  auto recurse = [&](auto&& self, int position, int remaining) -> void {
    if (position == entry_count - 1) {
      current[static_cast<std::size_t>(position)] = remaining;
      result.push_back(current);
      return;
    }
    for (int value = remaining; value >= 0; --value) {
      current[static_cast<std::size_t>(position)] = value;
      self(self, position + 1, remaining - value);
    }
  };
  recurse(recurse, 0, sum);
  return result;
}

std::vector<LatticeNode> lattice_points(int n, int k) {
  const std::uint64_t count = pk_dimension(n, k);
  std::vector<LatticeNode> nodes;
  nodes.reserve(count);
  for (auto& entries : multi_indices(n + 1, k)) {
    std::vector<double> lambdas(entries.size());
    for (std::size_t j = 0; j < entries.size(); ++j)
      lambdas[j] = static_cast<double>(entries[j]) / k;
    nodes.push_back(LatticeNode{MultiIndex(std::move(entries), k),
                                BarycentricPoint(std::move(lambdas))});
  }
  return nodes;
}

} // namespace feprob
