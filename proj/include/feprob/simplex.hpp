#pragma once

#include <vector>

#include "feprob/multi_index.hpp"

namespace feprob {

/// Non-degenerate n-simplex (n <= 3) with its derived metric data.
struct SimplexGeometry {
  int dimension = 0;                               // n
  std::vector<std::vector<double>> vertices;       // n+1 points in R^n
  double measure = 0.0;                            // mes(K), Lebesgue in R^n
  double diameter = 0.0;                           // h_K, longest edge
  double inscribed_diameter = 0.0;                 // rho_K
  std::vector<std::vector<double>> bary_gradients; // row l = grad lambda_l, (n+1) x n
  double lambda_max = 0.0;                         // Lambda = max |Lambda^(l)_j|
};

/// Builds the geometry from n+1 affinely independent vertices in R^n.
/// Throws GeometryError when the simplex is degenerate
/// (measure < 1e-14 * diameter^n).
SimplexGeometry simplex_geometry(const std::vector<std::vector<double>>& vertices);

/// Unit reference simplex: [0,1], triangle (0,0),(1,0),(0,1), or the
/// corresponding tetrahedron.
SimplexGeometry reference_simplex(int n);

/// x = sum_l lambda_l * vertex_l.
std::vector<double> barycentric_to_cartesian(const SimplexGeometry& simplex,
                                             const BarycentricPoint& point);

/// Barycentric coordinates of a Cartesian point (affine solve).
BarycentricPoint cartesian_to_barycentric(const SimplexGeometry& simplex,
                                          const std::vector<double>& x);

} // namespace feprob
