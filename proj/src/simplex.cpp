#include "feprob/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "feprob/errors.hpp"

namespace feprob {

namespace {

/// Solves the square system a * x = rhs in place (partial pivoting).
/// a is row-major size m x m, rhs is m x r column-major-by-column vectors.
void solve_dense(std::vector<std::vector<double>>& a,
                 std::vector<std::vector<double>>& rhs) {
  const std::size_t m = a.size();
  const std::size_t r = rhs.size();
  for (std::size_t col = 0; col < m; ++col) {
    std::size_t pivot = col;
    for (std::size_t row = col + 1; row < m; ++row)
      if (std::abs(a[row][col]) > std::abs(a[pivot][col])) pivot = row;
    if (std::abs(a[pivot][col]) == 0.0)
      throw GeometryError("singular affine system; vertices are degenerate");
    std::swap(a[col], a[pivot]);
    for (std::size_t j = 0; j < r; ++j) std::swap(rhs[j][col], rhs[j][pivot]);
    for (std::size_t row = col + 1; row < m; ++row) {
      const double factor = a[row][col] / a[col][col];
      if (factor == 0.0) continue;
      for (std::size_t j = col; j < m; ++j) a[row][j] -= factor * a[col][j];
      for (std::size_t j = 0; j < r; ++j) rhs[j][row] -= factor * rhs[j][col];
    }
  }
  for (std::size_t col = m; col-- > 0;) {
    for (std::size_t j = 0; j < r; ++j) {
      double value = rhs[j][col];
      for (std::size_t t = col + 1; t < m; ++t) value -= a[col][t] * rhs[j][t];
      rhs[j][col] = value / a[col][col];
    }
  }
}

double determinant(std::vector<std::vector<double>> a) {
  const std::size_t m = a.size();
  double det = 1.0;
  for (std::size_t col = 0; col < m; ++col) {
    std::size_t pivot = col;
    for (std::size_t row = col + 1; row < m; ++row)
      if (std::abs(a[row][col]) > std::abs(a[pivot][col])) pivot = row;
    if (pivot != col) {
      std::swap(a[col], a[pivot]);
      det = -det;
    }
    if (a[col][col] == 0.0) return 0.0;
    det *= a[col][col];
    for (std::size_t row = col + 1; row < m; ++row) {
      const double factor = a[row][col] / a[col][col];
      for (std::size_t j = col; j < m; ++j) a[row][j] -= factor * a[col][j];
    }
  }
  return det;
}

double distance(const std::vector<double>& p, const std::vector<double>& q) {
  double sum = 0.0;
  for (std::size_t j = 0; j < p.size(); ++j) sum += (p[j] - q[j]) * (p[j] - q[j]);
  return std::sqrt(sum);
}

/// (n-1)-measure of the facet opposite vertex `skip` (counting measure 1 for
/// the 0-dimensional facets of a segment).
double facet_measure(const std::vector<std::vector<double>>& vertices,
                     std::size_t skip, int n) {
  std::vector<std::vector<double>> facet;
  for (std::size_t m = 0; m < vertices.size(); ++m)
    if (m != skip) facet.push_back(vertices[m]);
  if (n == 1) return 1.0;
  if (n == 2) return distance(facet[0], facet[1]);
  // n == 3: triangle area in R^3 via the cross product
  double u[3], v[3];
  for (int j = 0; j < 3; ++j) {
    u[j] = facet[1][static_cast<std::size_t>(j)] - facet[0][static_cast<std::size_t>(j)];
    v[j] = facet[2][static_cast<std::size_t>(j)] - facet[0][static_cast<std::size_t>(j)];
  }
  const double cx = u[1] * v[2] - u[2] * v[1];
  const double cy = u[2] * v[0] - u[0] * v[2];
  const double cz = u[0] * v[1] - u[1] * v[0];
  return 0.5 * std::sqrt(cx * cx + cy * cy + cz * cz);
}

} // namespace

SimplexGeometry simplex_geometry(const std::vector<std::vector<double>>& vertices) {
  if (vertices.size() < 2)
    throw UsageError("a simplex needs at least 2 vertices");
  const int n = static_cast<int>(vertices.size()) - 1;
  if (n > 3)
    throw CapabilityError("simplex geometry supports n <= 3, got n=" + std::to_string(n));
  for (const auto& v : vertices)
    if (static_cast<int>(v.size()) != n)
      throw UsageError("vertex dimension must equal n=" + std::to_string(n));

  SimplexGeometry geometry;
  geometry.dimension = n;
  geometry.vertices = vertices;

  double factorial = 1.0;
  for (int j = 2; j <= n; ++j) factorial *= j;
  std::vector<std::vector<double>> edges(static_cast<std::size_t>(n));
  for (int m = 1; m <= n; ++m) {
    edges[static_cast<std::size_t>(m - 1)].resize(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j)
      edges[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(j)] =
          vertices[static_cast<std::size_t>(m)][static_cast<std::size_t>(j)] -
          vertices[0][static_cast<std::size_t>(j)];
  }
  geometry.measure = std::abs(determinant(edges)) / factorial;

  for (std::size_t p = 0; p < vertices.size(); ++p)
    for (std::size_t q = p + 1; q < vertices.size(); ++q)
      geometry.diameter = std::max(geometry.diameter, distance(vertices[p], vertices[q]));

  if (geometry.measure < 1e-14 * std::pow(geometry.diameter, n))
    throw GeometryError("degenerate simplex: measure " + std::to_string(geometry.measure) +
                        " below tolerance");

  double facet_sum = 0.0;
  for (std::size_t m = 0; m < vertices.size(); ++m)
    facet_sum += facet_measure(vertices, m, n);
  geometry.inscribed_diameter = 2.0 * n * geometry.measure / facet_sum;

  // lambda_l is affine with lambda_l(vertex_m) = delta_lm; solve the
  // (n+1)x(n+1) system with rows (vertex_m, 1) for (grad lambda_l, offset).
  std::vector<std::vector<double>> system(vertices.size());
  for (std::size_t m = 0; m < vertices.size(); ++m) {
    system[m] = vertices[m];
    system[m].push_back(1.0);
  }
  std::vector<std::vector<double>> columns(vertices.size());
  for (std::size_t l = 0; l < vertices.size(); ++l) {
    columns[l].assign(vertices.size(), 0.0);
    columns[l][l] = 1.0;
  }
  solve_dense(system, columns);

  geometry.bary_gradients.resize(vertices.size());
  for (std::size_t l = 0; l < vertices.size(); ++l) {
    geometry.bary_gradients[l].assign(columns[l].begin(),
                                      columns[l].begin() + n);
    for (double g : geometry.bary_gradients[l])
      geometry.lambda_max = std::max(geometry.lambda_max, std::abs(g));
  }
  return geometry;
}

SimplexGeometry reference_simplex(int n) {
  if (n < 1 || n > 3)
    throw CapabilityError("reference simplex supports n in {1, 2, 3}");
  std::vector<std::vector<double>> vertices(static_cast<std::size_t>(n) + 1,
                                            std::vector<double>(static_cast<std::size_t>(n), 0.0));
  for (int j = 0; j < n; ++j)
    vertices[static_cast<std::size_t>(j) + 1][static_cast<std::size_t>(j)] = 1.0;
  return simplex_geometry(vertices);
}

std::vector<double> barycentric_to_cartesian(const SimplexGeometry& simplex,
                                             const BarycentricPoint& point) {
  if (point.dimension() != simplex.dimension)
    throw UsageError("barycentric point dimension mismatch");
  std::vector<double> x(static_cast<std::size_t>(simplex.dimension), 0.0);
  for (std::size_t l = 0; l < simplex.vertices.size(); ++l)
    for (std::size_t j = 0; j < x.size(); ++j)
      x[j] += point[l] * simplex.vertices[l][j];
  return x;
}

BarycentricPoint cartesian_to_barycentric(const SimplexGeometry& simplex,
                                          const std::vector<double>& x) {
  if (static_cast<int>(x.size()) != simplex.dimension)
    throw UsageError("cartesian point dimension mismatch");
  std::vector<double> lambdas(simplex.vertices.size());
  for (std::size_t l = 0; l < simplex.vertices.size(); ++l) {
    // lambda_l(x) = grad lambda_l . x + offset; recover the offset from any
    // vertex: lambda_l(v_l) = 1
    double value = 0.0, at_vertex = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) {
      value += simplex.bary_gradients[l][j] * x[j];
      at_vertex += simplex.bary_gradients[l][j] * simplex.vertices[l][j];
    }
    lambdas[l] = value + (1.0 - at_vertex);
  }
  return BarycentricPoint(std::move(lambdas));
}

} // namespace feprob
