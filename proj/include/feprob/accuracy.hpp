#pragma once

#include <memory>
#include <string>
#include <vector>

namespace feprob {

/// Continuity and coercivity constants of the bilinear form (Cea's lemma).
struct EllipticityData {
  double continuity = 1.0;  // M
  double ellipticity = 1.0; // alpha
};

/// Mesh-family data: diam(Omega), the regularity bound sigma >= h_K/rho_K,
/// the barycentric-gradient bound Lambda, and the space dimension.
struct DomainData {
  double diameter = 1.0;
  double shape_ratio = 1.0; // sigma >= 1
  double lambda_max = 1.0;  // Lambda
  int dimension = 1;        // n
};

void validate(const EllipticityData& e);
void validate(const DomainData& d);

/// Supplies the Sobolev semi-norms |u|_{r,Omega} of some fixed function u.
/// Log domain is primary so that orders up to ~10^4 stay representable.
/// Implementations must be safe for concurrent queries.
class SeminormProvider {
public:
  virtual ~SeminormProvider() = default;

  virtual double log_seminorm(int r) const = 0;
  virtual double ratio_limit() const = 0; // l = lim_r |u|_{r+1} / |u|_r
  virtual std::string label() const = 0;

  double seminorm(int r) const;
};

/// u(x, y) = sin(pi x) cos(pi y) on the unit square: |u|_r = (sqrt 2)^{r-2} pi^r
/// under the weighted semi-norm convention (see README). Constant ratio
/// sqrt(2) pi between consecutive orders.
class ModelSeminormProvider final : public SeminormProvider {
public:
  double log_seminorm(int r) const override;
  double ratio_limit() const override;
  std::string label() const override { return "builtin-sine"; }
};

/// |u|_r = c * rho^r.
class GeometricSeminormProvider final : public SeminormProvider {
public:
  GeometricSeminormProvider(double c, double rho);

  double log_seminorm(int r) const override;
  double ratio_limit() const override { return rho_; }
  std::string label() const override { return "geometric"; }

private:
  double c_;
  double rho_;
};

/// |u|_r = values[r] for r < values.size(); any higher order is a domain
/// error naming the missing order. The ratio limit is estimated from the
/// last two entries, so at least two are required.
class TableSeminormProvider final : public SeminormProvider {
public:
  explicit TableSeminormProvider(std::vector<double> values);

  double log_seminorm(int r) const override;
  double ratio_limit() const override;
  std::string label() const override { return "table"; }

private:
  std::vector<double> values_;
};

/// C(Omega, sigma, Lambda, n) = 1 + 2 diam + sigma n (n+1) Lambda.
double domain_constant(const DomainData& d);

/// C_k^* = (M C / alpha) (k+n)^n k^{n+2} / ((k-1)! (k - n/2)).
/// Requires k > n/2.
double ck_star(int k, const EllipticityData& e, const DomainData& d);
double log_ck_star(int k, const EllipticityData& e, const DomainData& d);

/// Interpolation error envelopes on a mesh of size h:
///   |u - Pi_h u|_{0,2} <= [1 + (k+n)^n k^{n+1}] / (k! (k+1-n/2)) |u|_{k+1} h^{k+1}
///   |u - Pi_h u|_{1,2} <= [1 + sigma n (n+1) Lambda (k+n)^n k^{n+2}]
///                          / ((k-1)! (k-n/2)) |u|_{k+1} h^k
/// Both require k > n/2. They return the bound value only.
double interpolation_bound_l2(int k, int n, double h, double seminorm_u);
double interpolation_bound_h1(int k, int n, double h, double sigma,
                              double lambda, double seminorm_u);

/// h* = (C_k / C_m)^{1/(m-k)}; requires m > k and positive constants.
double h_star(double c_k, double c_m, int k, int m);

/// h*_q = (C*_k |u|_{k+1} / (C*_{k+q} |u|_{k+q+1}))^{1/q}, in log domain.
/// Finite log for q up to 10^4; the direct value may overflow to +inf.
double log_h_star_q(int k, int q, const EllipticityData& e,
                    const DomainData& d, const SeminormProvider& s);
double h_star_q(int k, int q, const EllipticityData& e, const DomainData& d,
                const SeminormProvider& s);

/// log[Theta e^{-(q+k)} (q+k)^{q+k-2n-3/2}] with
/// Theta = sqrt(2 pi) (k+n)^n k^{n+2} / ((k-1)! (k-n/2)): the Stirling
/// equivalent of log[(h*_q)^q |u|_{k+q+1} / |u|_{k+1}] = log[C*_k / C*_{k+q}].
double stirling_factor(int k, int n, int q);
double log_theta(int k, int n);

/// The divergence rate of Theorem-type asymptotics: h*_q ~ q / (e l).
double h_star_q_asymptote(int q, double ratio_limit);

/// Closed-form model semi-norm (sqrt 2)^{r-2} pi^r and its logarithm.
double model_seminorm(int r);
double log_model_seminorm(int r);

/// Ratios |u|_{k+q+2} / |u|_{k+q+1} for q = 0..q_max (q_max + 1 entries).
std::vector<double> seminorm_ratio_sequence(const SeminormProvider& s, int k,
                                            int q_max);

/// The h*_q growth table for a list of q values, all in log domain.
struct AsymptoticModel {
  int k = 0;
  double ratio_limit = 0.0; // l
  std::vector<int> q_values;
  std::vector<double> log_hstar_q;
  std::vector<double> asymptote; // q / (e l)
};

AsymptoticModel build_asymptotic_model(int k, const std::vector<int>& q_values,
                                       const EllipticityData& e,
                                       const DomainData& d,
                                       const SeminormProvider& s);

} // namespace feprob
