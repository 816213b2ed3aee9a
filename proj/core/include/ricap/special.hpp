#ifndef RICAP_SPECIAL_HPP
#define RICAP_SPECIAL_HPP

namespace ricap {

/// ln Gamma(x) for x > 0.
double log_gamma(double x);

/// ln of the complex multivariate gamma function:
/// (m(m-1)/2) ln pi + sum_{k=1..m} ln Gamma(a - k + 1). Requires a > m - 1.
double log_multivariate_gamma(int m, double a);

/// ln I_nu(x), nu >= 0, x >= 0. Returns 0 at (0, 0) for nu = 0 and -inf
/// for nu > 0, x = 0. Evaluated by the power series in log domain for
/// moderate arguments and the large-argument asymptotic expansion beyond,
/// so there is no overflow up to x = 1e6.
double log_bessel_i(double nu, double x);

/// ln 0F1~(m; r^2) via Gamma(m) r^{-(m-1)} I_{m-1}(2r). Returns 0 at r_sq = 0.
double hyp0f1_scalar(int m, double r_sq);

/// Non-centrality correction factor of the scalar non-central Wishart
/// density, evaluated in log domain and exponentiated. Exactly 1 at
/// kappa = 0 (the analytic limit) and finite for all valid inputs.
double psi_factor(double w, int n, double kappa);

} // namespace ricap

#endif
