#include "ricap/special.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace ricap {

double log_gamma(double x) {
    if (!(x > 0.0))
        throw std::domain_error("log_gamma: argument must be positive");
    return std::lgamma(x);
}

double log_multivariate_gamma(int m, double a) {
    if (m < 1)
        throw std::domain_error("log_multivariate_gamma: m must be positive");
    if (!(a > m - 1))
        throw std::domain_error("log_multivariate_gamma: requires a > m - 1");
    double s = 0.5 * m * (m - 1) * std::log(std::numbers::pi);
    for (int k = 1; k <= m; ++k) s += std::lgamma(a - k + 1);
    return s;
}

namespace {

// Power series sum_k (x/2)^{nu+2k} / (k! Gamma(nu+k+1)), accumulated as a
// log-sum-exp so large arguments cannot overflow.
double log_bessel_series(double nu, double x) {
    const double lx2 = std::log(0.5 * x);
    double t = nu * lx2 - std::lgamma(nu + 1.0);
    double m = t;
    double s = 1.0;
    double prev = t;
    for (long k = 1; k < 4000000; ++k) {
        t += 2.0 * lx2 - std::log(static_cast<double>(k)) - std::log(nu + k);
        if (t > m) {
            s = s * std::exp(m - t) + 1.0;
            m = t;
        } else {
            s += std::exp(t - m);
        }
        if (t < prev && t < m - 40.0) break;
        prev = t;
    }
    return m + std::log(s);
}

// Large-argument expansion: I_nu(x) ~ e^x / sqrt(2 pi x) * sum_k (-1)^k a_k,
// a_k = prod_{j<=k} (mu - (2j-1)^2) / (k! (8x)^k), mu = 4 nu^2.
double log_bessel_asymptotic(double nu, double x) {
    const double mu = 4.0 * nu * nu;
    double term = 1.0;
    double s = 1.0;
    for (int k = 1; k < 60; ++k) {
        const double num = mu - (2.0 * k - 1.0) * (2.0 * k - 1.0);
        const double next = term * (-num) / (8.0 * k * x);
        if (std::abs(next) >= std::abs(term)) break;
        term = next;
        s += term;
        if (std::abs(term) < 1e-17 * std::abs(s)) break;
    }
    return x - 0.5 * std::log(2.0 * std::numbers::pi * x) + std::log(s);
}

} // namespace

double log_bessel_i(double nu, double x) {
    if (nu < 0.0 || x < 0.0)
        throw std::domain_error("log_bessel_i: arguments must be nonnegative");
    if (x == 0.0)
        return nu == 0.0 ? 0.0 : -std::numeric_limits<double>::infinity();
    if (x >= std::max(500.0, 4.0 * nu * nu))
        return log_bessel_asymptotic(nu, x);
    return log_bessel_series(nu, x);
}

double hyp0f1_scalar(int m, double r_sq) {
    if (m < 1)
        throw std::domain_error("hyp0f1_scalar: m must be positive");
    if (r_sq < 0.0)
        throw std::domain_error("hyp0f1_scalar: r_sq must be nonnegative");
    if (r_sq == 0.0) return 0.0;
    const double r = std::sqrt(r_sq);
    return std::lgamma(static_cast<double>(m)) - (m - 1) * std::log(r) +
           log_bessel_i(static_cast<double>(m - 1), 2.0 * r);
}

double psi_factor(double w, int n, double kappa) {
    if (w < 0.0 || kappa < 0.0)
        throw std::domain_error("psi_factor: w and kappa must be nonnegative");
    if (n < 1)
        throw std::domain_error("psi_factor: n must be positive");
    if (kappa == 0.0) return 1.0;  // analytic limit
    const double log_psi = n * (std::log1p(kappa) - kappa) - kappa * w +
                           hyp0f1_scalar(n, n * kappa * (1.0 + kappa) * w);
    return std::exp(log_psi);
}

} // namespace ricap
