#include "ricap/channel.hpp"

#include <cmath>

#include "ricap/special.hpp"

namespace ricap {

ChannelConfig::ChannelConfig(int n_t_, int n_r_, double kappa_, double power_)
    : n_t(n_t_), n_r(n_r_), kappa(kappa_), power(power_) {
    if (n_t < 1 || n_r < 1)
        throw std::invalid_argument("ChannelConfig: antenna counts must be positive");
    if (!(kappa >= 0.0) || !std::isfinite(kappa))
        throw std::invalid_argument("ChannelConfig: kappa must be finite and nonnegative");
    if (!(power >= 0.0) || !std::isfinite(power))
        throw std::invalid_argument("ChannelConfig: power must be finite and nonnegative");
}

double ChannelConfig::mu() const {
    return std::sqrt(kappa / (1.0 + kappa));
}

double ChannelConfig::two_sigma_sq() const {
    return 1.0 / (1.0 + kappa);
}

ComplexMatrix sample_h(const ChannelConfig& cfg, RngStream& rng) {
    const double mean = cfg.mu() / std::sqrt(2.0);
    const double sigma = std::sqrt(0.5 * cfg.two_sigma_sq());
    std::vector<cdouble> e;
    e.reserve(static_cast<size_t>(cfg.n_r) * cfg.n_t);
    for (int i = 0; i < cfg.n_r * cfg.n_t; ++i) {
        auto [g_re, g_im] = rng.gaussian_pair();
        e.emplace_back(mean + sigma * g_re, mean + sigma * g_im);
    }
    return ComplexMatrix(cfg.n_r, cfg.n_t, std::move(e));
}

double rician_envelope_pdf(double r, double kappa) {
    if (r < 0.0 || kappa < 0.0)
        throw std::domain_error("rician_envelope_pdf: arguments must be nonnegative");
    if (r == 0.0) return 0.0;
    const double log_i0 = log_bessel_i(0.0, 2.0 * std::sqrt(kappa * (1.0 + kappa)) * r);
    return 2.0 * (1.0 + kappa) * r * std::exp(-(1.0 + kappa) * r * r - kappa + log_i0);
}

HermitianMatrix upsilon(const ChannelConfig& cfg) {
    const int n = cfg.n_t;
    const double off = cfg.kappa / (1.0 + cfg.kappa);
    std::vector<cdouble> e(static_cast<size_t>(n) * n, off);
    for (int i = 0; i < n; ++i) e[static_cast<size_t>(i) * n + i] = 1.0;
    return HermitianMatrix(n, std::move(e));
}

namespace {

void check_power(const HermitianMatrix& q, double power) {
    if (q.trace() > power + 1e-9)
        throw std::invalid_argument("CovarianceScheme: trace exceeds power budget");
}

} // namespace

CovarianceScheme CovarianceScheme::scaled_identity(const ChannelConfig& cfg) {
    const int n = cfg.n_t;
    std::vector<cdouble> e(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i) e[static_cast<size_t>(i) * n + i] = cfg.power / n;
    HermitianMatrix q(n, std::move(e));
    check_power(q, cfg.power);
    return CovarianceScheme(CovarianceTag::scaled_identity, std::move(q));
}

CovarianceScheme CovarianceScheme::rician_weighted(const ChannelConfig& cfg) {
    const int n = cfg.n_t;
    const double c = cfg.power / (n * (1.0 + cfg.kappa));
    std::vector<cdouble> e(static_cast<size_t>(n) * n, c * cfg.kappa);
    for (int i = 0; i < n; ++i) e[static_cast<size_t>(i) * n + i] = c * (1.0 + cfg.kappa);
    HermitianMatrix q(n, std::move(e));
    check_power(q, cfg.power);
    return CovarianceScheme(CovarianceTag::rician_weighted, std::move(q));
}

CovarianceScheme CovarianceScheme::explicit_matrix(const ChannelConfig& cfg,
                                                   const HermitianMatrix& q_in) {
    if (q_in.dim() != cfg.n_t)
        throw std::invalid_argument("CovarianceScheme: dimension must equal n_t");
    // tolerate near-PSD input: clip eigenvalues at -1e-12, reject below
    EigenDecomposition eig = hermitian_eigen(q_in);
    for (double& lambda : eig.eigenvalues) {
        if (lambda < -1e-12)
            throw std::invalid_argument("CovarianceScheme: matrix is not positive semidefinite");
        if (lambda < 0.0) lambda = 0.0;
    }
    const int n = q_in.dim();
    std::vector<cdouble> e(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            cdouble s = 0.0;
            for (int k = 0; k < n; ++k)
                s += eig.eigenvectors(i, k) * eig.eigenvalues[k] * std::conj(eig.eigenvectors(j, k));
            e[static_cast<size_t>(i) * n + j] = s;
        }
    HermitianMatrix q(n, std::move(e));
    check_power(q, cfg.power);
    return CovarianceScheme(CovarianceTag::explicit_matrix, std::move(q));
}

} // namespace ricap
