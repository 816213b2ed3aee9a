#ifndef RICAP_CHANNEL_HPP
#define RICAP_CHANNEL_HPP

#include "ricap/linalg.hpp"
#include "ricap/rng.hpp"

namespace ricap {

/// Antenna counts, Rician factor and power budget; the single source of
/// model parameters. Entry statistics are normalized so the line-of-sight
/// and scattered powers sum to one: mu^2 + 2 sigma^2 = 1.
struct ChannelConfig {
    int n_t;
    int n_r;
    double kappa;
    double power;

    ChannelConfig(int n_t, int n_r, double kappa, double power);

    double mu() const;            // sqrt(kappa / (1 + kappa))
    double two_sigma_sq() const;  // 1 / (1 + kappa)
    int m() const { return n_t < n_r ? n_t : n_r; }
    int n() const { return n_t > n_r ? n_t : n_r; }
};

/// One fading realization: N_R x N_T matrix with i.i.d. complex Gaussian
/// entries of mean (mu/sqrt 2)(1+j) and per-component variance sigma^2.
ComplexMatrix sample_h(const ChannelConfig& cfg, RngStream& rng);

/// Rician envelope density 2(1+k) r exp(-(1+k)r^2 - k) I0(2 sqrt(k(1+k)) r).
double rician_envelope_pdf(double r, double kappa);

/// Normalized mean of H^H H: ones on the diagonal, kappa/(1+kappa) off it.
HermitianMatrix upsilon(const ChannelConfig& cfg);

enum class CovarianceTag { scaled_identity, rician_weighted, explicit_matrix };

/// Transmit covariance choice. Validated positive semidefinite with
/// trace <= P + 1e-9; explicit inputs are symmetrized and eigenvalue-clipped
/// at -1e-12 before validation.
class CovarianceScheme {
public:
    static CovarianceScheme scaled_identity(const ChannelConfig& cfg);
    static CovarianceScheme rician_weighted(const ChannelConfig& cfg);
    static CovarianceScheme explicit_matrix(const ChannelConfig& cfg, const HermitianMatrix& q);

    CovarianceTag tag() const { return tag_; }
    const HermitianMatrix& matrix() const { return matrix_; }

private:
    CovarianceScheme(CovarianceTag tag, HermitianMatrix m) : tag_(tag), matrix_(std::move(m)) {}
    CovarianceTag tag_;
    HermitianMatrix matrix_;
};

} // namespace ricap

#endif
