#ifndef RICAP_ESTIMATORS_HPP
#define RICAP_ESTIMATORS_HPP

#include <cstdint>

#include "ricap/bounds.hpp"
#include "ricap/channel.hpp"
#include "ricap/quadrature.hpp"

namespace ricap {

/// Sample budget and reproducibility contract for the Monte Carlo
/// estimators. Samples are split evenly across shards, one stream per
/// shard, and partial results are combined in shard order, so results are
/// a pure function of (cfg, q, spec) including the shard count.
struct MonteCarloSpec {
    long samples;
    std::uint64_t seed;
    int shards = 1;
    double confidence = 0.95;

    MonteCarloSpec(long samples, std::uint64_t seed, int shards = 1, double confidence = 0.95);
};

/// Scalar non-central Wishart density parameters: the larger antenna count
/// n and the Rician factor.
struct ScalarWishartDensity {
    int n;
    double kappa;

    ScalarWishartDensity(int n, double kappa);
};

/// Density of W = sum of n squared entry magnitudes:
/// w^{n-1} e^{-w} psi(w, n) / Gamma(n).
double scalar_wishart_pdf(double w, const ScalarWishartDensity& d);

/// Sample mean of logdet(I + H Q H^H) with a normal-approximation
/// confidence interval. Bit-reproducible for fixed (seed, shards).
CapacityEstimate mc_ergodic_capacity(const ChannelConfig& cfg, const CovarianceScheme& q,
                                     const MonteCarloSpec& spec);

/// Exact capacity for min(N_T, N_R) = 1 by quadrature against the scalar
/// non-central Wishart density.
CapacityEstimate quadrature_capacity_m1(const ChannelConfig& cfg, const QuadratureRule& rule);
CapacityEstimate quadrature_capacity_m1(const ChannelConfig& cfg);

/// Monte Carlo capacity of the Rician-weighted covariance for N_R = 1:
/// E ln(P/(N_T(1+k)) (W + k |Z|^2) + 1) with W and Z from the same draw.
CapacityEstimate mc_new_scheme_capacity(const ChannelConfig& cfg, const MonteCarloSpec& spec);

struct GoodnessOfFit {
    double ks_statistic;
    long samples;
};

/// Kolmogorov-Smirnov distance between sampled W values (m = 1) and the
/// scalar non-central Wishart CDF.
GoodnessOfFit empirical_eigen_check(const ChannelConfig& cfg, const MonteCarloSpec& spec);

/// Two-sided normal quantile for the given confidence level.
double normal_quantile_two_sided(double confidence);

} // namespace ricap

#endif
