#ifndef RICAP_BOUNDS_HPP
#define RICAP_BOUNDS_HPP

#include <vector>

#include "ricap/channel.hpp"
#include "ricap/quadrature.hpp"

namespace ricap {

/// Requested operation needs an antenna pattern the formula does not cover.
class unsupported_configuration : public std::invalid_argument {
public:
    explicit unsupported_configuration(const std::string& what)
        : std::invalid_argument(what) {}
};

enum class EstimateMethod { closed_form, quadrature, monte_carlo };

/// Capacity in nats per channel use plus an uncertainty half-width
/// (0 for closed forms, quadrature error estimate or confidence-interval
/// half-width otherwise).
struct CapacityEstimate {
    double nats;
    double uncertainty;
    EstimateMethod method;
};

/// Water-filling power split across the eigenmodes of the mean Gram matrix.
/// Entry 1 carries the strong (line-of-sight) mode; entries 2..N_T are equal.
struct WaterfillAllocation {
    std::vector<double> diagonal;
    double threshold;  // kappa(1+kappa) / (N_R (1 + N_T kappa))
};

WaterfillAllocation waterfill_allocation(const ChannelConfig& cfg);

/// Jensen upper bound on ergodic capacity with the water-filled allocation.
CapacityEstimate capacity_upper_bound(const ChannelConfig& cfg);

/// Exact capacity of the deterministic (kappa -> inf) channel:
/// ln(1 + N_R N_T P).
CapacityEstimate deterministic_capacity(const ChannelConfig& cfg);

/// Capacity in the limit of many transmit antennas with scaled-identity
/// signalling: (N_R - 1) ln(1 + P/(1+k)) + ln(1 + (N_R k + 1) P/(1+k)).
CapacityEstimate asymptotic_capacity_large_nt(int n_r, double kappa, double power);

/// Jensen upper bound for the Rician-weighted covariance, N_R = 1 only.
CapacityEstimate new_scheme_upper_bound(const ChannelConfig& cfg);

/// Lower bound for the Rician-weighted covariance, N_R = 1 only; drops the
/// scattered-power term and integrates over the line-of-sight component.
CapacityEstimate new_scheme_lower_bound(const ChannelConfig& cfg, const QuadratureRule& rule);

/// Large-kappa approximation ln(1 + P N_T k^2/(1+k)^2), N_R = 1 only.
CapacityEstimate new_scheme_large_kappa_approx(const ChannelConfig& cfg);

} // namespace ricap

#endif
