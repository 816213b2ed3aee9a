#include "ricap/bounds.hpp"

#include <cmath>

#include "ricap/special.hpp"

namespace ricap {

WaterfillAllocation waterfill_allocation(const ChannelConfig& cfg) {
    const double k = cfg.kappa;
    const double theta = k * (1.0 + k) / (cfg.n_r * (1.0 + cfg.n_t * k));
    const double per_antenna = cfg.power / cfg.n_t;
    const double excess = per_antenna > theta ? per_antenna - theta : 0.0;
    WaterfillAllocation alloc;
    alloc.threshold = theta;
    alloc.diagonal.assign(cfg.n_t, excess);
    alloc.diagonal[0] = std::min(per_antenna, theta) * cfg.n_t + excess;
    return alloc;
}

CapacityEstimate capacity_upper_bound(const ChannelConfig& cfg) {
    const double k = cfg.kappa;
    const WaterfillAllocation alloc = waterfill_allocation(cfg);
    const double lead = 1.0 + cfg.n_r * (1.0 + cfg.n_t * k) / (1.0 + k) * alloc.diagonal[0];
    const double rest = cfg.n_t > 1 ? alloc.diagonal[1] : 0.0;
    const double c = std::log(lead) +
                     (cfg.n_t - 1) * std::log(1.0 + cfg.n_r / (1.0 + k) * rest);
    return {c, 0.0, EstimateMethod::closed_form};
}

CapacityEstimate deterministic_capacity(const ChannelConfig& cfg) {
    return {std::log1p(static_cast<double>(cfg.n_r) * cfg.n_t * cfg.power), 0.0,
            EstimateMethod::closed_form};
}

CapacityEstimate asymptotic_capacity_large_nt(int n_r, double kappa, double power) {
    if (n_r < 1)
        throw std::invalid_argument("asymptotic_capacity_large_nt: n_r must be positive");
    if (kappa < 0.0 || power < 0.0)
        throw std::invalid_argument("asymptotic_capacity_large_nt: negative parameter");
    const double p = power / (1.0 + kappa);
    const double c = (n_r - 1) * std::log1p(p) + std::log1p((n_r * kappa + 1.0) * p);
    return {c, 0.0, EstimateMethod::closed_form};
}

namespace {

void require_single_receive(const ChannelConfig& cfg, const char* op) {
    if (cfg.n_r != 1)
        throw unsupported_configuration(std::string(op) + ": requires n_r = 1");
}

} // namespace

CapacityEstimate new_scheme_upper_bound(const ChannelConfig& cfg) {
    require_single_receive(cfg, "new_scheme_upper_bound");
    const double k = cfg.kappa;
    const double inner = 1.0 + k / (1.0 + k) + cfg.n_t * k * k / (1.0 + k);
    return {std::log1p(cfg.power / (1.0 + k) * inner), 0.0, EstimateMethod::closed_form};
}

CapacityEstimate new_scheme_lower_bound(const ChannelConfig& cfg, const QuadratureRule& rule) {
    require_single_receive(cfg, "new_scheme_lower_bound");
    const double k = cfg.kappa;
    if (k == 0.0) return {0.0, 0.0, EstimateMethod::quadrature};
    const int nt = cfg.n_t;
    const double p = cfg.power;
    // density factor exp(ln(1+k) - nt*k - k*z + ln I0) with the log term
    // kept outside; I0 overflows in linear domain for large nt*k*z
    auto integrand = [k, nt, p](double z) -> double {
        const double log_term = std::log1p(p * k * z / (1.0 + k));
        if (log_term == 0.0) return 0.0;
        const double log_i0 = log_bessel_i(0.0, 2.0 * std::sqrt(nt * k * (1.0 + k) * z));
        return log_term * std::exp(std::log1p(k) - nt * k - (1.0 + k) * z + log_i0);
    };
    const IntegralResult r = integrate_semiinfinite(integrand, rule);
    return {r.value, r.error_estimate, EstimateMethod::quadrature};
}

CapacityEstimate new_scheme_large_kappa_approx(const ChannelConfig& cfg) {
    require_single_receive(cfg, "new_scheme_large_kappa_approx");
    const double k = cfg.kappa;
    const double ratio = k / (1.0 + k);
    return {std::log1p(cfg.power * cfg.n_t * ratio * ratio), 0.0, EstimateMethod::closed_form};
}

} // namespace ricap
