#include "ricap/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <vector>

#include "ricap/special.hpp"

namespace ricap {

MonteCarloSpec::MonteCarloSpec(long samples_, std::uint64_t seed_, int shards_, double confidence_)
    : samples(samples_), seed(seed_), shards(shards_), confidence(confidence_) {
    if (samples < 100)
        throw std::invalid_argument("MonteCarloSpec: samples must be at least 100");
    if (shards < 1 || shards > samples)
        throw std::invalid_argument("MonteCarloSpec: shards must be in [1, samples]");
    if (!(confidence > 0.0) || !(confidence < 1.0))
        throw std::invalid_argument("MonteCarloSpec: confidence must be in (0, 1)");
}

ScalarWishartDensity::ScalarWishartDensity(int n_, double kappa_) : n(n_), kappa(kappa_) {
    if (n < 1)
        throw std::invalid_argument("ScalarWishartDensity: n must be positive");
    if (kappa < 0.0)
        throw std::invalid_argument("ScalarWishartDensity: kappa must be nonnegative");
}

double normal_quantile_two_sided(double confidence) {
    // Acklam's rational approximation of the inverse normal CDF.
    const double p = 0.5 * (1.0 + confidence);
    static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                               -2.759285104469687e+02, 1.383577518672690e+02,
                               -3.066479806614716e+01, 2.506628277459239e+00};
    static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                               -1.556989798598866e+02, 6.680131188771972e+01,
                               -1.328068155288572e+01};
    static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                               -2.400758277161838e+00, -2.549732539343734e+00,
                               4.374664141464968e+00,  2.938163982698783e+00};
    static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                               2.445134137142996e+00, 3.754408661907416e+00};
    const double plow = 0.02425;
    if (p > 1.0 - plow) {
        const double q = std::sqrt(-2.0 * std::log(1.0 - p));
        return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    const double q = p - 0.5;
    const double r = q * q;
    return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
           (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
}

namespace {

struct MomentAccumulator {
    long count = 0;
    double mean = 0.0;
    double m2 = 0.0;

    void add(double x) {
        ++count;
        const double delta = x - mean;
        mean += delta / count;
        m2 += delta * (x - mean);
    }

    void merge(const MomentAccumulator& other) {
        if (other.count == 0) return;
        if (count == 0) {
            *this = other;
            return;
        }
        const double delta = other.mean - mean;
        const long total = count + other.count;
        mean += delta * other.count / total;
        m2 += other.m2 + delta * delta * (static_cast<double>(count) * other.count / total);
        count = total;
    }
};

template <typename Sampler>
CapacityEstimate run_mc(const MonteCarloSpec& spec, Sampler sampler) {
    const long base = spec.samples / spec.shards;
    const long remainder = spec.samples % spec.shards;
    auto run_shard = [&](int shard) {
        RngStream rng(spec.seed, static_cast<std::uint64_t>(shard));
        const long count = base + (shard < remainder ? 1 : 0);
        MomentAccumulator acc;
        for (long i = 0; i < count; ++i) acc.add(sampler(rng));
        return acc;
    };

    MomentAccumulator total;
    if (spec.shards == 1) {
        total = run_shard(0);
    } else {
        std::vector<std::future<MomentAccumulator>> futures;
        futures.reserve(spec.shards);
        for (int s = 0; s < spec.shards; ++s)
            futures.push_back(std::async(std::launch::async, run_shard, s));
        for (auto& f : futures) total.merge(f.get());  // shard order fixed
    }

    const double z = normal_quantile_two_sided(spec.confidence);
    const double sd = total.count > 1 ? std::sqrt(total.m2 / (total.count - 1)) : 0.0;
    return {total.mean, z * sd / std::sqrt(static_cast<double>(total.count)),
            EstimateMethod::monte_carlo};
}

// I + H Q H^H, exploiting the structure of the covariance scheme.
HermitianMatrix shifted_received_gram(const ComplexMatrix& h, const ChannelConfig& cfg,
                                      const CovarianceScheme& q) {
    const int nr = h.rows();
    const int nt = h.cols();
    std::vector<cdouble> g(static_cast<size_t>(nr) * nr);

    if (q.tag() == CovarianceTag::explicit_matrix) {
        const ComplexMatrix hq = multiply(h, q.matrix().to_matrix());
        for (int i = 0; i < nr; ++i)
            for (int j = i; j < nr; ++j) {
                cdouble s = 0.0;
                for (int l = 0; l < nt; ++l) s += hq(i, l) * std::conj(h(j, l));
                g[static_cast<size_t>(i) * nr + j] = s;
                g[static_cast<size_t>(j) * nr + i] = std::conj(s);
            }
    } else {
        const double scale = q.tag() == CovarianceTag::scaled_identity
                                 ? cfg.power / nt
                                 : cfg.power / (nt * (1.0 + cfg.kappa));
        for (int i = 0; i < nr; ++i)
            for (int j = i; j < nr; ++j) {
                cdouble s = 0.0;
                for (int l = 0; l < nt; ++l) s += h(i, l) * std::conj(h(j, l));
                g[static_cast<size_t>(i) * nr + j] = scale * s;
                g[static_cast<size_t>(j) * nr + i] = std::conj(scale * s);
            }
        if (q.tag() == CovarianceTag::rician_weighted && cfg.kappa > 0.0) {
            // rank-one line-of-sight term: kappa * (H e)(H e)^H
            std::vector<cdouble> v(nr);
            for (int i = 0; i < nr; ++i) {
                cdouble s = 0.0;
                for (int l = 0; l < nt; ++l) s += h(i, l);
                v[i] = s;
            }
            for (int i = 0; i < nr; ++i)
                for (int j = 0; j < nr; ++j)
                    g[static_cast<size_t>(i) * nr + j] += scale * cfg.kappa * v[i] * std::conj(v[j]);
        }
    }
    for (int i = 0; i < nr; ++i) g[static_cast<size_t>(i) * nr + i] += 1.0;
    return HermitianMatrix(nr, std::move(g));
}

} // namespace

CapacityEstimate mc_ergodic_capacity(const ChannelConfig& cfg, const CovarianceScheme& q,
                                     const MonteCarloSpec& spec) {
    if (q.matrix().dim() != cfg.n_t)
        throw std::invalid_argument("mc_ergodic_capacity: covariance dimension must equal n_t");
    return run_mc(spec, [&cfg, &q](RngStream& rng) {
        const ComplexMatrix h = sample_h(cfg, rng);
        return logdet_posdef(shifted_received_gram(h, cfg, q));
    });
}

double scalar_wishart_pdf(double w, const ScalarWishartDensity& d) {
    if (w < 0.0)
        throw std::domain_error("scalar_wishart_pdf: w must be nonnegative");
    if (w == 0.0)
        return d.n == 1 ? psi_factor(0.0, 1, d.kappa) : 0.0;
    const double log_central = (d.n - 1) * std::log(w) - w - std::lgamma(static_cast<double>(d.n));
    return std::exp(log_central) * psi_factor(w, d.n, d.kappa);
}

CapacityEstimate quadrature_capacity_m1(const ChannelConfig& cfg, const QuadratureRule& rule) {
    if (cfg.m() != 1)
        throw unsupported_configuration("quadrature_capacity_m1: requires min(n_t, n_r) = 1");
    const ScalarWishartDensity d(cfg.n(), cfg.kappa);
    const double snr = cfg.power / cfg.n_t;
    auto integrand = [&d, snr](double w) { return std::log1p(snr * w) * scalar_wishart_pdf(w, d); };
    const IntegralResult r = integrate_semiinfinite(integrand, rule);
    return {r.value, r.error_estimate, EstimateMethod::quadrature};
}

CapacityEstimate quadrature_capacity_m1(const ChannelConfig& cfg) {
    CapacityEstimate e = quadrature_capacity_m1(cfg, QuadratureRule::gauss_laguerre(64));
    if (e.uncertainty > 1e-7)
        e = quadrature_capacity_m1(cfg, QuadratureRule::adaptive(1e-9));
    return e;
}

CapacityEstimate mc_new_scheme_capacity(const ChannelConfig& cfg, const MonteCarloSpec& spec) {
    if (cfg.n_r != 1)
        throw unsupported_configuration("mc_new_scheme_capacity: requires n_r = 1");
    const double scale = cfg.power / (cfg.n_t * (1.0 + cfg.kappa));
    return run_mc(spec, [&cfg, scale](RngStream& rng) {
        const ComplexMatrix h = sample_h(cfg, rng);
        double w = 0.0;
        cdouble z = 0.0;
        for (int l = 0; l < cfg.n_t; ++l) {
            w += std::norm(h(0, l));
            z += h(0, l);
        }
        return std::log1p(scale * (w + cfg.kappa * std::norm(z)));
    });
}

GoodnessOfFit empirical_eigen_check(const ChannelConfig& cfg, const MonteCarloSpec& spec) {
    if (cfg.m() != 1)
        throw unsupported_configuration("empirical_eigen_check: requires min(n_t, n_r) = 1");
    const ScalarWishartDensity d(cfg.n(), cfg.kappa);

    // tabulated CDF of the scalar density on a uniform grid
    double w_max = static_cast<double>(d.n) + 10.0;
    while (scalar_wishart_pdf(w_max, d) > 1e-18) w_max += std::max(1.0, 0.25 * d.n);
    const int grid = 1 << 15;
    std::vector<double> cdf(grid + 1, 0.0);
    const double dw = w_max / grid;
    double prev = scalar_wishart_pdf(0.0, d);
    for (int i = 1; i <= grid; ++i) {
        const double cur = scalar_wishart_pdf(i * dw, d);
        cdf[i] = cdf[i - 1] + 0.5 * dw * (prev + cur);
        prev = cur;
    }
    auto cdf_at = [&](double w) -> double {
        if (w <= 0.0) return 0.0;
        if (w >= w_max) return 1.0;
        const double t = w / dw;
        const int i = static_cast<int>(t);
        const double frac = t - i;
        return cdf[i] + frac * (cdf[i + 1] - cdf[i]);
    };

    std::vector<double> samples;
    samples.reserve(spec.samples);
    const long base = spec.samples / spec.shards;
    const long remainder = spec.samples % spec.shards;
    for (int s = 0; s < spec.shards; ++s) {
        RngStream rng(spec.seed, static_cast<std::uint64_t>(s));
        const long count = base + (s < remainder ? 1 : 0);
        for (long i = 0; i < count; ++i) {
            const ComplexMatrix h = sample_h(cfg, rng);
            double w = 0.0;
            for (cdouble e : h.entries()) w += std::norm(e);
            samples.push_back(w);
        }
    }
    std::sort(samples.begin(), samples.end());

    const double n = static_cast<double>(samples.size());
    double ks = 0.0;
    for (size_t i = 0; i < samples.size(); ++i) {
        const double f = cdf_at(samples[i]);
        ks = std::max(ks, std::max(f - i / n, (i + 1) / n - f));
    }
    return {ks, spec.samples};
}

} // namespace ricap
