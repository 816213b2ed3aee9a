// End-to-end acceptance checks: closed-form identities, cross-method
// agreement and reproducibility at desk scale. One line per criterion;
// exit status is nonzero if any fails.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "ricap/special.hpp"
#include "ricap/sweep.hpp"

using namespace ricap;

namespace {

int failures = 0;

void report(int number, const char* name, bool ok) {
    std::printf("%s  [%2d] %s\n", ok ? "PASS" : "FAIL", number, name);
    if (!ok) ++failures;
}

double stderr_of(const CapacityEstimate& e, double confidence = 0.95) {
    return e.uncertainty / normal_quantile_two_sided(confidence);
}

// 1. capacity_upper_bound collapses to the published special cases.
bool special_case_collapse() {
    const std::vector<double> kappas{0.0, 0.5, 1.0, 10.0};
    const std::vector<double> powers{0.1, 1.0, 10.0};
    const std::vector<int> antennas{1, 2, 4, 8};
    for (double p : powers) {
        for (int n : antennas) {
            // kappa = 0: N_T ln(1 + N_R P / N_T)
            for (int nr : antennas) {
                const double got = capacity_upper_bound(ChannelConfig(n, nr, 0.0, p)).nats;
                if (std::abs(got - n * std::log1p(static_cast<double>(nr) * p / n)) > 1e-12)
                    return false;
            }
            for (double k : kappas) {
                // N_T = 1: ln(1 + N_R P) for every kappa
                if (std::abs(capacity_upper_bound(ChannelConfig(1, n, k, p)).nats -
                             std::log1p(n * p)) > 1e-12)
                    return false;

                // N_R = 1 display
                {
                    const double theta = k * (1.0 + k) / (1.0 + n * k);
                    const double per = p / n;
                    const double plus = std::max(per - theta, 0.0);
                    const double want =
                        std::log(1.0 + (1.0 + n * k) / (1.0 + k) *
                                           (std::min(per, theta) * n + plus)) +
                        (n - 1) * std::log(1.0 + plus / (1.0 + k));
                    if (std::abs(capacity_upper_bound(ChannelConfig(n, 1, k, p)).nats - want) >
                        1e-12)
                        return false;
                }

                // N_R = N_T = n display
                {
                    const double theta = k * (1.0 + k) / (n * (1.0 + n * k));
                    const double plus = std::max(p / n - theta, 0.0);
                    const double want =
                        std::log(1.0 + (1.0 + n * k) / (1.0 + k) *
                                           (std::min(p / n, theta) * n + plus) * n) +
                        (n - 1) * std::log(1.0 + n * plus / (1.0 + k));
                    if (std::abs(capacity_upper_bound(ChannelConfig(n, n, k, p)).nats - want) >
                        1e-12)
                        return false;
                }
            }
        }
    }
    return true;
}

// 2. kappa -> infinity: the channel hardens onto ln(1 + N_R N_T P).
bool deterministic_limit() {
    for (const auto& [nt, nr] : {std::pair{2, 2}, std::pair{4, 1}}) {
        const ChannelConfig cfg(nt, nr, 1e6, 1.0);
        const double exact = deterministic_capacity(cfg).nats;
        const auto mc = mc_ergodic_capacity(cfg, CovarianceScheme::rician_weighted(cfg),
                                            MonteCarloSpec(100000, 31, 4));
        if (std::abs(mc.nats - exact) > 1e-3) return false;
    }
    return true;
}

// 3. Rayleigh quadrature vs Monte Carlo, plus the scalar closed form e E1(1).
bool rayleigh_cross_check() {
    for (int nr : {1, 2, 4, 8}) {
        const ChannelConfig cfg(1, nr, 0.0, 10.0);
        const auto quad = quadrature_capacity_m1(cfg);
        const auto mc = mc_ergodic_capacity(cfg, CovarianceScheme::scaled_identity(cfg),
                                            MonteCarloSpec(1000000, 18, 4));
        if (std::abs(quad.nats - mc.nats) > std::max(3.0 * stderr_of(mc), 1e-3)) return false;
    }
    const double e_e1_1 = 0.596347362323194;  // e * E1(1)
    return std::abs(quadrature_capacity_m1(ChannelConfig(1, 1, 0.0, 1.0)).nats - e_e1_1) < 1e-6;
}

// 4. Receive-diversity curves: ordered in kappa, capped by ln(1 + N_R P),
//    converging toward the cap as N_R grows.
bool receive_curves() {
    const double p = 10.0;
    for (int nr = 1; nr <= 4; ++nr) {
        const double c0 = quadrature_capacity_m1(ChannelConfig(1, nr, 0.0, p)).nats;
        const double c1 = quadrature_capacity_m1(ChannelConfig(1, nr, 1.0, p)).nats;
        const double c10 = quadrature_capacity_m1(ChannelConfig(1, nr, 10.0, p)).nats;
        if (!(c10 > c1 && c1 > c0)) return false;
        if (!(c10 < std::log1p(nr * p))) return false;
    }
    for (double k : {0.0, 1.0, 10.0}) {
        const double gap1 =
            std::log1p(p) - quadrature_capacity_m1(ChannelConfig(1, 1, k, p)).nats;
        const double gap8 =
            std::log1p(8.0 * p) - quadrature_capacity_m1(ChannelConfig(1, 8, k, p)).nats;
        if (!(gap8 < gap1)) return false;
    }
    return true;
}

// 5. Transmit-side curves: line of sight helps, and the Jensen bound is
//    loose for a single receive antenna.
bool transmit_curves() {
    const double p = 10.0;
    for (int nt : {2, 4}) {
        const double c0 = quadrature_capacity_m1(ChannelConfig(nt, 1, 0.0, p)).nats;
        for (double k : {1.0, 10.0}) {
            const double ck = quadrature_capacity_m1(ChannelConfig(nt, 1, k, p)).nats;
            if (!(ck > c0)) return false;
        }
    }
    const ChannelConfig cfg(8, 1, 10.0, p);
    return capacity_upper_bound(cfg).nats - quadrature_capacity_m1(cfg).nats > 0.5;
}

// 6. Many-transmit-antenna asymptote, monotone decreasing in kappa.
bool asymptote() {
    double prev = 1e300;
    for (double k : {0.0, 1.0, 10.0}) {
        const ChannelConfig cfg(256, 2, k, 1.0);
        const double limit = asymptotic_capacity_large_nt(2, k, 1.0).nats;
        const auto mc = mc_ergodic_capacity(cfg, CovarianceScheme::scaled_identity(cfg),
                                            MonteCarloSpec(100000, 23, 8));
        if (std::abs(mc.nats - limit) > 0.02 * limit) return false;
        if (!(limit < prev)) return false;
        prev = limit;
    }
    return true;
}

// 7. Rician-weighted covariance capacity sits inside its bracket; the
//    bracket closes at large kappa and many transmit antennas.
bool new_scheme_bracket() {
    for (double k : {1.0, 10.0}) {
        for (int nt : {1, 2, 4, 8, 16}) {
            for (double p : {1.0, 10.0}) {
                const ChannelConfig cfg(nt, 1, k, p);
                const auto mc = mc_new_scheme_capacity(cfg, MonteCarloSpec(200000, 41, 4));
                const double lb =
                    new_scheme_lower_bound(cfg, QuadratureRule::gauss_laguerre(96)).nats;
                const double ub = new_scheme_upper_bound(cfg).nats;
                const double slack = 3.0 * stderr_of(mc);
                if (!(mc.nats >= lb - slack && mc.nats <= ub + slack)) return false;
                if (k == 10.0 && nt >= 8 && !(ub - lb < 0.15)) return false;
            }
        }
    }
    return true;
}

// 8. Large-kappa approximation tracks the upper bound.
bool large_kappa_approx() {
    for (int nt : {2, 8}) {
        const ChannelConfig cfg(nt, 1, 100.0, 10.0);
        if (std::abs(new_scheme_large_kappa_approx(cfg).nats -
                     new_scheme_upper_bound(cfg).nats) >= 0.02)
            return false;
    }
    return true;
}

// 9. The Rician-weighted covariance beats isotropic signalling.
bool scheme_superiority() {
    const ChannelConfig cfg(8, 1, 10.0, 10.0);
    const auto ns = mc_new_scheme_capacity(cfg, MonteCarloSpec(200000, 53, 4));
    const auto id = mc_ergodic_capacity(cfg, CovarianceScheme::scaled_identity(cfg),
                                        MonteCarloSpec(200000, 53, 4));
    const double combined = 3.0 * (stderr_of(ns) + stderr_of(id));
    return ns.nats - id.nats > 0.3 + combined;
}

// 10. Distribution-level checks on the scalar non-central Wishart machinery.
bool distribution_checks() {
    for (int n : {1, 2, 4}) {
        for (double k : {0.0, 1.0, 10.0}) {
            const ScalarWishartDensity d(n, k);
            const auto mass =
                integrate_semiinfinite([&d](double w) { return scalar_wishart_pdf(w, d); });
            if (std::abs(mass.value - 1.0) > 1e-8) return false;
            const auto fit = empirical_eigen_check(ChannelConfig(1, n, k, 1.0),
                                                   MonteCarloSpec(100000, 61, 4));
            if (!(fit.ks_statistic < 0.01)) return false;
        }
    }

    // 0F1~ against a direct long double series
    for (int m : {1, 2, 3, 5}) {
        for (double y : {0.1, 1.0, 5.0, 20.0}) {
            long double sum = 1.0L, term = 1.0L;
            for (int j = 1; j <= 300; ++j) {
                term *= y / (static_cast<long double>(j) * (m + j - 1.0L));
                sum += term;
            }
            const double want = static_cast<double>(std::log(sum));
            if (std::abs(hyp0f1_scalar(m, y) - want) > 1e-10) return false;
        }
    }

    // psi -> 1 as kappa -> 0
    for (int n : {1, 2, 4})
        for (double w : {0.1, 1.0, 5.0})
            if (std::abs(psi_factor(w, n, 1e-8) - 1.0) > 1e-6) return false;
    return true;
}

// 11. Identical seed and shard count: byte-identical CSV from the CLI.
bool determinism() {
    const std::string cli = RICAP_CLI_PATH;
    const std::string dir = "acceptance_tmp";
    std::filesystem::create_directories(dir);
    auto run = [&](const std::string& path) {
        const std::string cmd = cli +
                                " --nt 2 --nr 2 --kappa 1 --snr-db 10 --samples 20000"
                                " --seed 77 --shards 4 --out " +
                                path +
                                " sweep --variable kappa --grid 0,1,10"
                                " --methods mc_identity,upper_bound";
        return std::system(cmd.c_str()) == 0;
    };
    const std::string a = dir + "/a.csv", b = dir + "/b.csv";
    if (!run(a) || !run(b)) return false;
    auto slurp = [](const std::string& path) {
        std::ifstream f(path, std::ios::binary);
        std::ostringstream ss;
        ss << f.rdbuf();
        return ss.str();
    };
    const std::string ca = slurp(a), cb = slurp(b);
    return !ca.empty() && ca == cb;
}

} // namespace

int main() {
    report(1, "special-case collapse of the Jensen bound", special_case_collapse());
    report(2, "deterministic limit at kappa = 1e6", deterministic_limit());
    report(3, "Rayleigh quadrature vs Monte Carlo cross-check", rayleigh_cross_check());
    report(4, "receive-diversity curve shapes", receive_curves());
    report(5, "transmit-side curve shapes and loose bound", transmit_curves());
    report(6, "many-antenna asymptote within 2%", asymptote());
    report(7, "Rician-weighted covariance bracket", new_scheme_bracket());
    report(8, "large-kappa approximation", large_kappa_approx());
    report(9, "Rician-weighted covariance superiority", scheme_superiority());
    report(10, "distribution-level checks", distribution_checks());
    report(11, "byte-identical CSV under a fixed seed", determinism());
    if (failures) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all 11 criteria passed\n");
    return 0;
}
