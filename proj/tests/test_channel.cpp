#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "oracles.hpp"
#include "ricap/channel.hpp"
#include "ricap/quadrature.hpp"

using namespace ricap;

TEST_CASE("rng streams are reproducible and distinct") {
    RngStream a(42, 0), b(42, 0), c(42, 1);
    bool all_equal = true;
    bool any_cross_equal = false;
    for (int i = 0; i < 64; ++i) {
        const auto x = a.next_u64();
        all_equal = all_equal && x == b.next_u64();
        any_cross_equal = any_cross_equal || x == c.next_u64();
    }
    CHECK(all_equal);
    CHECK_FALSE(any_cross_equal);
}

TEST_CASE("rng uniform and gaussian moments") {
    RngStream rng(7, 3);
    double usum = 0.0, gsum = 0.0, gsq = 0.0;
    const int n = 200000;
    for (int i = 0; i < n; ++i) {
        const double u = rng.uniform();
        CHECK(u > 0.0);
        CHECK(u <= 1.0);
        usum += u;
        const auto [x, y] = rng.gaussian_pair();
        gsum += x + y;
        gsq += x * x + y * y;
    }
    CHECK(usum / n == doctest::Approx(0.5).epsilon(5e-3));
    CHECK(gsum / (2.0 * n) == doctest::Approx(0.0).scale(1.0).epsilon(5e-3));
    CHECK(gsq / (2.0 * n) == doctest::Approx(1.0).epsilon(5e-3));
}

TEST_CASE("channel config validation and normalization") {
    CHECK_THROWS_AS(ChannelConfig(0, 1, 0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(ChannelConfig(1, 0, 0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(ChannelConfig(1, 1, -0.5, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(ChannelConfig(1, 1, 0.0, -1.0), std::invalid_argument);

    for (double kappa : {0.0, 0.5, 1.0, 10.0, 1e6}) {
        const ChannelConfig cfg(2, 3, kappa, 1.0);
        CHECK(cfg.mu() * cfg.mu() + cfg.two_sigma_sq() == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(cfg.m() == 2);
        CHECK(cfg.n() == 3);
    }
}

TEST_CASE("sample_h first and second moments") {
    const ChannelConfig cfg(2, 2, 4.0, 1.0);
    RngStream rng(123, 0);
    const int trials = 50000;
    cdouble mean = 0.0;
    double power = 0.0;
    for (int t = 0; t < trials; ++t) {
        const ComplexMatrix h = sample_h(cfg, rng);
        for (cdouble z : h.entries()) {
            mean += z;
            power += std::norm(z);
        }
    }
    const double entries = 4.0 * trials;
    const double want_re = cfg.mu() / std::sqrt(2.0);
    CHECK((mean / entries).real() == doctest::Approx(want_re).epsilon(2e-2));
    CHECK((mean / entries).imag() == doctest::Approx(want_re).epsilon(2e-2));
    // E|h|^2 = mu^2 + 2 sigma^2 = 1 under the normalization
    CHECK(power / entries == doctest::Approx(1.0).epsilon(5e-3));
}

TEST_CASE("rician envelope pdf") {
    CHECK(rician_envelope_pdf(0.0, 2.0) == 0.0);
    // kappa = 0 reduces to Rayleigh with E r^2 = 1
    CHECK(rician_envelope_pdf(0.5, 0.0) ==
          doctest::Approx(2.0 * 0.5 * std::exp(-0.25)).epsilon(1e-13));

    for (double kappa : {0.0, 1.0, 10.0}) {
        const auto r = integrate_semiinfinite(
            [kappa](double x) { return rician_envelope_pdf(x, kappa); });
        CHECK(r.value == doctest::Approx(1.0).epsilon(1e-8));
    }
}

TEST_CASE("upsilon structure") {
    const ChannelConfig cfg(3, 2, 4.0, 1.0);
    const HermitianMatrix u = upsilon(cfg);
    CHECK(u.dim() == 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(u(i, j).real() == doctest::Approx(i == j ? 1.0 : 0.8).epsilon(1e-14));

    // eigenvalues (1 + N_T kappa)/(1 + kappa) and 1/(1 + kappa)
    const auto [vals, vecs] = hermitian_eigen(u);
    CHECK(vals[0] == doctest::Approx(13.0 / 5.0).epsilon(1e-12));
    CHECK(vals[1] == doctest::Approx(0.2).epsilon(1e-12));
    CHECK(vals[2] == doctest::Approx(0.2).epsilon(1e-12));
}

TEST_CASE("covariance schemes") {
    const ChannelConfig cfg(4, 1, 3.0, 2.0);

    const auto id = CovarianceScheme::scaled_identity(cfg);
    CHECK(id.tag() == CovarianceTag::scaled_identity);
    CHECK(id.matrix().trace() == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(std::abs(id.matrix()(0, 1)) == 0.0);
    CHECK(id.matrix()(0, 0).real() == doctest::Approx(0.5).epsilon(1e-14));

    // Q^kappa = P/(N_T(1+k)) (I + k Psi); trace still P
    const auto rw = CovarianceScheme::rician_weighted(cfg);
    CHECK(rw.tag() == CovarianceTag::rician_weighted);
    CHECK(rw.matrix().trace() == doctest::Approx(2.0).epsilon(1e-12));
    const double scale = 2.0 / (4.0 * (1.0 + 3.0));
    CHECK(rw.matrix()(0, 0).real() == doctest::Approx(scale * 4.0).epsilon(1e-13));
    CHECK(rw.matrix()(0, 1).real() == doctest::Approx(scale * 3.0).epsilon(1e-13));

    // kappa = 0 collapses Q^kappa onto the scaled identity
    const ChannelConfig ray(4, 1, 0.0, 2.0);
    const auto rw0 = CovarianceScheme::rician_weighted(ray);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            CHECK(std::abs(rw0.matrix()(i, j) - (i == j ? 0.5 : 0.0)) < 1e-15);

    // explicit matrices must satisfy the power constraint and be PSD
    CHECK_THROWS_AS(
        CovarianceScheme::explicit_matrix(cfg, HermitianMatrix(4, std::vector<cdouble>{
            3.0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0})),
        std::invalid_argument);
    const auto ok = CovarianceScheme::explicit_matrix(
        cfg, HermitianMatrix(4, std::vector<cdouble>{
                 2.0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}));
    CHECK(ok.tag() == CovarianceTag::explicit_matrix);
    CHECK(ok.matrix().trace() == doctest::Approx(2.0).epsilon(1e-12));
}
