// Independent oracles used to freeze expected values. These deliberately
// avoid the library's own evaluation paths: direct series in extended
// precision, asymptotic expansions, and closed-form identities.
#ifndef RICAP_TESTS_ORACLES_HPP
#define RICAP_TESTS_ORACLES_HPP

#include <cmath>
#include <vector>

namespace oracles {

// I_nu(x) by direct power series in long double (moderate arguments only).
inline long double bessel_i_series(long double nu, long double x, int terms = 60) {
    long double sum = 0.0L;
    long double half = 0.5L * x;
    for (int k = 0; k < terms; ++k) {
        long double t = std::pow(half, nu + 2 * k) /
                        (std::tgammal(k + 1.0L) * std::tgammal(nu + k + 1.0L));
        sum += t;
    }
    return sum;
}

// ln I_nu(x) by the large-argument expansion, independent coefficients.
inline long double log_bessel_i_asymptotic(long double nu, long double x, int terms = 12) {
    const long double mu = 4.0L * nu * nu;
    long double term = 1.0L;
    long double s = 1.0L;
    for (int k = 1; k <= terms; ++k) {
        term *= -(mu - (2.0L * k - 1.0L) * (2.0L * k - 1.0L)) / (8.0L * k * x);
        s += term;
    }
    return x - 0.5L * std::log(2.0L * 3.14159265358979323846264338328L * x) + std::log(s);
}

// E1(x) for small x by the convergent series -gamma - ln x + sum (-1)^{k+1} x^k / (k k!).
inline long double exponential_integral_e1(long double x, int terms = 60) {
    const long double euler_gamma = 0.57721566490153286060651209008L;
    long double sum = -euler_gamma - std::log(x);
    long double term = 1.0L;
    for (int k = 1; k <= terms; ++k) {
        term *= -x / k;
        sum -= term / k;
    }
    return sum;
}

// 0F1~(m; y) = sum_k y^k / (k! (m)_k) by direct series in long double.
inline long double hyp0f1_series(int m, long double y, int terms = 200) {
    long double sum = 1.0L;
    long double term = 1.0L;
    for (int k = 1; k <= terms; ++k) {
        term *= y / (static_cast<long double>(k) * (m + k - 1.0L));
        sum += term;
        if (std::abs(term) < 1e-25L * std::abs(sum)) break;
    }
    return sum;
}

} // namespace oracles

#endif
