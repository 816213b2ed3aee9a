#include "ricap/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace ricap {

namespace {

// Newton iteration on the Laguerre recurrence; standard initial guesses.
void laguerre_nodes(int n, std::vector<double>& x, std::vector<double>& w) {
    x.resize(n);
    w.resize(n);
    double z = 0.0;
    for (int i = 0; i < n; ++i) {
        if (i == 0) {
            z = 3.0 / (1.0 + 2.4 * n);
        } else if (i == 1) {
            z += 15.0 / (1.0 + 2.5 * n);
        } else {
            const double ai = i - 1;
            z += ((1.0 + 2.55 * ai) / (1.9 * ai)) * (z - x[i - 2]);
        }
        double p1 = 0.0, p2 = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            p1 = 1.0;
            p2 = 0.0;
            for (int j = 1; j <= n; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j - 1.0 - z) * p2 - (j - 1.0) * p3) / j;
            }
            const double pp = n * (p1 - p2) / z;
            const double z1 = z;
            z = z1 - p1 / pp;
            if (std::abs(z - z1) <= 1e-15 * std::max(1.0, z)) break;
        }
        // recompute derivative at the converged node
        p1 = 1.0;
        p2 = 0.0;
        for (int j = 1; j <= n; ++j) {
            const double p3 = p2;
            p2 = p1;
            p1 = ((2.0 * j - 1.0 - z) * p2 - (j - 1.0) * p3) / j;
        }
        const double pp = n * (p1 - p2) / z;
        x[i] = z;
        w[i] = -1.0 / (pp * n * p2);
    }
}

double gl_value(const std::function<double(double)>& f,
                const std::vector<double>& x, const std::vector<double>& w) {
    double s = 0.0;
    for (size_t i = 0; i < x.size(); ++i) s += w[i] * std::exp(x[i]) * f(x[i]);
    return s;
}

struct AdaptiveState {
    const std::function<double(double)>* g;
    double tol;
    double err_acc = 0.0;
    long evals = 0;
    bool budget_exceeded = false;
    static constexpr long max_evals = 2000000;
};

double eval_g(AdaptiveState& st, double t) {
    ++st.evals;
    if (st.evals > AdaptiveState::max_evals) st.budget_exceeded = true;
    return (*st.g)(t);
}

double simpson(double a, double fa, double m, double fm, double b, double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_rec(AdaptiveState& st, double a, double fa, double b, double fb,
                    double m, double fm, double whole, double tol, int depth) {
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = eval_g(st, lm);
    const double frm = eval_g(st, rm);
    const double left = simpson(a, fa, lm, flm, m, fm);
    const double right = simpson(m, fm, rm, frm, b, fb);
    const double delta = left + right - whole;
    if (depth <= 0 || st.budget_exceeded || std::abs(delta) <= 15.0 * tol) {
        if (depth <= 0 && std::abs(delta) > 15.0 * tol) st.budget_exceeded = true;
        st.err_acc += std::abs(delta) / 15.0;
        return left + right + delta / 15.0;
    }
    return adaptive_rec(st, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
           adaptive_rec(st, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

IntegralResult adaptive_value(const std::function<double(double)>& f, double tol) {
    // map x = t/(1-t) onto (0,1); the tail limit at t=1 is 0 for
    // e^{-x}-dominated integrands
    auto g = [&f](double t) -> double {
        if (t >= 1.0) return 0.0;
        const double tt = t <= 0.0 ? 1e-300 : t;
        const double om = 1.0 - tt;
        return f(tt / om) / (om * om);
    };
    std::function<double(double)> gf = g;
    AdaptiveState st{&gf, tol};
    const double a = 0.0, b = 1.0, m = 0.5;
    const double fa = eval_g(st, a), fb = eval_g(st, b), fm = eval_g(st, m);
    const double whole = simpson(a, fa, m, fm, b, fb);
    const double value = adaptive_rec(st, a, fa, b, fb, m, fm, whole, tol, 48);
    if (st.budget_exceeded)
        throw quadrature_error("integrate_semiinfinite: adaptive rule did not converge", value);
    return {value, st.err_acc};
}

} // namespace

QuadratureRule QuadratureRule::gauss_laguerre(int order) {
    if (order < 1)
        throw std::invalid_argument("QuadratureRule: order must be positive");
    QuadratureRule r;
    r.kind_ = QuadratureKind::gauss_laguerre;
    r.order_ = order;
    laguerre_nodes(order, r.nodes_, r.weights_);
    double wsum = 0.0;
    for (int i = 0; i < order; ++i) {
        if (!(r.weights_[i] > 0.0))
            throw std::runtime_error("QuadratureRule: nonpositive weight");
        if (i > 0 && !(r.nodes_[i] > r.nodes_[i - 1]))
            throw std::runtime_error("QuadratureRule: nodes not increasing");
        wsum += r.weights_[i];
    }
    if (std::abs(wsum - 1.0) > 1e-12)
        throw std::runtime_error("QuadratureRule: weights do not sum to 1");
    return r;
}

QuadratureRule QuadratureRule::adaptive(double tolerance) {
    if (!(tolerance > 0.0) || tolerance > 1e-2)
        throw std::invalid_argument("QuadratureRule: tolerance must be in (0, 1e-2]");
    QuadratureRule r;
    r.kind_ = QuadratureKind::adaptive;
    r.tolerance_ = tolerance;
    return r;
}

IntegralResult integrate_semiinfinite(const std::function<double(double)>& f,
                                      const QuadratureRule& rule) {
    if (rule.kind() == QuadratureKind::adaptive)
        return adaptive_value(f, rule.tolerance());
    const double v1 = gl_value(f, rule.nodes(), rule.weights());
    const QuadratureRule finer = QuadratureRule::gauss_laguerre(rule.order() + 32);
    const double v2 = gl_value(f, finer.nodes(), finer.weights());
    return {v2, std::abs(v2 - v1)};
}

IntegralResult integrate_semiinfinite(const std::function<double(double)>& f) {
    const IntegralResult gl = integrate_semiinfinite(f, QuadratureRule::gauss_laguerre(64));
    if (gl.error_estimate <= 1e-7) return gl;
    return integrate_semiinfinite(f, QuadratureRule::adaptive(1e-9));
}

} // namespace ricap
