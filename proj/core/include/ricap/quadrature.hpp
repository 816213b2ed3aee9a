#ifndef RICAP_QUADRATURE_HPP
#define RICAP_QUADRATURE_HPP

#include <functional>
#include <vector>

#include "ricap/linalg.hpp"  // convergence_error

namespace ricap {

/// Non-convergence carrying the best value computed so far.
class quadrature_error : public convergence_error {
public:
    quadrature_error(const std::string& what, double best)
        : convergence_error(what), best_estimate(best) {}
    double best_estimate;
};

enum class QuadratureKind { gauss_laguerre, adaptive };

/// Either a Gauss-Laguerre rule (nodes/weights for the e^{-x} weight on
/// [0, inf)) or an adaptive subdivision rule with a target tolerance.
class QuadratureRule {
public:
    static QuadratureRule gauss_laguerre(int order);
    static QuadratureRule adaptive(double tolerance);

    QuadratureKind kind() const { return kind_; }
    int order() const { return order_; }
    double tolerance() const { return tolerance_; }
    const std::vector<double>& nodes() const { return nodes_; }
    const std::vector<double>& weights() const { return weights_; }

private:
    QuadratureRule() = default;
    QuadratureKind kind_{};
    int order_ = 0;
    double tolerance_ = 0.0;
    std::vector<double> nodes_;
    std::vector<double> weights_;
};

struct IntegralResult {
    double value;
    double error_estimate;
};

/// Estimate of integral_0^inf f(x) dx. Gauss-Laguerre rules factor out the
/// e^{-x} weight analytically and report the difference against the rule
/// 32 orders higher as the error estimate; the adaptive rule halves
/// intervals until local error drops below the tolerance.
IntegralResult integrate_semiinfinite(const std::function<double(double)>& f,
                                      const QuadratureRule& rule);

/// Default policy: Gauss-Laguerre order 64, falling back to the adaptive
/// rule at tolerance 1e-9 when the order-64 vs order-96 difference
/// exceeds 1e-7.
IntegralResult integrate_semiinfinite(const std::function<double(double)>& f);

} // namespace ricap

#endif
