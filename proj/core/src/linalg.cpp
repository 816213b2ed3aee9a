#include "ricap/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace ricap {

namespace {

bool finite(cdouble z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

} // namespace

ComplexMatrix::ComplexMatrix(int rows, int cols, std::vector<cdouble> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (rows <= 0 || cols <= 0)
        throw std::invalid_argument("ComplexMatrix: dimensions must be positive");
    if (data_.size() != static_cast<size_t>(rows) * cols)
        throw std::invalid_argument("ComplexMatrix: entry count does not match dimensions");
    for (cdouble z : data_)
        if (!finite(z))
            throw std::invalid_argument("ComplexMatrix: non-finite entry");
}

ComplexMatrix ComplexMatrix::zero(int rows, int cols) {
    return ComplexMatrix(rows, cols, std::vector<cdouble>(static_cast<size_t>(rows) * cols));
}

ComplexMatrix ComplexMatrix::identity(int n) {
    ComplexMatrix m = zero(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

HermitianMatrix::HermitianMatrix(const ComplexMatrix& a)
    : dim_(a.rows()), data_(a.entries()) {
    if (a.rows() != a.cols())
        throw std::invalid_argument("HermitianMatrix: matrix must be square");
    symmetrize_checked();
}

HermitianMatrix::HermitianMatrix(int dim, std::vector<cdouble> entries)
    : dim_(dim), data_(std::move(entries)) {
    if (dim <= 0)
        throw std::invalid_argument("HermitianMatrix: dimension must be positive");
    if (data_.size() != static_cast<size_t>(dim) * dim)
        throw std::invalid_argument("HermitianMatrix: entry count does not match dimension");
    for (cdouble z : data_)
        if (!finite(z))
            throw std::invalid_argument("HermitianMatrix: non-finite entry");
    symmetrize_checked();
}

void HermitianMatrix::symmetrize_checked() {
    double scale = 0.0;
    for (cdouble z : data_) scale = std::max(scale, std::abs(z));
    const double tol = 1e-12 * std::max(scale, 1.0);
    for (int i = 0; i < dim_; ++i) {
        for (int j = i; j < dim_; ++j) {
            cdouble a = data_[static_cast<size_t>(i) * dim_ + j];
            cdouble b = data_[static_cast<size_t>(j) * dim_ + i];
            if (std::abs(a - std::conj(b)) > tol)
                throw std::invalid_argument("HermitianMatrix: not conjugate-symmetric");
            cdouble s = 0.5 * (a + std::conj(b));
            if (i == j) s = cdouble(s.real(), 0.0);
            data_[static_cast<size_t>(i) * dim_ + j] = s;
            data_[static_cast<size_t>(j) * dim_ + i] = std::conj(s);
        }
    }
}

HermitianMatrix HermitianMatrix::identity(int n) {
    std::vector<cdouble> e(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i) e[static_cast<size_t>(i) * n + i] = 1.0;
    return HermitianMatrix(n, std::move(e));
}

double HermitianMatrix::trace() const {
    double t = 0.0;
    for (int i = 0; i < dim_; ++i) t += (*this)(i, i).real();
    return t;
}

ComplexMatrix HermitianMatrix::to_matrix() const {
    return ComplexMatrix(dim_, dim_, data_);
}

HermitianMatrix gram(const ComplexMatrix& h, GramSide side) {
    const int m = side == GramSide::left ? h.rows() : h.cols();
    const int k = side == GramSide::left ? h.cols() : h.rows();
    std::vector<cdouble> g(static_cast<size_t>(m) * m);
    for (int i = 0; i < m; ++i) {
        for (int j = i; j < m; ++j) {
            cdouble s = 0.0;
            for (int l = 0; l < k; ++l) {
                cdouble a = side == GramSide::left ? h(i, l) : h(l, i);
                cdouble b = side == GramSide::left ? h(j, l) : h(l, j);
                s += a * std::conj(b);
            }
            g[static_cast<size_t>(i) * m + j] = s;
            g[static_cast<size_t>(j) * m + i] = std::conj(s);
        }
    }
    return HermitianMatrix(m, std::move(g));
}

EigenDecomposition hermitian_eigen(const HermitianMatrix& a) {
    const int n = a.dim();
    std::vector<cdouble> m(a.to_matrix().entries());
    auto at = [&](int i, int j) -> cdouble& { return m[static_cast<size_t>(i) * n + j]; };

    ComplexMatrix v = ComplexMatrix::identity(n);

    double fro = 0.0;
    for (cdouble z : m) fro += std::norm(z);
    fro = std::sqrt(fro);
    const double stop = 1e-14 * std::max(fro, 1e-300);

    const int max_sweeps = 100;
    int sweep = 0;
    for (; sweep < max_sweeps; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off += std::norm(at(p, q));
        if (std::sqrt(2.0 * off) <= stop) break;

        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const cdouble apq = at(p, q);
                const double mag = std::abs(apq);
                if (mag <= stop / (n * n + 1.0)) continue;

                // Phase the pivot real, then a real Jacobi rotation.
                const cdouble f = apq / mag;
                const double app = at(p, p).real();
                const double aqq = at(q, q).real();
                const double tau = (aqq - app) / (2.0 * mag);
                const double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const cdouble jqp = -s * std::conj(f);
                const cdouble jqq = c * std::conj(f);

                for (int k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    const cdouble akp = at(k, p);
                    const cdouble akq = at(k, q);
                    at(k, p) = c * akp + jqp * akq;
                    at(k, q) = s * akp + jqq * akq;
                    at(p, k) = std::conj(at(k, p));
                    at(q, k) = std::conj(at(k, q));
                }
                at(p, p) = app - t * mag;
                at(q, q) = aqq + t * mag;
                at(p, q) = 0.0;
                at(q, p) = 0.0;

                for (int k = 0; k < n; ++k) {
                    const cdouble vkp = v(k, p);
                    const cdouble vkq = v(k, q);
                    v(k, p) = c * vkp + jqp * vkq;
                    v(k, q) = s * vkp + jqq * vkq;
                }
            }
        }
    }
    if (sweep == max_sweeps)
        throw convergence_error("hermitian_eigen: Jacobi sweeps did not converge");

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int i, int j) { return at(i, i).real() > at(j, j).real(); });

    std::vector<double> vals(n);
    ComplexMatrix vecs = ComplexMatrix::zero(n, n);
    for (int j = 0; j < n; ++j) {
        vals[j] = at(order[j], order[j]).real();
        for (int i = 0; i < n; ++i) vecs(i, j) = v(i, order[j]);
    }
    return {std::move(vals), std::move(vecs)};
}

double logdet_posdef(const HermitianMatrix& a) {
    const int n = a.dim();
    double max_diag = 0.0;
    for (int i = 0; i < n; ++i) max_diag = std::max(max_diag, a(i, i).real());
    const double pivot_floor = 1e-12 * max_diag;

    std::vector<cdouble> l(static_cast<size_t>(n) * n);
    auto lat = [&](int i, int j) -> cdouble& { return l[static_cast<size_t>(i) * n + j]; };

    double logdet = 0.0;
    for (int j = 0; j < n; ++j) {
        double d = a(j, j).real();
        for (int k = 0; k < j; ++k) d -= std::norm(lat(j, k));
        if (!(d > pivot_floor) || !(d > 0.0))
            throw std::domain_error("logdet_posdef: matrix is not positive definite");
        const double ljj = std::sqrt(d);
        lat(j, j) = ljj;
        logdet += 2.0 * std::log(ljj);
        for (int i = j + 1; i < n; ++i) {
            cdouble s = a(i, j);
            for (int k = 0; k < j; ++k) s -= lat(i, k) * std::conj(lat(j, k));
            lat(i, j) = s / ljj;
        }
    }
    return logdet;
}

ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("multiply: dimension mismatch");
    ComplexMatrix c = ComplexMatrix::zero(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const cdouble aik = a(i, k);
            for (int j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

ComplexMatrix adjoint(const ComplexMatrix& a) {
    ComplexMatrix c = ComplexMatrix::zero(a.cols(), a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) c(j, i) = std::conj(a(i, j));
    return c;
}

} // namespace ricap
