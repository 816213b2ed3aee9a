#ifndef RICAP_LINALG_HPP
#define RICAP_LINALG_HPP

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace ricap {

using cdouble = std::complex<double>;

/// Thrown when an iterative method fails to converge within its budget.
class convergence_error : public std::runtime_error {
public:
    explicit convergence_error(const std::string& what) : std::runtime_error(what) {}
};

/// Dense row-major complex matrix. Entries are validated finite on construction.
class ComplexMatrix {
public:
    ComplexMatrix(int rows, int cols, std::vector<cdouble> entries);
    static ComplexMatrix zero(int rows, int cols);
    static ComplexMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    cdouble operator()(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }
    cdouble& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
    const std::vector<cdouble>& entries() const { return data_; }

private:
    int rows_;
    int cols_;
    std::vector<cdouble> data_;
};

/// Hermitian matrix with full dense storage. The constructor checks
/// conjugate symmetry to 1e-12 relative tolerance and stores the exact
/// symmetrization (A + A^H)/2.
class HermitianMatrix {
public:
    explicit HermitianMatrix(const ComplexMatrix& a);
    HermitianMatrix(int dim, std::vector<cdouble> entries);
    static HermitianMatrix identity(int n);

    int dim() const { return dim_; }
    cdouble operator()(int i, int j) const { return data_[static_cast<size_t>(i) * dim_ + j]; }
    double trace() const;
    ComplexMatrix to_matrix() const;

private:
    void symmetrize_checked();
    int dim_;
    std::vector<cdouble> data_;
};

enum class GramSide { left, right };

/// H*H^H (left) or H^H*H (right); always positive semidefinite.
HermitianMatrix gram(const ComplexMatrix& h, GramSide side);

struct EigenDecomposition {
    std::vector<double> eigenvalues;   // descending
    ComplexMatrix eigenvectors;        // columns match eigenvalue order
};

/// Cyclic Jacobi eigendecomposition of a complex Hermitian matrix.
/// A = U diag(lambda) U^H with unitary U.
EigenDecomposition hermitian_eigen(const HermitianMatrix& a);

/// log det of a positive definite Hermitian matrix via Cholesky.
/// Throws std::domain_error when a pivot falls below 1e-12 times the
/// largest initial diagonal entry.
double logdet_posdef(const HermitianMatrix& a);

ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix adjoint(const ComplexMatrix& a);

} // namespace ricap

#endif
