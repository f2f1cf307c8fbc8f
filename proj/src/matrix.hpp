#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace qtl {

using Complex = std::complex<double>;

// Max-entry tolerance below which a matrix counts as Hermitian. Well above
// double-precision noise for the 27x27 problems handled here.
inline constexpr double kHermitianTol = 1e-10;

// Dense row-major complex matrix, the universal numeric carrier. Everything
// in scope fits in 27x27, so there is no sparse or blocked storage.
class ComplexMatrix {
public:
    ComplexMatrix(std::size_t rows, std::size_t cols); // zero-initialized

    static ComplexMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    Complex& operator()(std::size_t r, std::size_t c) noexcept {
        return data_[r * cols_ + c];
    }
    const Complex& operator()(std::size_t r, std::size_t c) const noexcept {
        return data_[r * cols_ + c];
    }

    Complex* data() noexcept { return data_.data(); }
    const Complex* data() const noexcept { return data_.data(); }
    std::span<const Complex> entries() const noexcept { return data_; }

    bool all_finite() const noexcept;

    ComplexMatrix& operator+=(const ComplexMatrix& other);
    ComplexMatrix& operator-=(const ComplexMatrix& other);
    ComplexMatrix& operator*=(Complex scale);

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) {
        a += b;
        return a;
    }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) {
        a -= b;
        return a;
    }
    friend ComplexMatrix operator*(Complex scale, ComplexMatrix m) {
        m *= scale;
        return m;
    }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Complex> data_;
};

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix adjoint(const ComplexMatrix& a);

Complex trace(const ComplexMatrix& a);
double max_abs(const ComplexMatrix& a);
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
double frobenius_norm(const ComplexMatrix& a);

/// Max-entry |a - a^dagger|; requires a square input.
double hermiticity_residual(const ComplexMatrix& a);

struct HermitianEig {
    std::vector<double> eigenvalues; // ascending
    ComplexMatrix eigenvectors;      // columns, unitary
};

/// Eigendecomposition of a Hermitian matrix (checked against kHermitianTol).
HermitianEig hermitian_eig(const ComplexMatrix& a);

/// Singular values in descending order, length min(rows, cols).
std::vector<double> singular_values(const ComplexMatrix& a);

/// Trace norm: sum of singular values.
double trace_norm(const ComplexMatrix& a);

/// exp(-i h t) for Hermitian h, computed through the eigendecomposition.
ComplexMatrix expm_hermitian_generator(const ComplexMatrix& h, double t);

} // namespace qtl
