#include "matrix.hpp"

#include "errors.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <string>

namespace qtl {

namespace {

using EigenRowMajor =
    Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

Eigen::Map<const EigenRowMajor> view(const ComplexMatrix& m) {
    return {m.data(), static_cast<Eigen::Index>(m.rows()),
            static_cast<Eigen::Index>(m.cols())};
}

Eigen::Map<EigenRowMajor> view(ComplexMatrix& m) {
    return {m.data(), static_cast<Eigen::Index>(m.rows()),
            static_cast<Eigen::Index>(m.cols())};
}

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b,
                        const char* op) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw ShapeError(std::string(op) + ": shapes (" +
                         std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                         ") and (" + std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()) + ") differ");
    }
}

} // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Complex{0.0, 0.0}) {
    if (rows == 0 || cols == 0) {
        throw ShapeError("ComplexMatrix: dimensions must be positive");
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = Complex{1.0, 0.0};
    }
    return m;
}

bool ComplexMatrix::all_finite() const noexcept {
    for (const Complex& z : data_) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            return false;
        }
    }
    return true;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
    require_same_shape(*this, other, "operator+=");
    for (std::size_t i = 0; i < data_.size(); ++i) {
        data_[i] += other.data_[i];
    }
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
    require_same_shape(*this, other, "operator-=");
    for (std::size_t i = 0; i < data_.size(); ++i) {
        data_[i] -= other.data_[i];
    }
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
    for (Complex& z : data_) {
        z *= scale;
    }
    return *this;
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) {
        throw ShapeError("matmul: inner dimensions " + std::to_string(a.cols()) +
                         " and " + std::to_string(b.rows()) + " differ");
    }
    ComplexMatrix out(a.rows(), b.cols());
    view(out).noalias() = view(a) * view(b);
    return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Complex aij = a(i, j);
            for (std::size_t k = 0; k < b.rows(); ++k) {
                for (std::size_t l = 0; l < b.cols(); ++l) {
                    out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
                }
            }
        }
    }
    return out;
}

ComplexMatrix adjoint(const ComplexMatrix& a) {
    ComplexMatrix out(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            out(j, i) = std::conj(a(i, j));
        }
    }
    return out;
}

Complex trace(const ComplexMatrix& a) {
    if (!a.is_square()) {
        throw ShapeError("trace: matrix must be square");
    }
    Complex sum{0.0, 0.0};
    for (std::size_t i = 0; i < a.rows(); ++i) {
        sum += a(i, i);
    }
    return sum;
}

double max_abs(const ComplexMatrix& a) {
    double m = 0.0;
    for (const Complex& z : a.entries()) {
        m = std::max(m, std::abs(z));
    }
    return m;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_shape(a, b, "max_abs_diff");
    double m = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            m = std::max(m, std::abs(a(i, j) - b(i, j)));
        }
    }
    return m;
}

double frobenius_norm(const ComplexMatrix& a) {
    double sum = 0.0;
    for (const Complex& z : a.entries()) {
        sum += std::norm(z);
    }
    return std::sqrt(sum);
}

double hermiticity_residual(const ComplexMatrix& a) {
    if (!a.is_square()) {
        throw ShapeError("hermiticity_residual: matrix must be square");
    }
    double m = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = i; j < a.cols(); ++j) {
            m = std::max(m, std::abs(a(i, j) - std::conj(a(j, i))));
        }
    }
    return m;
}

HermitianEig hermitian_eig(const ComplexMatrix& a) {
    if (!a.is_square()) {
        throw ShapeError("hermitian_eig: matrix must be square");
    }
    if (hermiticity_residual(a) > kHermitianTol) {
        throw DomainError("hermitian_eig: input is not Hermitian within tolerance");
    }
    Eigen::SelfAdjointEigenSolver<EigenRowMajor> solver(view(a));
    if (solver.info() != Eigen::Success) {
        throw NumericError("hermitian_eig: eigensolver did not converge");
    }
    HermitianEig result{std::vector<double>(a.rows()),
                        ComplexMatrix(a.rows(), a.cols())};
    for (std::size_t i = 0; i < a.rows(); ++i) {
        result.eigenvalues[i] = solver.eigenvalues()(static_cast<Eigen::Index>(i));
    }
    view(result.eigenvectors) = solver.eigenvectors();
    return result;
}

std::vector<double> singular_values(const ComplexMatrix& a) {
    Eigen::JacobiSVD<EigenRowMajor> svd(view(a));
    if (svd.info() != Eigen::Success) {
        throw NumericError("singular_values: SVD did not converge");
    }
    const auto& sv = svd.singularValues();
    return {sv.data(), sv.data() + sv.size()};
}

double trace_norm(const ComplexMatrix& a) {
    double sum = 0.0;
    for (double s : singular_values(a)) {
        sum += s;
    }
    return sum;
}

ComplexMatrix expm_hermitian_generator(const ComplexMatrix& h, double t) {
    const HermitianEig eig = hermitian_eig(h);
    const std::size_t n = h.rows();
    // V diag(e^{-i lambda t}) V^dagger, with the diagonal folded into a
    // scaled copy of V to avoid a third product.
    ComplexMatrix scaled = eig.eigenvectors;
    for (std::size_t j = 0; j < n; ++j) {
        const Complex phase = std::exp(Complex{0.0, -eig.eigenvalues[j] * t});
        for (std::size_t i = 0; i < n; ++i) {
            scaled(i, j) *= phase;
        }
    }
    return matmul(scaled, adjoint(eig.eigenvectors));
}

} // namespace qtl
