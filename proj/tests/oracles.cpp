#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace oracle {

using qtl::Complex;
using qtl::ComplexMatrix;

ComplexMatrix naive_matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) {
            Complex sum{0.0, 0.0};
            for (std::size_t k = 0; k < a.cols(); ++k) {
                sum += a(i, k) * b(k, j);
            }
            out(i, j) = sum;
        }
    }
    return out;
}

ComplexMatrix naive_kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < out.rows(); ++i) {
        for (std::size_t j = 0; j < out.cols(); ++j) {
            out(i, j) = a(i / b.rows(), j / b.cols()) * b(i % b.rows(), j % b.cols());
        }
    }
    return out;
}

std::vector<double> jacobi_eigenvalues(ComplexMatrix a) {
    const std::size_t n = a.rows();
    double scale = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            scale = std::max(scale, std::abs(a(i, j)));
        }
    }
    if (scale == 0.0) {
        return std::vector<double>(n, 0.0);
    }

    const double stop = 1e-15 * scale;
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                off = std::max(off, std::abs(a(p, q)));
            }
        }
        if (off <= stop) {
            break;
        }
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex beta = a(p, q);
                if (std::abs(beta) <= stop) {
                    continue;
                }
                // Exact eigenvectors of the 2x2 Hermitian block
                // [[alpha, beta], [conj(beta), gamma]] give the plane
                // rotation that diagonalizes it.
                const double alpha = a(p, p).real();
                const double gamma = a(q, q).real();
                const double half_gap = 0.5 * (alpha - gamma);
                const double lambda_plus =
                    0.5 * (alpha + gamma) +
                    std::sqrt(half_gap * half_gap + std::norm(beta));
                const double d = lambda_plus - alpha; // real, >= 0 here
                const double inv_norm =
                    1.0 / std::sqrt(std::norm(beta) + d * d);
                const Complex vpp = beta * inv_norm;          // V[p][p]
                const Complex vqp = Complex{d * inv_norm, 0}; // V[q][p]
                const Complex vpq = Complex{-d * inv_norm, 0};
                const Complex vqq = std::conj(beta) * inv_norm;
                for (std::size_t i = 0; i < n; ++i) {
                    const Complex aip = a(i, p);
                    const Complex aiq = a(i, q);
                    a(i, p) = aip * vpp + aiq * vqp;
                    a(i, q) = aip * vpq + aiq * vqq;
                }
                for (std::size_t j = 0; j < n; ++j) {
                    const Complex apj = a(p, j);
                    const Complex aqj = a(q, j);
                    a(p, j) = std::conj(vpp) * apj + std::conj(vqp) * aqj;
                    a(q, j) = std::conj(vpq) * apj + std::conj(vqq) * aqj;
                }
            }
        }
    }

    std::vector<double> values(n);
    for (std::size_t i = 0; i < n; ++i) {
        values[i] = a(i, i).real();
    }
    std::sort(values.begin(), values.end());
    return values;
}

double hermitian_trace_norm(const ComplexMatrix& a) {
    double sum = 0.0;
    for (double v : jacobi_eigenvalues(a)) {
        sum += std::abs(v);
    }
    return sum;
}

std::vector<double> singular_values_via_gram(const ComplexMatrix& a) {
    ComplexMatrix gram(a.cols(), a.cols());
    for (std::size_t i = 0; i < a.cols(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            Complex sum{0.0, 0.0};
            for (std::size_t k = 0; k < a.rows(); ++k) {
                sum += std::conj(a(k, i)) * a(k, j);
            }
            gram(i, j) = sum;
        }
    }
    std::vector<double> values = jacobi_eigenvalues(gram);
    for (double& v : values) {
        v = std::sqrt(std::max(0.0, v));
    }
    std::sort(values.rbegin(), values.rend());
    return values;
}

namespace {

std::vector<std::size_t> decompose(std::size_t index,
                                   const std::vector<std::size_t>& dims) {
    std::vector<std::size_t> digits(dims.size());
    for (std::size_t k = dims.size(); k-- > 0;) {
        digits[k] = index % dims[k];
        index /= dims[k];
    }
    return digits;
}

std::size_t compose(const std::vector<std::size_t>& digits,
                    const std::vector<std::size_t>& dims, std::size_t skip) {
    std::size_t index = 0;
    for (std::size_t k = 0; k < dims.size(); ++k) {
        if (k == skip) {
            continue;
        }
        index = index * dims[k] + digits[k];
    }
    return index;
}

} // namespace

ComplexMatrix naive_partial_trace(const ComplexMatrix& m,
                                  const std::vector<std::size_t>& dims,
                                  std::size_t traced) {
    std::size_t side = 1;
    for (std::size_t d : dims) {
        side *= d;
    }
    if (side != m.rows() || !m.is_square()) {
        throw std::invalid_argument("naive_partial_trace: dims mismatch");
    }
    ComplexMatrix out(side / dims[traced], side / dims[traced]);
    for (std::size_t row = 0; row < side; ++row) {
        const auto row_digits = decompose(row, dims);
        for (std::size_t col = 0; col < side; ++col) {
            const auto col_digits = decompose(col, dims);
            if (row_digits[traced] != col_digits[traced]) {
                continue;
            }
            out(compose(row_digits, dims, traced), compose(col_digits, dims, traced)) +=
                m(row, col);
        }
    }
    return out;
}

double purity_via_square(const ComplexMatrix& m) {
    const ComplexMatrix square = naive_matmul(m, m);
    Complex tr{0.0, 0.0};
    for (std::size_t i = 0; i < square.rows(); ++i) {
        tr += square(i, i);
    }
    return tr.real();
}

ComplexMatrix random_matrix(std::size_t rows, std::size_t cols, Rng& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    ComplexMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            m(i, j) = Complex{gauss(rng), gauss(rng)};
        }
    }
    return m;
}

ComplexMatrix random_hermitian(std::size_t n, Rng& rng) {
    const ComplexMatrix g = random_matrix(n, n, rng);
    ComplexMatrix h(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            h(i, j) = 0.5 * (g(i, j) + std::conj(g(j, i)));
        }
    }
    return h;
}

ComplexMatrix random_density(std::size_t n, Rng& rng) {
    const ComplexMatrix g = random_matrix(n, n, rng);
    ComplexMatrix rho(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Complex sum{0.0, 0.0};
            for (std::size_t k = 0; k < n; ++k) {
                sum += g(i, k) * std::conj(g(j, k));
            }
            rho(i, j) = sum;
        }
    }
    Complex tr{0.0, 0.0};
    for (std::size_t i = 0; i < n; ++i) {
        tr += rho(i, i);
    }
    rho *= Complex{1.0, 0.0} / tr;
    return rho;
}

ComplexMatrix random_unitary(std::size_t n, Rng& rng) {
    ComplexMatrix u = random_matrix(n, n, rng);
    // Modified Gram-Schmidt over columns.
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < j; ++k) {
            Complex proj{0.0, 0.0};
            for (std::size_t i = 0; i < n; ++i) {
                proj += std::conj(u(i, k)) * u(i, j);
            }
            for (std::size_t i = 0; i < n; ++i) {
                u(i, j) -= proj * u(i, k);
            }
        }
        double norm = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            norm += std::norm(u(i, j));
        }
        norm = std::sqrt(norm);
        for (std::size_t i = 0; i < n; ++i) {
            u(i, j) /= norm;
        }
    }
    return u;
}

std::array<Complex, 3> random_env(Rng& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::array<Complex, 3> c{};
    double norm = 0.0;
    for (auto& z : c) {
        z = Complex{gauss(rng), gauss(rng)};
        norm += std::norm(z);
    }
    norm = std::sqrt(norm);
    for (auto& z : c) {
        z /= norm;
    }
    return c;
}

} // namespace oracle
