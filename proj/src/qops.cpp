#include "qops.hpp"

#include "errors.hpp"

#include <numeric>
#include <string>

namespace qtl {

namespace {

struct SplitDims {
    std::size_t lead;  // product of dims before the chosen subsystem
    std::size_t mid;   // dimension of the chosen subsystem
    std::size_t trail; // product of dims after it
};

SplitDims split_around(const std::vector<std::size_t>& dims, std::size_t subsystem) {
    SplitDims s{1, dims[subsystem], 1};
    for (std::size_t i = 0; i < subsystem; ++i) {
        s.lead *= dims[i];
    }
    for (std::size_t i = subsystem + 1; i < dims.size(); ++i) {
        s.trail *= dims[i];
    }
    return s;
}

} // namespace

DensityMatrix::DensityMatrix(ComplexMatrix mat, std::vector<std::size_t> dims)
    : mat_(std::move(mat)), dims_(std::move(dims)) {
    if (!mat_.is_square()) {
        throw ShapeError("DensityMatrix: matrix must be square");
    }
    std::size_t product = 1;
    for (std::size_t d : dims_) {
        if (d < 2) {
            throw ShapeError("DensityMatrix: subsystem dimensions must be >= 2");
        }
        product *= d;
    }
    if (product != mat_.rows()) {
        throw ShapeError("DensityMatrix: side " + std::to_string(mat_.rows()) +
                         " does not match product of dims " + std::to_string(product));
    }
    if (!mat_.all_finite()) {
        throw DomainError("DensityMatrix: entries must be finite");
    }
}

ValidationReport validate(const DensityMatrix& rho) {
    ValidationReport report;
    const ComplexMatrix& m = rho.matrix();
    report.hermiticity_residual = hermiticity_residual(m);
    report.trace_deviation = std::abs(trace(m) - Complex{1.0, 0.0});
    // Diagonalize the Hermitian part so the report stays meaningful even for
    // inputs that fail the Hermiticity check.
    ComplexMatrix herm(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            herm(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
        }
    }
    report.min_eigenvalue = hermitian_eig(herm).eigenvalues.front();
    return report;
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::size_t subsystem) {
    const auto& dims = rho.dims();
    if (subsystem >= dims.size()) {
        throw DomainError("partial_trace: subsystem index " +
                          std::to_string(subsystem) + " out of range");
    }
    const SplitDims s = split_around(dims, subsystem);
    const std::size_t out_side = s.lead * s.trail;
    const ComplexMatrix& in = rho.matrix();

    ComplexMatrix out(out_side, out_side);
    for (std::size_t l = 0; l < s.lead; ++l) {
        for (std::size_t lp = 0; lp < s.lead; ++lp) {
            for (std::size_t r = 0; r < s.trail; ++r) {
                for (std::size_t rp = 0; rp < s.trail; ++rp) {
                    Complex sum{0.0, 0.0};
                    for (std::size_t m = 0; m < s.mid; ++m) {
                        sum += in((l * s.mid + m) * s.trail + r,
                                  (lp * s.mid + m) * s.trail + rp);
                    }
                    out(l * s.trail + r, lp * s.trail + rp) = sum;
                }
            }
        }
    }

    std::vector<std::size_t> out_dims = dims;
    out_dims.erase(out_dims.begin() + static_cast<std::ptrdiff_t>(subsystem));
    return {std::move(out), std::move(out_dims)};
}

ComplexMatrix partial_transpose(const DensityMatrix& rho, std::size_t subsystem) {
    if (!rho.is_bipartite()) {
        throw DomainError("partial_transpose: state must be bipartite");
    }
    if (subsystem > 1) {
        throw DomainError("partial_transpose: subsystem index must be 0 or 1");
    }
    const std::size_t da = rho.dims()[0];
    const std::size_t db = rho.dims()[1];
    const ComplexMatrix& in = rho.matrix();

    ComplexMatrix out(rho.side(), rho.side());
    for (std::size_t i = 0; i < da; ++i) {
        for (std::size_t j = 0; j < db; ++j) {
            for (std::size_t k = 0; k < da; ++k) {
                for (std::size_t l = 0; l < db; ++l) {
                    if (subsystem == 1) {
                        out(i * db + j, k * db + l) = in(i * db + l, k * db + j);
                    } else {
                        out(i * db + j, k * db + l) = in(k * db + j, i * db + l);
                    }
                }
            }
        }
    }
    return out;
}

ComplexMatrix realign(const ComplexMatrix& m, std::size_t dim_a, std::size_t dim_b) {
    if (!m.is_square() || m.rows() != dim_a * dim_b) {
        throw ShapeError("realign: matrix side must equal dim_a*dim_b");
    }
    ComplexMatrix out(dim_a * dim_a, dim_b * dim_b);
    for (std::size_t i = 0; i < dim_a; ++i) {
        for (std::size_t k = 0; k < dim_a; ++k) {
            for (std::size_t j = 0; j < dim_b; ++j) {
                for (std::size_t l = 0; l < dim_b; ++l) {
                    out(i * dim_a + k, j * dim_b + l) = m(i * dim_b + j, k * dim_b + l);
                }
            }
        }
    }
    return out;
}

ComplexMatrix realign_inverse(const ComplexMatrix& r, std::size_t dim_a,
                              std::size_t dim_b) {
    if (r.rows() != dim_a * dim_a || r.cols() != dim_b * dim_b) {
        throw ShapeError("realign_inverse: expected shape (dim_a^2, dim_b^2)");
    }
    ComplexMatrix out(dim_a * dim_b, dim_a * dim_b);
    for (std::size_t i = 0; i < dim_a; ++i) {
        for (std::size_t k = 0; k < dim_a; ++k) {
            for (std::size_t j = 0; j < dim_b; ++j) {
                for (std::size_t l = 0; l < dim_b; ++l) {
                    out(i * dim_b + j, k * dim_b + l) = r(i * dim_a + k, j * dim_b + l);
                }
            }
        }
    }
    return out;
}

std::pair<DensityMatrix, DensityMatrix> reduced_pair(const DensityMatrix& rho) {
    if (!rho.is_bipartite()) {
        throw DomainError("reduced_pair: state must be bipartite");
    }
    return {partial_trace(rho, 1), partial_trace(rho, 0)};
}

double purity(const DensityMatrix& rho) {
    const ComplexMatrix& m = rho.matrix();
    // Tr(rho^2) = sum_ij rho_ij rho_ji; real for Hermitian rho.
    Complex sum{0.0, 0.0};
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            sum += m(i, j) * m(j, i);
        }
    }
    return sum.real();
}

} // namespace qtl
