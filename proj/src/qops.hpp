#pragma once

#include "matrix.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace qtl {

inline constexpr double kTraceTol = 1e-10;
// Floor on the smallest eigenvalue; absorbs eigensolver noise after long
// evolutions while still rejecting genuinely indefinite matrices.
inline constexpr double kPositivityFloor = -1e-9;

// Density matrix tagged with its ordered subsystem dimensions. Composite
// indices are row-major: for dims (dA, dB, dC) the basis index of
// |a b c> is (a*dB + b)*dC + c.
//
// Construction checks structure only (square, side == product of dims,
// finite entries). The physical residuals are reported by validate() so a
// caller can judge them against the thresholds above.
class DensityMatrix {
public:
    DensityMatrix(ComplexMatrix mat, std::vector<std::size_t> dims);

    const ComplexMatrix& matrix() const noexcept { return mat_; }
    const std::vector<std::size_t>& dims() const noexcept { return dims_; }
    std::size_t side() const noexcept { return mat_.rows(); }
    bool is_bipartite() const noexcept { return dims_.size() == 2; }

private:
    ComplexMatrix mat_;
    std::vector<std::size_t> dims_;
};

struct ValidationReport {
    double hermiticity_residual = 0.0;
    double trace_deviation = 0.0; // |tr(rho) - 1|
    double min_eigenvalue = 0.0;

    bool passes(double herm_tol = kHermitianTol, double trace_tol = kTraceTol,
                double eig_floor = kPositivityFloor) const noexcept {
        return hermiticity_residual <= herm_tol && trace_deviation <= trace_tol &&
               min_eigenvalue >= eig_floor;
    }
};

/// Hermiticity residual, trace deviation and smallest eigenvalue of rho.
ValidationReport validate(const DensityMatrix& rho);

/// Trace out the subsystem at `subsystem` (0-based); the dims list loses
/// that entry. Tracing out the last subsystem leaves a 1x1 scalar.
DensityMatrix partial_trace(const DensityMatrix& rho, std::size_t subsystem);

/// Transpose the indices of one subsystem of a bipartite state: for dims
/// (dA, dB) and subsystem 1, out[(i,j),(k,l)] = rho[(i,l),(k,j)].
ComplexMatrix partial_transpose(const DensityMatrix& rho, std::size_t subsystem);

/// Realignment map on a square matrix of side dim_a*dim_b:
/// out[(i*dA + k), (j*dB + l)] = m[(i*dB + j), (k*dB + l)], shape (dA^2, dB^2).
ComplexMatrix realign(const ComplexMatrix& m, std::size_t dim_a, std::size_t dim_b);

/// Inverse index map of realign; realign_inverse(realign(m)) == m exactly.
ComplexMatrix realign_inverse(const ComplexMatrix& r, std::size_t dim_a,
                              std::size_t dim_b);

/// Both marginals (rho_A, rho_B) of a bipartite state.
std::pair<DensityMatrix, DensityMatrix> reduced_pair(const DensityMatrix& rho);

/// Tr(rho^2).
double purity(const DensityMatrix& rho);

} // namespace qtl
