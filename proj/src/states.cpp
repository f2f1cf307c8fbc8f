#include "states.hpp"

#include "errors.hpp"

#include <cmath>
#include <string>

namespace qtl {

namespace {

void require_valid_params(const JurkowskiParams& p) {
    for (double e : {p.eps1, p.eps2, p.eps3}) {
        if (!(e > 0.0) || !std::isfinite(e)) {
            throw DomainError("JurkowskiParams: eps values must be positive and finite");
        }
    }
}

} // namespace

double jurkowski_normalization(const JurkowskiParams& p) {
    require_valid_params(p);
    return 3.0 + p.eps1 + 1.0 / p.eps1 + p.eps2 + 1.0 / p.eps2 + p.eps3 +
           1.0 / p.eps3;
}

DensityMatrix jurkowski_state(const JurkowskiParams& p) {
    require_valid_params(p);
    const double inv_n = 1.0 / jurkowski_normalization(p);

    ComplexMatrix m(9, 9);
    // Coherence skeleton on |00>, |11>, |22| (composite indices 0, 4, 8).
    for (std::size_t i : {0u, 4u, 8u}) {
        for (std::size_t j : {0u, 4u, 8u}) {
            m(i, j) = inv_n;
        }
    }
    m(1, 1) = inv_n * p.eps1;       // |01>
    m(2, 2) = inv_n / p.eps3;       // |02>
    m(3, 3) = inv_n / p.eps1;       // |10>
    m(5, 5) = inv_n * p.eps2;       // |12>
    m(6, 6) = inv_n * p.eps3;       // |20>
    m(7, 7) = inv_n / p.eps2;       // |21>
    return {std::move(m), {3, 3}};
}

DensityMatrix env_state(const EnvAmplitudes& a) {
    const double norm_sq =
        std::norm(a.c0) + std::norm(a.c1) + std::norm(a.c2);
    if (std::abs(norm_sq - 1.0) > kEnvNormTol) {
        throw DomainError("env_state: amplitudes are not normalized (|c|^2 = " +
                          std::to_string(norm_sq) + ")");
    }
    const Complex amps[3] = {a.c0, a.c1, a.c2};
    ComplexMatrix m(3, 3);
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            m(i, j) = amps[i] * std::conj(amps[j]);
        }
    }
    return {std::move(m), {3}};
}

DensityMatrix compose_initial(const DensityMatrix& ab, const DensityMatrix& c) {
    std::vector<std::size_t> dims = ab.dims();
    dims.insert(dims.end(), c.dims().begin(), c.dims().end());
    return {kron(ab.matrix(), c.matrix()), std::move(dims)};
}

} // namespace qtl
