#pragma once

#include "qops.hpp"

namespace qtl {

// Parameters of the three-parameter two-qutrit Jurkowski family. Each
// parameter appears together with its inverse, so all three must be
// strictly positive and finite.
struct JurkowskiParams {
    double eps1 = 1.0;
    double eps2 = 1.0;
    double eps3 = 1.0;
};

// Pure environmental-qutrit amplitudes.
struct EnvAmplitudes {
    Complex c0{1.0, 0.0};
    Complex c1{0.0, 0.0};
    Complex c2{0.0, 0.0};
};

inline constexpr double kEnvNormTol = 1e-12;

/// Normalization constant 3 + sum_k (eps_k + 1/eps_k) of the family.
double jurkowski_normalization(const JurkowskiParams& p);

/// The 9x9 family member with dims (3,3): a |00>+|11>+|22> coherence
/// skeleton plus the six eps-weighted diagonal populations, normalized.
DensityMatrix jurkowski_state(const JurkowskiParams& p);

/// Rank-one projector |psi><psi| with dims (3); amplitudes must satisfy
/// |c0|^2+|c1|^2+|c2|^2 = 1 within kEnvNormTol.
DensityMatrix env_state(const EnvAmplitudes& a);

/// Composite initial state ab (x) c with concatenated dims.
DensityMatrix compose_initial(const DensityMatrix& ab, const DensityMatrix& c);

} // namespace qtl
