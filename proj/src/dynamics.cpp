#include "dynamics.hpp"

#include "errors.hpp"

#include <cmath>
#include <sstream>
#include <utility>

namespace qtl {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

ComplexMatrix generator_x(DmGenerator g) {
    ComplexMatrix m(3, 3);
    if (g == DmGenerator::GellMann12) {
        m(0, 1) = 1.0;
        m(1, 0) = 1.0;
    } else {
        m(0, 1) = kInvSqrt2;
        m(1, 0) = kInvSqrt2;
        m(1, 2) = kInvSqrt2;
        m(2, 1) = kInvSqrt2;
    }
    return m;
}

ComplexMatrix generator_y(DmGenerator g) {
    ComplexMatrix m(3, 3);
    const Complex mi{0.0, -1.0};
    const Complex pi{0.0, 1.0};
    if (g == DmGenerator::GellMann12) {
        m(0, 1) = mi;
        m(1, 0) = pi;
    } else {
        m(0, 1) = mi * kInvSqrt2;
        m(1, 0) = pi * kInvSqrt2;
        m(1, 2) = mi * kInvSqrt2;
        m(2, 1) = pi * kInvSqrt2;
    }
    return m;
}

} // namespace

ComplexMatrix dm_hamiltonian(const DmHamiltonianSpec& spec) {
    if (!std::isfinite(spec.strength)) {
        throw DomainError("dm_hamiltonian: coupling strength must be finite");
    }
    const ComplexMatrix sx = generator_x(spec.generator);
    const ComplexMatrix sy = generator_y(spec.generator);
    ComplexMatrix h = kron(sx, sy) - kron(sy, sx);
    h *= Complex{spec.strength, 0.0};
    return h;
}

ComplexMatrix lift_to_tripartite(const ComplexMatrix& h_pair) {
    if (h_pair.rows() != 9 || h_pair.cols() != 9) {
        throw ShapeError("lift_to_tripartite: expected a 9x9 pair generator");
    }
    return kron(h_pair, ComplexMatrix::identity(3));
}

ComplexMatrix propagator(const ComplexMatrix& h, double t) {
    return expm_hermitian_generator(h, t);
}

DmEvolution::DmEvolution(const JurkowskiParams& params, const EnvAmplitudes& env,
                         const DmHamiltonianSpec& spec)
    : eig_(hermitian_eig(lift_to_tripartite(dm_hamiltonian(spec)))),
      initial_in_eigenbasis_(1, 1) {
    const DensityMatrix composite =
        compose_initial(jurkowski_state(params), env_state(env));
    initial_in_eigenbasis_ = matmul(adjoint(eig_.eigenvectors),
                                    matmul(composite.matrix(), eig_.eigenvectors));
}

DensityMatrix DmEvolution::reduced_state(double t) const {
    const std::size_t n = initial_in_eigenbasis_.rows();
    // In the eigenbasis the conjugation by U(t) is an entrywise phase:
    // rho~_jk(t) = e^{-i (lambda_j - lambda_k) t} rho~_jk(0).
    ComplexMatrix rotated(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
            const double angle = -(eig_.eigenvalues[j] - eig_.eigenvalues[k]) * t;
            rotated(j, k) =
                initial_in_eigenbasis_(j, k) * std::exp(Complex{0.0, angle});
        }
    }
    ComplexMatrix evolved =
        matmul(eig_.eigenvectors, matmul(rotated, adjoint(eig_.eigenvectors)));
    const DensityMatrix composite{std::move(evolved), {3, 3, 3}};
    return partial_trace(composite, 2);
}

DensityMatrix evolve_and_reduce(const JurkowskiParams& params,
                                const EnvAmplitudes& env,
                                const DmHamiltonianSpec& spec, double t) {
    return DmEvolution(params, env, spec).reduced_state(t);
}

double closed_form_p(const JurkowskiParams& p) {
    const double e1 = p.eps1;
    const double e2 = p.eps2;
    const double e3 = p.eps3;
    // Rational form of the constant corner weight; algebraically identical
    // to 1 / jurkowski_normalization(p).
    return e1 * e2 * e3 /
           (e2 * e3 + e1 * e1 * e2 * e3 +
            e1 * (e3 + e2 * (1.0 + e3 * (3.0 + e2 + e3))));
}

DensityMatrix closed_form_reduced(const ClosedFormParams& cf) {
    const double e1 = cf.eps.eps1;
    const double e2 = cf.eps.eps2;
    const double e3 = cf.eps.eps3;
    const double p = closed_form_p(cf.eps);
    const double dt = cf.strength * cf.time;

    // Two harmonic families: the |01>/|10> and |12>/|21> pairs rotate at
    // D*t, while the {|02>, |11>, |20>} triple rotates at sqrt(2)*D*t.
    const double c1 = std::cos(dt);
    const double s1 = std::sin(dt);
    const double c = std::cos(std::sqrt(2.0) * dt);
    const double s = std::sin(std::sqrt(2.0) * dt);
    const double a = 0.5 * (1.0 + c);
    const double b = 0.5 * (1.0 - c);
    const double q = s * kInvSqrt2;

    ComplexMatrix m(9, 9);
    // Coherence-skeleton sublattice (indices 0, 2, 4, 6, 8).
    m(0, 0) = 1.0;
    m(0, 2) = q;
    m(0, 4) = c;
    m(0, 6) = -q;
    m(0, 8) = 1.0;
    m(2, 2) = q * q + a * a / e3 + e3 * b * b;
    m(2, 4) = q * (c - a / e3 + e3 * b);
    m(2, 6) = -q * q + a * b * (e3 + 1.0 / e3);
    m(2, 8) = q;
    m(4, 4) = c * c + q * q * (e3 + 1.0 / e3);
    m(4, 6) = q * (-c - b / e3 + e3 * a);
    m(4, 8) = c;
    m(6, 6) = q * q + b * b / e3 + e3 * a * a;
    m(6, 8) = -q;
    m(8, 8) = 1.0;
    // D*t rotor pairs.
    m(1, 1) = e1 * c1 * c1 + s1 * s1 / e1;
    m(1, 3) = (1.0 / e1 - e1) * c1 * s1;
    m(3, 3) = e1 * s1 * s1 + c1 * c1 / e1;
    m(5, 5) = e2 * c1 * c1 + s1 * s1 / e2;
    m(5, 7) = (1.0 / e2 - e2) * c1 * s1;
    m(7, 7) = e2 * s1 * s1 + c1 * c1 / e2;
    // Fill the lower triangle; every entry is real.
    for (std::size_t i = 0; i < 9; ++i) {
        for (std::size_t j = i + 1; j < 9; ++j) {
            m(j, i) = m(i, j);
        }
    }
    m *= Complex{p, 0.0};
    return {std::move(m), {3, 3}};
}

GeneratorResolution resolve_generator(const JurkowskiParams& params,
                                      double strength,
                                      std::span<const double> sample_times) {
    if (sample_times.size() < 3) {
        throw DomainError("resolve_generator: need at least 3 sample times");
    }
    for (std::size_t i = 0; i < sample_times.size(); ++i) {
        for (std::size_t j = i + 1; j < sample_times.size(); ++j) {
            if (sample_times[i] == sample_times[j]) {
                throw DomainError("resolve_generator: sample times must be distinct");
            }
        }
    }

    const EnvAmplitudes env{}; // irrelevant to the reduced dynamics
    double residual[2] = {0.0, 0.0};
    const DmGenerator variants[2] = {DmGenerator::Spin1, DmGenerator::GellMann12};
    for (int v = 0; v < 2; ++v) {
        DmEvolution evolution(params, env, {strength, variants[v]});
        for (double t : sample_times) {
            const DensityMatrix numeric = evolution.reduced_state(t);
            const DensityMatrix closed =
                closed_form_reduced({params, strength, t});
            residual[v] = std::max(
                residual[v], max_abs_diff(numeric.matrix(), closed.matrix()));
        }
    }

    GeneratorResolution result{DmGenerator::Spin1, residual[0], residual[1]};
    if (residual[0] <= kGeneratorResolveTol &&
        residual[0] <= residual[1]) {
        result.selected = DmGenerator::Spin1;
    } else if (residual[1] <= kGeneratorResolveTol) {
        result.selected = DmGenerator::GellMann12;
    } else {
        std::ostringstream msg;
        msg << "resolve_generator: neither variant matches the closed form "
               "(spin1 residual "
            << residual[0] << ", gellmann residual " << residual[1] << ")";
        throw NumericError(msg.str());
    }
    return result;
}

} // namespace qtl
