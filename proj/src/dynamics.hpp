#pragma once

#include "states.hpp"

#include <span>

namespace qtl {

// Which three-level X/Y pair generates the DM coupling. GellMann12 uses the
// first two Gell-Mann matrices, which act like Pauli X/Y on the {|0>,|1>}
// subspace and leave level |2> inert. Spin1 uses the full three-level
// angular-momentum X/Y matrices (1/sqrt(2) off-diagonals); only this variant
// produces the sqrt(2)-frequency harmonics alongside the plain ones.
enum class DmGenerator { GellMann12, Spin1 };

struct DmHamiltonianSpec {
    double strength = 0.0; // coupling D, dimensionless (hbar = 1)
    DmGenerator generator = DmGenerator::Spin1;
};

/// 9x9 DM coupling D * (sigmaX (x) sigmaY - sigmaY (x) sigmaX) for the
/// selected generator pair. Hermitian and traceless for any D.
ComplexMatrix dm_hamiltonian(const DmHamiltonianSpec& spec);

/// Embed the 9x9 pair generator into the 27-dimensional tripartite space as
/// h (x) I3: the DM coupling drives the qutrit pair while the environmental
/// qutrit rides along untouched. This is what makes the reduced pair
/// dynamics exactly independent of the environment amplitudes.
ComplexMatrix lift_to_tripartite(const ComplexMatrix& h_pair);

/// Unitary exp(-i h t) for Hermitian h.
ComplexMatrix propagator(const ComplexMatrix& h, double t);

// Curve-level evolution engine: composes the initial state, diagonalizes the
// lifted Hamiltonian once, and serves reduced pair states at arbitrary
// times. Instances are immutable after construction and safe to share
// across threads.
class DmEvolution {
public:
    DmEvolution(const JurkowskiParams& params, const EnvAmplitudes& env,
                const DmHamiltonianSpec& spec);

    /// Reduced pair state at time t: evolve the composite, trace out the
    /// environmental qutrit.
    DensityMatrix reduced_state(double t) const;

private:
    HermitianEig eig_;
    ComplexMatrix initial_in_eigenbasis_; // V^dagger rho(0) V
};

/// One-shot form of DmEvolution::reduced_state.
DensityMatrix evolve_and_reduce(const JurkowskiParams& params,
                                const EnvAmplitudes& env,
                                const DmHamiltonianSpec& spec, double t);

struct ClosedFormParams {
    JurkowskiParams eps;
    double strength = 0.0;
    double time = 0.0;
};

/// The constant corner weight of the closed-form reduced state; equals the
/// inverse family normalization.
double closed_form_p(const JurkowskiParams& p);

/// Closed-form reduced pair state for the Spin1 generator, written directly
/// in terms of cos/sin of D*t and sqrt(2)*D*t. Agrees with the numeric
/// pipeline entrywise to solver precision; kept as an independent regression
/// route for it.
DensityMatrix closed_form_reduced(const ClosedFormParams& cf);

struct GeneratorResolution {
    DmGenerator selected;
    double residual_spin1;    // max-entry gap to the closed form
    double residual_gellmann;
};

inline constexpr double kGeneratorResolveTol = 1e-6;

/// Decide which generator variant reproduces the closed form by evolving
/// with both and comparing entrywise across the sample times. Throws a
/// NumericError carrying both residuals when neither matches.
GeneratorResolution resolve_generator(const JurkowskiParams& params,
                                      double strength,
                                      std::span<const double> sample_times);

} // namespace qtl
