#pragma once

#include "qops.hpp"

#include <span>
#include <vector>

namespace qtl {

struct EntanglementScores {
    double n1 = 0.0; // negativity
    double n2 = 0.0; // CCNR score, may be negative
};

enum class Classification { FreeEntangled, BoundEntangled, Undetected };

// Separates numerical zero from genuine positivity in the scores.
inline constexpr double kClassifyTol = 1e-9;

/// Negativity: (trace norm of the partial transpose - 1) / 2, transposing
/// subsystem B. Zero for every PPT state, positive exactly when the partial
/// transpose has negative eigenvalues.
double negativity(const DensityMatrix& rho);

struct CcnrParts {
    double realigned_norm; // ||R(rho - rho_A (x) rho_B)||_tr
    double purity_bound;   // sqrt((1 - Tr rho_A^2)(1 - Tr rho_B^2))
};

/// The two pieces of the CCNR score, kept separate so the raw realignment
/// norm can be reported alongside the bounded score.
CcnrParts ccnr_parts(const DensityMatrix& rho);

/// CCNR score: realigned correlation norm minus the marginal-purity bound.
/// A positive value certifies entanglement; non-positive is inconclusive.
double ccnr_score(const DensityMatrix& rho);

/// FreeEntangled when n1 > tol, else BoundEntangled when n2 > tol, else
/// Undetected. Total and deterministic for finite scores.
Classification classify(const EntanglementScores& scores,
                        double tol = kClassifyTol);

const char* classification_label(Classification c);

struct ScoredSample {
    double t = 0.0;
    EntanglementScores scores;
};

struct FreeToBoundEvent {
    double t;        // interpolated instant where n1 reaches zero
    double n1_floor; // interpolated n1 value at the event
    double n2_at;    // interpolated n2 there (positive by construction)
};

struct DetectionGap {
    double t_begin;
    double t_end;
};

struct DsdScanOptions {
    double tol = kClassifyTol;
    // A sampled series usually straddles an isolated zero of n1 without any
    // grid point dipping under tol; a local minimum whose V-interpolated
    // floor falls below touch_tol counts as reaching zero.
    double touch_tol = 1e-4;
};

struct DsdReport {
    std::vector<FreeToBoundEvent> free_to_bound;
    std::vector<DetectionGap> detection_gaps;
};

/// Scan a time-ordered score series for free-to-bound transitions (n1
/// reaches zero while n2 stays positive) and detection gaps (both scores at
/// or below tol). Event times come from linear interpolation between grid
/// points. Requires at least two samples with strictly increasing t.
DsdReport scan_dsd(std::span<const ScoredSample> series,
                   const DsdScanOptions& options = {});

} // namespace qtl
