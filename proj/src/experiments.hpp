#pragma once

#include "dynamics.hpp"
#include "measures.hpp"

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace qtl {

// The three constrained parameter regimes plus a free-form grid.
//   Case1: eps1 = eps2 = 1, eps3 sweeps.
//   Case2: eps1 = eps2 = eps3.
//   Case3: eps1 = 1, eps2 and eps3 sweep.
enum class SweepCase { Custom, Case1, Case2, Case3 };

enum class GeneratorChoice { Auto, GellMann12, Spin1 };

enum class OutputFormat { Csv, Json };

// Per-axis parameter lists the sweep grid is built from. Lists left empty
// default to {1.0}.
struct EpsAxes {
    std::vector<double> eps1;
    std::vector<double> eps2;
    std::vector<double> eps3;
};

/// Expand the axes into the case's triple grid (cross product for the free
/// axes, forced values for the constrained ones). Throws ConfigError when
/// the axes contradict the case or contain non-positive entries.
std::vector<JurkowskiParams> build_eps_grid(SweepCase sweep_case,
                                            const EpsAxes& axes);

struct SweepConfig {
    SweepCase sweep_case = SweepCase::Custom;
    std::vector<JurkowskiParams> eps_grid;
    std::vector<double> dm_strengths;
    double t_max = 30.0;
    std::size_t t_steps = 1001;
    GeneratorChoice generator = GeneratorChoice::Auto;
    EnvAmplitudes env;
};

/// Re-check a fully built config (grid vs case constraints, time grid,
/// strengths, env normalization). Throws ConfigError.
void validate_config(const SweepConfig& config);

struct TimeSeriesRecord {
    double t;
    double d;
    double eps1;
    double eps2;
    double eps3;
    double n1;
    double n2;
    Classification classification;
};

// One curve = one (eps triple, D) pair swept over the time grid.
struct CurveSummary {
    JurkowskiParams eps;
    double d;
    double max_n1;
    double t_at_max_n1;
    double max_realigned_norm; // raw realignment criterion, for comparison
    DsdReport dsd;
};

struct SweepSummary {
    DmGenerator generator_used;
    bool generator_autoresolved = false;
    double residual_spin1 = 0.0;
    double residual_gellmann = 0.0;
    std::vector<CurveSummary> curves;
};

struct SweepResult {
    std::vector<TimeSeriesRecord> records;
    SweepSummary summary;
};

/// Evaluate the full (eps triple, D, t) lattice. Records are ordered by
/// eps triple, then D, then ascending t; identical configs produce identical
/// results. Curves are evaluated in parallel, capped by QUTRIT_LAB_THREADS.
SweepResult run_sweep(const SweepConfig& config);

/// Worker cap: QUTRIT_LAB_THREADS when set to a positive integer, otherwise
/// the hardware concurrency (at least 1).
std::size_t worker_count();

void emit_csv(const std::vector<TimeSeriesRecord>& records, std::ostream& out);
void emit_json(const std::vector<TimeSeriesRecord>& records, std::ostream& out);

/// Write records to a file in the requested format. Throws IoError on
/// failure to open or write.
void emit_table(const std::vector<TimeSeriesRecord>& records,
                const std::string& path, OutputFormat format);

std::string render_summary(const SweepSummary& summary);

const char* generator_name(DmGenerator g);

} // namespace qtl
