#include "experiments.hpp"

#include "errors.hpp"

#include <json.hpp>

#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

namespace qtl {

namespace {

void require_positive_eps(const std::vector<double>& values, const char* axis) {
    for (double v : values) {
        if (!(v > 0.0) || !std::isfinite(v)) {
            throw ConfigError(std::string(axis) +
                              " values must be positive and finite");
        }
    }
}

bool all_ones(const std::vector<double>& values) {
    for (double v : values) {
        if (v != 1.0) {
            return false;
        }
    }
    return true;
}

std::vector<double> axis_or_default(const std::vector<double>& axis) {
    return axis.empty() ? std::vector<double>{1.0} : axis;
}

// Formats a double with 12 significant digits. std::to_chars keeps the
// output locale-independent ('.' separator) even inside host processes
// that switch LC_NUMERIC.
std::string format_value(double v) {
    char buf[32];
    const auto result =
        std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 12);
    return {buf, result.ptr};
}

} // namespace

std::vector<JurkowskiParams> build_eps_grid(SweepCase sweep_case,
                                            const EpsAxes& axes) {
    require_positive_eps(axes.eps1, "eps1");
    require_positive_eps(axes.eps2, "eps2");
    require_positive_eps(axes.eps3, "eps3");

    std::vector<JurkowskiParams> grid;
    switch (sweep_case) {
    case SweepCase::Case1: {
        if (!all_ones(axes.eps1) || !all_ones(axes.eps2)) {
            throw ConfigError("case 1 fixes eps1 = eps2 = 1");
        }
        for (double e3 : axis_or_default(axes.eps3)) {
            grid.push_back({1.0, 1.0, e3});
        }
        break;
    }
    case SweepCase::Case2: {
        // All provided axes must agree; the shared list is the sweep.
        std::vector<double> shared;
        for (const auto* axis : {&axes.eps1, &axes.eps2, &axes.eps3}) {
            if (axis->empty()) {
                continue;
            }
            if (shared.empty()) {
                shared = *axis;
            } else if (*axis != shared) {
                throw ConfigError("case 2 requires identical eps1, eps2 and "
                                  "eps3 lists");
            }
        }
        for (double e : axis_or_default(shared)) {
            grid.push_back({e, e, e});
        }
        break;
    }
    case SweepCase::Case3: {
        if (!all_ones(axes.eps1)) {
            throw ConfigError("case 3 fixes eps1 = 1");
        }
        for (double e2 : axis_or_default(axes.eps2)) {
            for (double e3 : axis_or_default(axes.eps3)) {
                grid.push_back({1.0, e2, e3});
            }
        }
        break;
    }
    case SweepCase::Custom: {
        for (double e1 : axis_or_default(axes.eps1)) {
            for (double e2 : axis_or_default(axes.eps2)) {
                for (double e3 : axis_or_default(axes.eps3)) {
                    grid.push_back({e1, e2, e3});
                }
            }
        }
        break;
    }
    }
    return grid;
}

void validate_config(const SweepConfig& config) {
    if (config.eps_grid.empty()) {
        throw ConfigError("eps grid is empty");
    }
    for (const JurkowskiParams& p : config.eps_grid) {
        for (double e : {p.eps1, p.eps2, p.eps3}) {
            if (!(e > 0.0) || !std::isfinite(e)) {
                throw ConfigError("eps values must be positive and finite");
            }
        }
        switch (config.sweep_case) {
        case SweepCase::Case1:
            if (p.eps1 != 1.0 || p.eps2 != 1.0) {
                throw ConfigError("case 1 fixes eps1 = eps2 = 1");
            }
            break;
        case SweepCase::Case2:
            if (p.eps1 != p.eps2 || p.eps2 != p.eps3) {
                throw ConfigError("case 2 requires eps1 = eps2 = eps3");
            }
            break;
        case SweepCase::Case3:
            if (p.eps1 != 1.0) {
                throw ConfigError("case 3 fixes eps1 = 1");
            }
            break;
        case SweepCase::Custom:
            break;
        }
    }
    if (config.dm_strengths.empty()) {
        throw ConfigError("at least one DM strength is required");
    }
    for (double d : config.dm_strengths) {
        if (!std::isfinite(d)) {
            throw ConfigError("DM strengths must be finite");
        }
    }
    if (!(config.t_max > 0.0) || !std::isfinite(config.t_max)) {
        throw ConfigError("t_max must be positive and finite");
    }
    if (config.t_steps < 2) {
        throw ConfigError("t_steps must be at least 2");
    }
    const double env_norm = std::norm(config.env.c0) + std::norm(config.env.c1) +
                            std::norm(config.env.c2);
    if (std::abs(env_norm - 1.0) > kEnvNormTol) {
        throw ConfigError("environment amplitudes are not normalized");
    }
}

std::size_t worker_count() {
    if (const char* env = std::getenv("QUTRIT_LAB_THREADS")) {
        char* end = nullptr;
        const long parsed = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && parsed > 0) {
            return static_cast<std::size_t>(parsed);
        }
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

namespace {

DmGenerator pick_generator(const SweepConfig& config, SweepSummary& summary) {
    switch (config.generator) {
    case GeneratorChoice::GellMann12:
        return DmGenerator::GellMann12;
    case GeneratorChoice::Spin1:
        return DmGenerator::Spin1;
    case GeneratorChoice::Auto:
        break;
    }
    // Resolve against the closed form using the first curve of the sweep;
    // with every strength zero the variants are indistinguishable and the
    // sqrt(2)-harmonic one stands as the default.
    double strength = 0.0;
    for (double d : config.dm_strengths) {
        if (d != 0.0) {
            strength = d;
            break;
        }
    }
    summary.generator_autoresolved = true;
    if (strength == 0.0) {
        return DmGenerator::Spin1;
    }
    const double horizon = config.t_max;
    const double times[4] = {0.13 * horizon, 0.37 * horizon, 0.61 * horizon,
                             0.97 * horizon};
    const GeneratorResolution resolution =
        resolve_generator(config.eps_grid.front(), strength, times);
    summary.residual_spin1 = resolution.residual_spin1;
    summary.residual_gellmann = resolution.residual_gellmann;
    return resolution.selected;
}

} // namespace

SweepResult run_sweep(const SweepConfig& config) {
    validate_config(config);

    SweepResult result;
    const DmGenerator generator = pick_generator(config, result.summary);
    result.summary.generator_used = generator;

    const std::size_t curve_count =
        config.eps_grid.size() * config.dm_strengths.size();
    const std::size_t steps = config.t_steps;
    const double dt = config.t_max / static_cast<double>(steps - 1);

    result.records.resize(curve_count * steps);
    result.summary.curves.resize(curve_count);

    auto evaluate_curve = [&](std::size_t curve) {
        const JurkowskiParams& eps =
            config.eps_grid[curve / config.dm_strengths.size()];
        const double d = config.dm_strengths[curve % config.dm_strengths.size()];
        const DmEvolution evolution(eps, config.env, {d, generator});

        TimeSeriesRecord* rows = result.records.data() + curve * steps;
        std::vector<ScoredSample> samples(steps);
        double max_n1 = 0.0;
        double t_at_max = 0.0;
        double max_realigned = 0.0;
        for (std::size_t j = 0; j < steps; ++j) {
            const double t = static_cast<double>(j) * dt;
            const DensityMatrix reduced = evolution.reduced_state(t);
            const double n1 = negativity(reduced);
            const CcnrParts parts = ccnr_parts(reduced);
            const double n2 = parts.realigned_norm - parts.purity_bound;
            const EntanglementScores scores{n1, n2};
            rows[j] = {t,  d,  eps.eps1, eps.eps2,
                       eps.eps3, n1, n2, classify(scores)};
            samples[j] = {t, scores};
            if (n1 > max_n1) {
                max_n1 = n1;
                t_at_max = t;
            }
            max_realigned = std::max(max_realigned, parts.realigned_norm);
        }
        result.summary.curves[curve] = {eps,      d,
                                        max_n1,   t_at_max,
                                        max_realigned, scan_dsd(samples)};
    };

    const std::size_t workers = std::min(worker_count(), curve_count);
    if (workers <= 1) {
        for (std::size_t curve = 0; curve < curve_count; ++curve) {
            evaluate_curve(curve);
        }
    } else {
        std::atomic<std::size_t> next{0};
        std::exception_ptr first_error;
        std::mutex error_mutex;
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                try {
                    for (std::size_t curve = next.fetch_add(1);
                         curve < curve_count; curve = next.fetch_add(1)) {
                        evaluate_curve(curve);
                    }
                } catch (...) {
                    const std::scoped_lock lock(error_mutex);
                    if (!first_error) {
                        first_error = std::current_exception();
                    }
                }
            });
        }
        for (std::thread& th : pool) {
            th.join();
        }
        if (first_error) {
            std::rethrow_exception(first_error);
        }
    }

    return result;
}

void emit_csv(const std::vector<TimeSeriesRecord>& records, std::ostream& out) {
    out << "t,D,eps1,eps2,eps3,n1,n2,class\n";
    for (const TimeSeriesRecord& r : records) {
        out << format_value(r.t) << ',' << format_value(r.d) << ','
            << format_value(r.eps1) << ',' << format_value(r.eps2) << ','
            << format_value(r.eps3) << ',' << format_value(r.n1) << ','
            << format_value(r.n2) << ','
            << classification_label(r.classification) << '\n';
    }
}

void emit_json(const std::vector<TimeSeriesRecord>& records, std::ostream& out) {
    nlohmann::ordered_json array = nlohmann::ordered_json::array();
    for (const TimeSeriesRecord& r : records) {
        array.push_back({{"t", r.t},
                         {"D", r.d},
                         {"eps1", r.eps1},
                         {"eps2", r.eps2},
                         {"eps3", r.eps3},
                         {"n1", r.n1},
                         {"n2", r.n2},
                         {"class", classification_label(r.classification)}});
    }
    out << array.dump(1) << '\n';
}

void emit_table(const std::vector<TimeSeriesRecord>& records,
                const std::string& path, OutputFormat format) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("emit_table: cannot open '" + path + "' for writing");
    }
    if (format == OutputFormat::Csv) {
        emit_csv(records, out);
    } else {
        emit_json(records, out);
    }
    out.flush();
    if (!out) {
        throw IoError("emit_table: write to '" + path + "' failed");
    }
}

const char* generator_name(DmGenerator g) {
    return g == DmGenerator::Spin1 ? "spin1" : "gellmann";
}

std::string render_summary(const SweepSummary& summary) {
    std::ostringstream out;
    out << "generator: " << generator_name(summary.generator_used);
    if (summary.generator_autoresolved) {
        out << " (auto-resolved; residual spin1=" << summary.residual_spin1
            << ", gellmann=" << summary.residual_gellmann << ")";
    }
    out << '\n';
    for (const CurveSummary& c : summary.curves) {
        out << "curve eps=(" << format_value(c.eps.eps1) << ','
            << format_value(c.eps.eps2) << ',' << format_value(c.eps.eps3)
            << ") D=" << format_value(c.d) << ": max n1="
            << format_value(c.max_n1) << " at t=" << format_value(c.t_at_max_n1)
            << ", max realigned-norm=" << format_value(c.max_realigned_norm)
            << '\n';
        if (c.dsd.free_to_bound.empty()) {
            out << "  free->bound events: none\n";
        } else {
            out << "  free->bound events:";
            for (const FreeToBoundEvent& e : c.dsd.free_to_bound) {
                out << " t=" << format_value(e.t) << " (n2="
                    << format_value(e.n2_at) << ")";
            }
            out << '\n';
        }
        if (c.dsd.detection_gaps.empty()) {
            out << "  detection gaps: none\n";
        } else {
            out << "  detection gaps:";
            for (const DetectionGap& g : c.dsd.detection_gaps) {
                out << " [" << format_value(g.t_begin) << ", "
                    << format_value(g.t_end) << "]";
            }
            out << '\n';
        }
    }
    return out.str();
}

} // namespace qtl
