// C binding of the sweep driver: opaque handles over the C++ core, with
// exceptions mapped onto qtl_status codes and a per-thread error message.

#include "qutritlab.h"

#include "errors.hpp"
#include "experiments.hpp"

#include <cstring>
#include <exception>
#include <new>
#include <sstream>
#include <string>

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& message) { g_last_error = message; }

template <typename Fn>
qtl_status guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return QTL_OK;
    } catch (const qtl::ShapeError& e) {
        set_error(e.what());
        return QTL_ERR_SHAPE;
    } catch (const qtl::ConfigError& e) {
        set_error(e.what());
        return QTL_ERR_CONFIG;
    } catch (const qtl::DomainError& e) {
        set_error(e.what());
        return QTL_ERR_DOMAIN;
    } catch (const qtl::IoError& e) {
        set_error(e.what());
        return QTL_ERR_IO;
    } catch (const qtl::NumericError& e) {
        set_error(e.what());
        return QTL_ERR_NUMERIC;
    } catch (const std::bad_alloc&) {
        set_error("out of memory");
        return QTL_ERR_NUMERIC;
    } catch (const std::exception& e) {
        set_error(e.what());
        return QTL_ERR_INVALID;
    }
}

char* copy_string(const std::string& s) {
    char* out = new (std::nothrow) char[s.size() + 1];
    if (out != nullptr) {
        std::memcpy(out, s.c_str(), s.size() + 1);
    }
    return out;
}

} // namespace

struct qtl_config {
    qtl::SweepCase sweep_case = qtl::SweepCase::Custom;
    qtl::EpsAxes axes;
    std::vector<double> dm_strengths{0.2};
    double t_max = 30.0;
    size_t t_steps = 1001;
    qtl::GeneratorChoice generator = qtl::GeneratorChoice::Auto;
    qtl::EnvAmplitudes env;
};

struct qtl_result {
    qtl::SweepResult inner;
};

extern "C" {

qtl_config* qtl_config_create(void) { return new (std::nothrow) qtl_config; }

void qtl_config_destroy(qtl_config* config) { delete config; }

qtl_status qtl_config_set_case(qtl_config* config, int case_id) {
    if (config == nullptr) {
        set_error("null config");
        return QTL_ERR_INVALID;
    }
    switch (case_id) {
    case QTL_CASE_CUSTOM:
        config->sweep_case = qtl::SweepCase::Custom;
        return QTL_OK;
    case QTL_CASE_1:
        config->sweep_case = qtl::SweepCase::Case1;
        return QTL_OK;
    case QTL_CASE_2:
        config->sweep_case = qtl::SweepCase::Case2;
        return QTL_OK;
    case QTL_CASE_3:
        config->sweep_case = qtl::SweepCase::Case3;
        return QTL_OK;
    default:
        set_error("unknown case id " + std::to_string(case_id));
        return QTL_ERR_CONFIG;
    }
}

qtl_status qtl_config_set_eps_axis(qtl_config* config, int axis,
                                   const double* values, size_t count) {
    if (config == nullptr || (values == nullptr && count > 0)) {
        set_error("null argument");
        return QTL_ERR_INVALID;
    }
    std::vector<double>* target = nullptr;
    switch (axis) {
    case 1:
        target = &config->axes.eps1;
        break;
    case 2:
        target = &config->axes.eps2;
        break;
    case 3:
        target = &config->axes.eps3;
        break;
    default:
        set_error("eps axis must be 1, 2 or 3");
        return QTL_ERR_INVALID;
    }
    target->assign(values, values + count);
    return QTL_OK;
}

qtl_status qtl_config_set_dm_strengths(qtl_config* config, const double* values,
                                       size_t count) {
    if (config == nullptr || values == nullptr || count == 0) {
        set_error("at least one DM strength is required");
        return QTL_ERR_INVALID;
    }
    config->dm_strengths.assign(values, values + count);
    return QTL_OK;
}

qtl_status qtl_config_set_time_grid(qtl_config* config, double t_max,
                                    size_t t_steps) {
    if (config == nullptr) {
        set_error("null config");
        return QTL_ERR_INVALID;
    }
    config->t_max = t_max;
    config->t_steps = t_steps;
    return QTL_OK;
}

qtl_status qtl_config_set_generator(qtl_config* config, int generator) {
    if (config == nullptr) {
        set_error("null config");
        return QTL_ERR_INVALID;
    }
    switch (generator) {
    case QTL_GEN_AUTO:
        config->generator = qtl::GeneratorChoice::Auto;
        return QTL_OK;
    case QTL_GEN_GELLMANN:
        config->generator = qtl::GeneratorChoice::GellMann12;
        return QTL_OK;
    case QTL_GEN_SPIN1:
        config->generator = qtl::GeneratorChoice::Spin1;
        return QTL_OK;
    default:
        set_error("unknown generator id " + std::to_string(generator));
        return QTL_ERR_CONFIG;
    }
}

qtl_status qtl_config_set_env(qtl_config* config, const double re[3],
                              const double im[3]) {
    if (config == nullptr || re == nullptr) {
        set_error("null argument");
        return QTL_ERR_INVALID;
    }
    const double i0 = im != nullptr ? im[0] : 0.0;
    const double i1 = im != nullptr ? im[1] : 0.0;
    const double i2 = im != nullptr ? im[2] : 0.0;
    config->env = {{re[0], i0}, {re[1], i1}, {re[2], i2}};
    return QTL_OK;
}

qtl_status qtl_run_sweep(const qtl_config* config, qtl_result** out) {
    if (config == nullptr || out == nullptr) {
        set_error("null argument");
        return QTL_ERR_INVALID;
    }
    *out = nullptr;
    return guarded([&] {
        qtl::SweepConfig cpp_config;
        cpp_config.sweep_case = config->sweep_case;
        cpp_config.eps_grid = qtl::build_eps_grid(config->sweep_case, config->axes);
        cpp_config.dm_strengths = config->dm_strengths;
        cpp_config.t_max = config->t_max;
        cpp_config.t_steps = config->t_steps;
        cpp_config.generator = config->generator;
        cpp_config.env = config->env;
        auto* result = new qtl_result{qtl::run_sweep(cpp_config)};
        *out = result;
    });
}

void qtl_result_destroy(qtl_result* result) { delete result; }

size_t qtl_result_record_count(const qtl_result* result) {
    return result == nullptr ? 0 : result->inner.records.size();
}

qtl_status qtl_result_record(const qtl_result* result, size_t index,
                             qtl_record* out) {
    if (result == nullptr || out == nullptr) {
        set_error("null argument");
        return QTL_ERR_INVALID;
    }
    if (index >= result->inner.records.size()) {
        set_error("record index out of range");
        return QTL_ERR_INVALID;
    }
    const qtl::TimeSeriesRecord& r = result->inner.records[index];
    out->t = r.t;
    out->d = r.d;
    out->eps1 = r.eps1;
    out->eps2 = r.eps2;
    out->eps3 = r.eps3;
    out->n1 = r.n1;
    out->n2 = r.n2;
    switch (r.classification) {
    case qtl::Classification::FreeEntangled:
        out->classification = QTL_CLASS_FREE;
        break;
    case qtl::Classification::BoundEntangled:
        out->classification = QTL_CLASS_BOUND;
        break;
    case qtl::Classification::Undetected:
        out->classification = QTL_CLASS_UNDETECTED;
        break;
    }
    return QTL_OK;
}

int qtl_result_generator(const qtl_result* result) {
    if (result == nullptr) {
        return QTL_GEN_AUTO;
    }
    return result->inner.summary.generator_used == qtl::DmGenerator::Spin1
               ? QTL_GEN_SPIN1
               : QTL_GEN_GELLMANN;
}

qtl_status qtl_result_write(const qtl_result* result, int format,
                            const char* path) {
    if (result == nullptr || path == nullptr) {
        set_error("null argument");
        return QTL_ERR_INVALID;
    }
    if (format != QTL_FORMAT_CSV && format != QTL_FORMAT_JSON) {
        set_error("unknown format id " + std::to_string(format));
        return QTL_ERR_CONFIG;
    }
    return guarded([&] {
        qtl::emit_table(result->inner.records, path,
                        format == QTL_FORMAT_CSV ? qtl::OutputFormat::Csv
                                                 : qtl::OutputFormat::Json);
    });
}

qtl_status qtl_result_render(const qtl_result* result, int format, char** out) {
    if (result == nullptr || out == nullptr) {
        set_error("null argument");
        return QTL_ERR_INVALID;
    }
    if (format != QTL_FORMAT_CSV && format != QTL_FORMAT_JSON) {
        set_error("unknown format id " + std::to_string(format));
        return QTL_ERR_CONFIG;
    }
    *out = nullptr;
    return guarded([&] {
        std::ostringstream stream;
        if (format == QTL_FORMAT_CSV) {
            qtl::emit_csv(result->inner.records, stream);
        } else {
            qtl::emit_json(result->inner.records, stream);
        }
        *out = copy_string(stream.str());
        if (*out == nullptr) {
            throw std::bad_alloc();
        }
    });
}

qtl_status qtl_result_render_summary(const qtl_result* result, char** out) {
    if (result == nullptr || out == nullptr) {
        set_error("null argument");
        return QTL_ERR_INVALID;
    }
    *out = nullptr;
    return guarded([&] {
        *out = copy_string(qtl::render_summary(result->inner.summary));
        if (*out == nullptr) {
            throw std::bad_alloc();
        }
    });
}

void qtl_string_free(char* str) { delete[] str; }

qtl_status qtl_eval_point(double eps1, double eps2, double eps3, double d,
                          double t, int generator, double* n1, double* n2,
                          int* classification) {
    return guarded([&] {
        const qtl::JurkowskiParams params{eps1, eps2, eps3};
        qtl::DmGenerator gen;
        switch (generator) {
        case QTL_GEN_GELLMANN:
            gen = qtl::DmGenerator::GellMann12;
            break;
        case QTL_GEN_SPIN1:
            gen = qtl::DmGenerator::Spin1;
            break;
        case QTL_GEN_AUTO: {
            if (d == 0.0) {
                gen = qtl::DmGenerator::Spin1;
            } else {
                const double horizon = t > 0.0 ? t : 1.0;
                const double times[3] = {0.31 * horizon, 0.67 * horizon, horizon};
                gen = qtl::resolve_generator(params, d, times).selected;
            }
            break;
        }
        default:
            throw qtl::ConfigError("unknown generator id " +
                                   std::to_string(generator));
        }
        const qtl::DensityMatrix reduced =
            qtl::evolve_and_reduce(params, qtl::EnvAmplitudes{}, {d, gen}, t);
        const qtl::EntanglementScores scores{qtl::negativity(reduced),
                                             qtl::ccnr_score(reduced)};
        if (n1 != nullptr) {
            *n1 = scores.n1;
        }
        if (n2 != nullptr) {
            *n2 = scores.n2;
        }
        if (classification != nullptr) {
            switch (qtl::classify(scores)) {
            case qtl::Classification::FreeEntangled:
                *classification = QTL_CLASS_FREE;
                break;
            case qtl::Classification::BoundEntangled:
                *classification = QTL_CLASS_BOUND;
                break;
            case qtl::Classification::Undetected:
                *classification = QTL_CLASS_UNDETECTED;
                break;
            }
        }
    });
}

const char* qtl_last_error(void) { return g_last_error.c_str(); }

const char* qtl_version(void) { return "0.1.0"; }

} // extern "C"
