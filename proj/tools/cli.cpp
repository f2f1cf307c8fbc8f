// qutrit-lab: sweep negativity and CCNR scores of DM-driven two-qutrit
// states over parameter/time lattices and emit CSV or JSON tables.
//
// Built entirely on the public C API of the shared library.

#include "cli.hpp"

#include <qutritlab.h>

#include <CLI11.hpp>

#include <cstdio>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace {

std::vector<double> parse_list(const std::string& text, const std::string& flag) {
    std::vector<double> values;
    std::size_t begin = 0;
    while (begin <= text.size()) {
        const std::size_t end = text.find(',', begin);
        const std::string token =
            text.substr(begin, end == std::string::npos ? end : end - begin);
        try {
            std::size_t used = 0;
            const double v = std::stod(token, &used);
            if (used != token.size()) {
                throw std::invalid_argument(token);
            }
            values.push_back(v);
        } catch (const std::exception&) {
            throw CLI::ValidationError(flag, "'" + token + "' is not a number");
        }
        if (end == std::string::npos) {
            break;
        }
        begin = end + 1;
    }
    return values;
}

int exit_code_for(qtl_status status) {
    switch (status) {
    case QTL_OK:
        return 0;
    case QTL_ERR_CONFIG:
    case QTL_ERR_DOMAIN:
    case QTL_ERR_INVALID:
        return 2;
    default:
        return 1;
    }
}

int fail(qtl_status status) {
    std::fprintf(stderr, "qutrit-lab: error: %s\n", qtl_last_error());
    return exit_code_for(status);
}

struct ConfigDeleter {
    void operator()(qtl_config* c) const { qtl_config_destroy(c); }
};
struct ResultDeleter {
    void operator()(qtl_result* r) const { qtl_result_destroy(r); }
};

} // namespace

int qtl_cli_main(int argc, const char* const* argv) {
    CLI::App app{"Entanglement dynamics of DM-driven two-qutrit states: "
                 "negativity (n1) and CCNR (n2) over parameter/time sweeps"};
    app.get_formatter()->column_width(34);

    std::string case_name = "custom";
    app.add_option("--case", case_name, "Parameter regime: 1, 2, 3 or custom")
        ->check(CLI::IsMember({"1", "2", "3", "custom"}))
        ->capture_default_str();

    std::string eps1_list;
    std::string eps2_list;
    std::string eps3_list;
    app.add_option("--eps1", eps1_list, "Comma-separated eps1 values");
    app.add_option("--eps2", eps2_list, "Comma-separated eps2 values");
    app.add_option("--eps3", eps3_list, "Comma-separated eps3 values");

    std::string strengths = "0.2";
    app.add_option("--dm-strength", strengths,
                   "Comma-separated DM coupling strengths")
        ->capture_default_str();

    double t_max = 30.0;
    app.add_option("--t-max", t_max, "End of the time grid")
        ->capture_default_str();
    std::size_t t_steps = 1001;
    app.add_option("--t-steps", t_steps, "Number of time samples (>= 2)")
        ->capture_default_str();

    std::string generator = "auto";
    app.add_option("--generator", generator,
                   "DM generator pair: gellmann, spin1 or auto")
        ->check(CLI::IsMember({"gellmann", "spin1", "auto"}))
        ->capture_default_str();

    std::string env = "1,0,0";
    app.add_option("--env", env,
                   "Environment qutrit amplitudes c0,c1,c2 (normalized)")
        ->capture_default_str();

    std::string out_path;
    app.add_option("--out", out_path, "Output file (stdout when omitted)");

    std::string format = "csv";
    app.add_option("--format", format, "Table format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();

    bool summary = false;
    app.add_flag("--summary", summary,
                 "Print the run summary (max n1, free->bound events, "
                 "detection gaps) to stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::fprintf(stderr, "qutrit-lab: error: %s\n\n%s", e.what(),
                     app.help().c_str());
        return 2;
    }

    std::unique_ptr<qtl_config, ConfigDeleter> config(qtl_config_create());
    if (!config) {
        std::fprintf(stderr, "qutrit-lab: error: out of memory\n");
        return 1;
    }

    const int case_id = case_name == "custom" ? QTL_CASE_CUSTOM
                                              : std::stoi(case_name);
    if (qtl_status s = qtl_config_set_case(config.get(), case_id); s != QTL_OK) {
        return fail(s);
    }

    try {
        const std::pair<int, const std::string*> axes[3] = {
            {1, &eps1_list}, {2, &eps2_list}, {3, &eps3_list}};
        for (const auto& [axis, text] : axes) {
            if (text->empty()) {
                continue;
            }
            const std::vector<double> values = parse_list(*text, "--eps");
            if (qtl_status s = qtl_config_set_eps_axis(config.get(), axis,
                                                       values.data(), values.size());
                s != QTL_OK) {
                return fail(s);
            }
        }
        const std::vector<double> d_values = parse_list(strengths, "--dm-strength");
        if (qtl_status s = qtl_config_set_dm_strengths(config.get(), d_values.data(),
                                                       d_values.size());
            s != QTL_OK) {
            return fail(s);
        }
        const std::vector<double> env_values = parse_list(env, "--env");
        if (env_values.size() != 3) {
            std::fprintf(stderr,
                         "qutrit-lab: error: --env takes exactly three values\n");
            return 2;
        }
        const double re[3] = {env_values[0], env_values[1], env_values[2]};
        if (qtl_status s = qtl_config_set_env(config.get(), re, nullptr);
            s != QTL_OK) {
            return fail(s);
        }
    } catch (const CLI::ValidationError& e) {
        std::fprintf(stderr, "qutrit-lab: error: %s\n", e.what());
        return 2;
    }

    if (qtl_status s = qtl_config_set_time_grid(config.get(), t_max, t_steps);
        s != QTL_OK) {
        return fail(s);
    }
    const int generator_id = generator == "auto"      ? QTL_GEN_AUTO
                             : generator == "spin1"   ? QTL_GEN_SPIN1
                                                      : QTL_GEN_GELLMANN;
    if (qtl_status s = qtl_config_set_generator(config.get(), generator_id);
        s != QTL_OK) {
        return fail(s);
    }

    qtl_result* raw_result = nullptr;
    if (qtl_status s = qtl_run_sweep(config.get(), &raw_result); s != QTL_OK) {
        return fail(s);
    }
    std::unique_ptr<qtl_result, ResultDeleter> result(raw_result);

    if (generator_id == QTL_GEN_AUTO) {
        std::fprintf(stderr, "qutrit-lab: generator auto-resolved to %s\n",
                     qtl_result_generator(result.get()) == QTL_GEN_SPIN1
                         ? "spin1"
                         : "gellmann");
    }

    const int format_id = format == "csv" ? QTL_FORMAT_CSV : QTL_FORMAT_JSON;
    if (!out_path.empty()) {
        if (qtl_status s = qtl_result_write(result.get(), format_id,
                                            out_path.c_str());
            s != QTL_OK) {
            return fail(s);
        }
    } else if (!summary) {
        char* rendered = nullptr;
        if (qtl_status s = qtl_result_render(result.get(), format_id, &rendered);
            s != QTL_OK) {
            return fail(s);
        }
        std::fputs(rendered, stdout);
        qtl_string_free(rendered);
    }

    if (summary) {
        char* rendered = nullptr;
        if (qtl_status s = qtl_result_render_summary(result.get(), &rendered);
            s != QTL_OK) {
            return fail(s);
        }
        std::fputs(rendered, stdout);
        qtl_string_free(rendered);
    }

    return 0;
}
