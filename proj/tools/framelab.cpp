// framelab: frame analysis workbench CLI.
//
// Either load a full experiment config (--config experiment.json) or use the
// shortcut flags; see README for the config schema.

#include <CLI11.hpp>
#include <iostream>

#include "framelab/experiment.hpp"

using namespace framelab;

int main(int argc, char** argv) {
    CLI::App app{"frame analysis workbench"};
    app.set_version_flag("--version", kToolVersion);

    std::string config_path, out_path, format, demo_name, command, input;
    double tol_rank = -1.0, tol_residual = -1.0;
    std::uint64_t seed = 0;
    bool have_seed = false;
    std::string params_inline;

    app.add_option("--config", config_path, "experiment config JSON")->envname("FRAMELAB_CONFIG");
    app.add_option("--out", out_path, "output path (default stdout)")->envname("FRAMELAB_OUT");
    app.add_option("--format", format, "json|csv")->envname("FRAMELAB_FORMAT");
    app.add_option("--tol-rank", tol_rank, "relative rank cutoff")->envname("FRAMELAB_TOL_RANK");
    app.add_option("--tol-residual", tol_residual, "residual tolerance")
        ->envname("FRAMELAB_TOL_RESIDUAL");
    auto* seed_opt =
        app.add_option("--seed", seed, "seed for random fixtures")->envname("FRAMELAB_SEED");
    app.add_option("--demo", demo_name, "run a named demo (aldroubi, sinc-half-shift, "
                                        "gabor-thirds, two-onb-alternate)")
        ->envname("FRAMELAB_DEMO");
    app.add_option("command", command, "analyze|represent|gabor|shiftinv|sweep|demo");
    app.add_option("input", input, "family/spectrum file or builtin name");
    app.add_option("--params", params_inline, "inline params JSON object");

    CLI11_PARSE(app, argc, argv);
    have_seed = seed_opt->count() > 0;

    try {
        Json cfg_json;
        if (!config_path.empty()) {
            cfg_json = load_json_file(config_path);
        } else if (!demo_name.empty()) {
            cfg_json = Json{{"command", "demo"}, {"input", demo_name}};
        } else if (!command.empty()) {
            cfg_json = Json{{"command", command}, {"input", input}};
        } else {
            std::cerr << app.help();
            return 2;
        }
        if (!params_inline.empty()) {
            try {
                cfg_json["params"] = Json::parse(params_inline);
            } catch (const Json::exception& e) {
                throw Error(ErrorKind::Config, std::string("--params: ") + e.what());
            }
        }
        // Flag overrides on top of the config file.
        if (!out_path.empty()) cfg_json["out"] = out_path;
        if (!format.empty()) cfg_json["format"] = format;
        if (have_seed) cfg_json["seed"] = seed;
        if (tol_rank > 0) cfg_json["tolerance"]["rank_rel"] = tol_rank;
        if (tol_residual > 0) cfg_json["tolerance"]["residual_abs"] = tol_residual;

        const ExperimentConfig config = ExperimentConfig::from_json(cfg_json);
        emit(run(config), config);
        return 0;
    } catch (const Error& e) {
        std::cerr << Json{{"error", {{"kind", e.kind_name()}, {"message", e.what()}}}}.dump(2)
                  << "\n";
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        std::cerr << Json{{"error", {{"kind", "internal"}, {"message", e.what()}}}}.dump(2)
                  << "\n";
        return 1;
    }
}
