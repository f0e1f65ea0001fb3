#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qrepnet/config.hpp"
#include "qrepnet/errors.hpp"
#include "qrepnet/sweeps.hpp"

namespace {

using namespace qrepnet;

void write_output(const std::string& content, const std::string& out_path) {
    if (out_path.empty()) {
        std::fwrite(content.data(), 1, content.size(), stdout);
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw Error("cannot open " + out_path + " for writing");
    out << content;
    if (!out) throw Error("failed writing " + out_path);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"multi-path entanglement pipeline: queueing delay, end-to-end fidelity, "
                 "repetition-code decoding and grid-search optimization"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_path;
    OutputFormat format = OutputFormat::csv;
    std::uint64_t seed = 0;
    long trials = 0;
    long des_served = 0;
    Real fidelity_threshold = 0;
    DecoderKind decoder = DecoderKind::lut;
    FlipMapping mapping = FlipMapping::werner;
    QueueBackend backend = QueueBackend::markov;
    bool compat_exponent = false;
    bool compat_constraint = false;

    auto* o_config =
        app.add_option("--config", config_path, "run parameters file (key = value lines)")
            ->check(CLI::ExistingFile);
    auto* o_seed = app.add_option("--seed", seed, "root seed for every derived random stream");
    auto* o_trials = app.add_option("--trials", trials, "Monte Carlo decoding trials")
                         ->check(CLI::PositiveNumber);
    auto* o_des =
        app.add_option("--des-served", des_served, "served customers per simulated queue run")
            ->check(CLI::PositiveNumber);
    app.add_option("--out", out_path,
                   "output file (directory for reproduce-figures); stdout by default");
    const std::map<std::string, OutputFormat> format_names{{"csv", OutputFormat::csv},
                                                           {"json", OutputFormat::json}};
    app.add_option("--format", format, "output format")
        ->transform(CLI::CheckedTransformer(format_names, CLI::ignore_case));
    const std::map<std::string, DecoderKind> decoder_names{{"mwm", DecoderKind::mwm},
                                                           {"lut", DecoderKind::lut}};
    auto* o_decoder = app.add_option("--decoder", decoder, "repetition-code decoder")
                          ->transform(CLI::CheckedTransformer(decoder_names, CLI::ignore_case));
    const std::map<std::string, FlipMapping> mapping_names{{"werner", FlipMapping::werner},
                                                           {"bitflip", FlipMapping::bitflip}};
    auto* o_mapping =
        app.add_option("--mapping", mapping, "fidelity to flip-probability mapping")
            ->transform(CLI::CheckedTransformer(mapping_names, CLI::ignore_case));
    const std::map<std::string, QueueBackend> backend_names{{"markov", QueueBackend::markov},
                                                            {"analytic", QueueBackend::analytic},
                                                            {"des", QueueBackend::des}};
    auto* o_backend =
        app.add_option("--queue-backend", backend, "queueing delay backend for path evaluation")
            ->transform(CLI::CheckedTransformer(backend_names, CLI::ignore_case));
    auto* o_threshold = app.add_option("--fidelity-threshold", fidelity_threshold,
                                       "feasibility threshold for optimize");
    auto* o_exponent = app.add_flag("--compat-eq13b-exponent", compat_exponent,
                                    "double each merge round's latency term (comparison runs)");
    auto* o_literal =
        app.add_flag("--compat-literal-constraint", compat_constraint,
                     "accept rows whose path cost exceeds the threshold instead of requiring "
                     "the fidelity to reach it");

    auto* cmd_queue = app.add_subcommand(
        "queue-wait", "mean queueing delay on the (lambda, gamma, capacity) grid, with the "
                      "exact chain, the simulation and the closed form side by side");
    auto* cmd_sweep = app.add_subcommand(
        "fidelity-sweep",
        "end-to-end fidelity and cost over path length, edge count and memory units");
    auto* cmd_decode = app.add_subcommand(
        "decode-error", "exact and Monte Carlo logical error rates for both decoders");
    auto* cmd_optimize = app.add_subcommand(
        "optimize", "exhaustive grid search for the best accuracy-weighted qubit rate");
    auto* cmd_reproduce = app.add_subcommand(
        "reproduce-figures",
        "run every sweep and write one data file per figure plus a summary");
    for (auto* cmd : {cmd_queue, cmd_sweep, cmd_decode, cmd_optimize, cmd_reproduce})
        cmd->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        int code = app.exit(err);
        return code == 0 ? 0 : 1;
    }

    try {
        ExperimentConfig cfg;
        if (o_config->count()) cfg = ExperimentConfig::parse_file(config_path);
        if (o_seed->count()) cfg.seed = seed;
        if (o_trials->count()) cfg.trials = trials;
        if (o_des->count()) cfg.des_served = des_served;
        if (o_decoder->count()) cfg.decoder = decoder;
        if (o_mapping->count()) cfg.mapping = mapping;
        if (o_backend->count()) cfg.queue_backend = backend;
        if (o_threshold->count()) cfg.fidelity_threshold = fidelity_threshold;
        if (o_exponent->count()) cfg.doubled_swap_exponent = true;
        if (o_literal->count()) cfg.constraint_on_cost = true;
        bool csv = format == OutputFormat::csv;

        if (cmd_queue->parsed()) {
            auto rows = run_queue_wait(cfg);
            write_output(csv ? queue_wait_csv(rows) : queue_wait_json(rows), out_path);
        } else if (cmd_sweep->parsed()) {
            auto rows = run_fidelity_sweep(cfg);
            write_output(csv ? fidelity_sweep_csv(rows) : fidelity_sweep_json(rows), out_path);
        } else if (cmd_decode->parsed()) {
            auto rows = run_decode_error(cfg);
            write_output(csv ? decode_error_csv(rows) : decode_error_json(rows), out_path);
        } else if (cmd_optimize->parsed()) {
            std::vector<OptimizeRun> runs{run_optimize(cfg, cfg.decoder)};
            write_output(csv ? optimize_csv(runs) : optimize_json(runs), out_path);
            std::cerr << runs.front().message << "\n";
            if (!runs.front().best) return 2;
        } else if (cmd_reproduce->parsed()) {
            std::string dir = out_path.empty() ? "figures" : out_path;
            for (const std::string& file : reproduce_figures(cfg, dir, format))
                std::cout << file << "\n";
        }
        return 0;
    } catch (const Error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    }
}
