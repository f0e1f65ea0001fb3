#ifndef QREPNET_SWEEPS_HPP
#define QREPNET_SWEEPS_HPP

#include <optional>
#include <string>
#include <vector>

#include "qrepnet/config.hpp"
#include "qrepnet/optimize.hpp"
#include "qrepnet/types.hpp"

namespace qrepnet {

// Value with 9 significant digits, the fixed width of every float column.
std::string fmt_g9(Real v);

struct QueueWaitRow {
    Real lambda_mhz;
    Real gamma_mhz;
    int capacity;
    std::string backend;
    Real mean_wait_s;
    Real blocking_probability;
    Real wait_stderr_s;
};

struct FidelitySweepRow {
    Real length_km;
    int edge_count;
    int capacity;
    Real lambda_mhz;
    Real gamma_mhz;
    Real t_swap_s;
    Real t_queue_s;
    Real t_total_s;
    Real fidelity;
    Real cost;
};

struct DecodeErrorRow {
    int code_size;
    int edge_count;
    int capacity;
    std::string decoder;
    Real flip_probability;
    Real logical_error_exact;
    Real logical_error_mc;
    Real mc_stderr;
    long trials;
    std::uint64_t seed;
};

struct OptimizeRun {
    std::string decoder;
    std::vector<EvalRow> table;
    std::optional<EvalRow> best;
    // Closest miss when nothing is feasible; empty otherwise.
    std::optional<EvalRow> best_infeasible;
    long feasible_count = 0;
    std::string message;
};

struct HeadlineReport {
    bool available = false;
    int edge_count_m = 0;
    Real rate_hz = 0;
    Real accuracy = 0;
    std::string verdict;     // pass | fail | N.A.
    std::string annotation;  // one-line explanation of the verdict
};

// Exact chain, simulation and closed-form waits side by side for every
// (lambda, gamma, capacity) cell. Closed-form cells that are degenerate
// come back as NaN, and only the simulation rows carry a standard error.
std::vector<QueueWaitRow> run_queue_wait(const ExperimentConfig& cfg);

std::vector<FidelitySweepRow> run_fidelity_sweep(const ExperimentConfig& cfg);

// Both decoders on every (K, M, capacity) grid point.
std::vector<DecodeErrorRow> run_decode_error(const ExperimentConfig& cfg);

// Exhaustive search over the code grid; an infeasible grid still returns
// the full table plus the closest miss in `message`.
OptimizeRun run_optimize(const ExperimentConfig& cfg, DecoderKind decoder);

// Rate and accuracy of the (K=7, 9 memory units, lookup-table) reference
// point, annotated pass/fail against a >35 kHz, >0.85 target.
HeadlineReport headline_report(const ExperimentConfig& cfg);

std::string queue_wait_csv(const std::vector<QueueWaitRow>& rows);
std::string fidelity_sweep_csv(const std::vector<FidelitySweepRow>& rows);
std::string decode_error_csv(const std::vector<DecodeErrorRow>& rows);
std::string optimize_csv(const std::vector<OptimizeRun>& runs);

std::string queue_wait_json(const std::vector<QueueWaitRow>& rows);
std::string fidelity_sweep_json(const std::vector<FidelitySweepRow>& rows);
std::string decode_error_json(const std::vector<DecodeErrorRow>& rows);
std::string optimize_json(const std::vector<OptimizeRun>& runs);
std::string summary_json(const std::vector<OptimizeRun>& runs, const HeadlineReport& headline);

// Runs all four sweeps and writes one file per sweep plus a summary into
// out_dir; returns the paths written. Fully determined by cfg.
std::vector<std::string> reproduce_figures(const ExperimentConfig& cfg,
                                           const std::string& out_dir, OutputFormat format);

}  // namespace qrepnet

#endif
