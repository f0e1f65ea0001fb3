#ifndef QREPNET_CONFIG_HPP
#define QREPNET_CONFIG_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "qrepnet/optimize.hpp"
#include "qrepnet/path.hpp"
#include "qrepnet/repetition.hpp"
#include "qrepnet/types.hpp"

namespace qrepnet {

enum class InputStateKind { zero, one, plus, minus };
enum class OutputFormat { csv, json };

// Run parameters for every command, read from `key = value` lines.
// Unknown or repeated keys are errors; anything omitted keeps its default.
// to_text() emits the effective config, and parsing that text back yields
// an identical configuration (shortest round-trip float formatting).
struct ExperimentConfig {
    // Shared physical constants.
    Real light_speed_mps = 2e8;
    Real attenuation_db_per_km = 0.2;
    Real memory_time_constant_ms = 1.0;
    InputStateKind input_state = InputStateKind::zero;

    // queue-wait grid.
    std::vector<Real> queue_lambda_mhz = {0.05, 0.2, 0.5, 1.2};
    std::vector<Real> queue_gamma_mhz = {0.02, 0.025, 0.05, 0.1, 4.41};
    std::vector<int> queue_capacities = {1, 2, 3, 4, 5, 6, 7, 8, 9};

    // fidelity-sweep grid.
    std::vector<Real> sweep_length_km = {80, 120};
    std::vector<int> sweep_edge_counts = {2, 4, 8};
    std::vector<int> sweep_capacities = {1, 3, 5, 7, 9};
    Real sweep_lambda_mhz = 0.2;
    Real sweep_gamma_mhz = 0.025;

    // decode-error and optimize grid.
    Real code_length_km = 80;
    std::vector<int> code_edge_counts = {4, 8};
    std::vector<int> code_qubits = {3, 5, 7};
    std::vector<int> code_capacities = {1, 2, 3, 4, 5, 6, 7, 8, 9};
    Real code_lambda_mhz = 0.2;
    Real code_gamma_mhz = 4.41;

    // Engine selection and knobs.
    DecoderKind decoder = DecoderKind::lut;
    FlipMapping mapping = FlipMapping::werner;
    QueueBackend queue_backend = QueueBackend::markov;
    Real fidelity_threshold = 0.5;
    std::uint64_t seed = 12345;
    long trials = 1000000;
    long des_served = 1000000;
    bool dwell_per_edge = true;
    bool doubled_swap_exponent = false;
    bool constraint_on_cost = false;

    bool operator==(const ExperimentConfig&) const = default;

    static ExperimentConfig parse_text(const std::string& text);
    static ExperimentConfig parse_file(const std::string& path);
    std::string to_text() const;

    Real memory_time_constant_s() const { return memory_time_constant_ms * 1e-3; }
    PureState make_input_state() const;
    PathOptions make_path_options(std::uint64_t des_seed) const;
};

}  // namespace qrepnet

#endif
