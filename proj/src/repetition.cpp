#include "qrepnet/repetition.hpp"

#include <bit>
#include <cmath>
#include <optional>

#include "qrepnet/errors.hpp"
#include "qrepnet/rng.hpp"

namespace qrepnet {

namespace {

// Structural bound: patterns and syndromes live in 32-bit words.
constexpr int _max_qubits = 31;
// Table and enumeration bound.
constexpr int _max_table_qubits = 25;

void _check_width(int num_qubits) {
    if (num_qubits < 1 || num_qubits > _max_qubits)
        throw InvalidInputError("qubit count out of range");
}

void _check_code(const CodeConfig& config) {
    _check_width(config.num_qubits);
    if (config.flip_probabilities.size() != static_cast<size_t>(config.num_qubits))
        throw InvalidInputError("flip probability count does not match qubit count");
    for (Real p : config.flip_probabilities)
        if (!(p >= 0 && p <= 1)) throw InvalidProbabilityError("flip probability outside [0, 1]");
}

void _check_table_size(int num_qubits) {
    if (num_qubits > _max_table_qubits)
        throw CapacityError("enumeration limited to 25 qubits");
}

std::uint32_t _mask(int num_qubits) { return (std::uint32_t(1) << num_qubits) - 1; }

// Pattern with qubit 0 unflipped that reproduces the syndrome: bit i is
// the parity of the first i syndrome bits.
std::uint32_t _base_candidate(std::uint32_t syndrome, int num_qubits) {
    std::uint32_t pattern = 0;
    std::uint32_t bit = 0;
    for (int i = 1; i < num_qubits; ++i) {
        bit ^= (syndrome >> (i - 1)) & 1u;
        pattern |= bit << i;
    }
    return pattern;
}

Real _pattern_probability(const CodeConfig& config, std::uint32_t pattern) {
    Real prob = 1;
    for (int i = 0; i < config.num_qubits; ++i) {
        const Real p = config.flip_probabilities[static_cast<size_t>(i)];
        prob *= ((pattern >> i) & 1u) ? p : 1 - p;
    }
    return prob;
}

}  // namespace

Real flip_probability_from_fidelity(Real fidelity, FlipMapping mapping) {
    if (!(fidelity >= 0 && fidelity <= 1))
        throw InvalidInputError("fidelity outside [0, 1]");
    switch (mapping) {
        case FlipMapping::bitflip:
            return 1 - fidelity;
        case FlipMapping::werner:
        default:
            return 2 * (1 - fidelity) / 3;
    }
}

bool any_flip_above_half(const CodeConfig& config) {
    _check_code(config);
    for (Real p : config.flip_probabilities)
        if (p > 0.5) return true;
    return false;
}

std::uint32_t syndrome_bits(std::uint32_t pattern, int num_qubits) {
    _check_width(num_qubits);
    if (pattern >> num_qubits)
        throw InvalidInputError("pattern has bits beyond the qubit count");
    return (pattern ^ (pattern >> 1)) & _mask(num_qubits - 1);
}

std::uint32_t decode_mwm(std::uint32_t syndrome, int num_qubits) {
    _check_width(num_qubits);
    if (num_qubits > 1 && (syndrome >> (num_qubits - 1)))
        throw InvalidInputError("syndrome has bits beyond the parity count");
    const std::uint32_t base = _base_candidate(syndrome, num_qubits);
    const std::uint32_t flipped = ~base & _mask(num_qubits);
    const int weight_base = std::popcount(base);
    const int weight_flipped = num_qubits - weight_base;
    return weight_flipped < weight_base ? flipped : base;
}

LookupTable::LookupTable(const CodeConfig& config) : num_qubits_(config.num_qubits) {
    _check_code(config);
    _check_table_size(config.num_qubits);
    const std::uint32_t n_syndromes = std::uint32_t(1) << (config.num_qubits - 1);
    table_.resize(n_syndromes);
    for (std::uint32_t s = 0; s < n_syndromes; ++s) {
        const std::uint32_t base = _base_candidate(s, config.num_qubits);
        const std::uint32_t flipped = ~base & _mask(config.num_qubits);
        const Real l_base = _pattern_probability(config, base);
        const Real l_flipped = _pattern_probability(config, flipped);
        table_[s] = l_flipped > l_base ? flipped : base;
    }
}

std::uint32_t LookupTable::correction(std::uint32_t syndrome) const {
    if (syndrome >= table_.size()) throw InvalidInputError("syndrome out of range");
    return table_[syndrome];
}

Real logical_error_exact(const CodeConfig& config, DecoderKind decoder) {
    _check_code(config);
    _check_table_size(config.num_qubits);

    std::optional<LookupTable> lut;
    if (decoder == DecoderKind::lut) lut.emplace(config);

    const std::uint32_t n_syndromes = std::uint32_t(1) << (config.num_qubits - 1);
    Real failure = 0;
    for (std::uint32_t s = 0; s < n_syndromes; ++s) {
        const std::uint32_t chosen =
            lut ? lut->correction(s) : decode_mwm(s, config.num_qubits);
        const std::uint32_t rejected = ~chosen & _mask(config.num_qubits);
        failure += _pattern_probability(config, rejected);
    }
    return failure;
}

DecodingReport logical_error_mc(const CodeConfig& config, DecoderKind decoder, long trials,
                                std::uint64_t seed) {
    _check_code(config);
    if (trials < 10000)
        throw InvalidInputError("trial count must be at least 10^4 for a stable estimate");

    DecodingReport report;
    report.decoder = decoder;
    report.trials = trials;
    report.logical_error_exact = logical_error_exact(config, decoder);

    std::optional<LookupTable> lut;
    if (decoder == DecoderKind::lut) lut.emplace(config);

    std::mt19937_64 rng(seed);
    long failures = 0;
    for (long t = 0; t < trials; ++t) {
        std::uint32_t pattern = 0;
        for (int i = 0; i < config.num_qubits; ++i)
            pattern |= std::uint32_t(uniform01(rng) <
                                     config.flip_probabilities[static_cast<size_t>(i)])
                       << i;
        const std::uint32_t s = syndrome_bits(pattern, config.num_qubits);
        const std::uint32_t chosen = lut ? lut->correction(s) : decode_mwm(s, config.num_qubits);
        failures += chosen != pattern;
    }

    report.logical_error_estimate = static_cast<Real>(failures) / static_cast<Real>(trials);
    report.estimate_stderr = std::sqrt(report.logical_error_estimate *
                                       (1 - report.logical_error_estimate) /
                                       static_cast<Real>(trials));
    return report;
}

}  // namespace qrepnet
