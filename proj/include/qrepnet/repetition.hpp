#ifndef QREPNET_REPETITION_HPP
#define QREPNET_REPETITION_HPP

#include <cstdint>
#include <vector>

#include "qrepnet/types.hpp"

namespace qrepnet {

enum class DecoderKind { mwm, lut };

// How an end-to-end fidelity turns into a per-qubit flip probability:
// werner spreads the infidelity over the three Pauli axes (two of which
// flip the bit), bitflip charges all of it to X.
enum class FlipMapping { werner, bitflip };

// K-qubit repetition code; bit i of a pattern marks a flip on qubit i.
struct CodeConfig {
    int num_qubits;
    std::vector<Real> flip_probabilities;
};

struct DecodingReport {
    DecoderKind decoder;
    Real logical_error_exact;
    Real logical_error_estimate;
    Real estimate_stderr;
    long trials;
};

Real flip_probability_from_fidelity(Real fidelity, FlipMapping mapping);

// True when some qubit flips more often than not; decoding still runs but
// the majority signal is inverted on that qubit.
bool any_flip_above_half(const CodeConfig& config);

// K-1 adjacent parities: bit i = pattern_i xor pattern_{i+1}.
std::uint32_t syndrome_bits(std::uint32_t pattern, int num_qubits);

// Of the two flip patterns consistent with the syndrome, returns the one
// of smaller Hamming weight; a tie keeps qubit 0 unflipped.
std::uint32_t decode_mwm(std::uint32_t syndrome, int num_qubits);

// Max-likelihood correction per syndrome under independent flips; ties
// break as in decode_mwm.
class LookupTable {
  public:
    explicit LookupTable(const CodeConfig& config);

    std::uint32_t correction(std::uint32_t syndrome) const;
    int num_qubits() const { return num_qubits_; }

  private:
    int num_qubits_;
    std::vector<std::uint32_t> table_;
};

// Exact logical error probability by enumerating every syndrome's two
// consistent patterns and charging the one the decoder rejects.
Real logical_error_exact(const CodeConfig& config, DecoderKind decoder);

// Seeded Monte Carlo estimate with binomial standard error; the report
// carries the exact value alongside for cross-checking.
DecodingReport logical_error_mc(const CodeConfig& config, DecoderKind decoder, long trials,
                                std::uint64_t seed);

}  // namespace qrepnet

#endif
