#ifndef QREPNET_PATH_HPP
#define QREPNET_PATH_HPP

#include <cstdint>
#include <vector>

#include "qrepnet/channel.hpp"
#include "qrepnet/queueing.hpp"
#include "qrepnet/swap.hpp"
#include "qrepnet/types.hpp"

namespace qrepnet {

enum class QueueBackend { markov, analytic, des };

// Where the memory dwell is charged. Every edge holds its qubit for the
// full total latency by default; the alternative charges the dwell on the
// first edge only.
enum class DwellMode { per_edge, once_per_path };

struct ChannelParams {
    Real attenuation_db_per_km;
    Real light_speed_mps;
    Real memory_time_constant_s;
};

struct PathConfig {
    Real total_length_km;
    int edge_count_m;
    int memory_units_i;
    PureState input_state;
};

struct PathOptions {
    QueueBackend backend = QueueBackend::markov;
    DwellMode dwell = DwellMode::per_edge;
    SwapExponent exponent = SwapExponent::standard;
    long des_served = 1000000;
    std::uint64_t des_seed = 1;
};

struct PathReport {
    std::vector<Real> edge_costs;
    Real fidelity;
    Real cost;
    Real t_swap_s;
    Real t_queue_s;
    Real t_total_s;
};

// One merge step: F' = F f + (1 - F)(1 - f) / 3. Fixed point at 1/4.
Real compose_swap_fidelity(Real fidelity_acc, Real fidelity_edge);

// Left fold of compose_swap_fidelity; a single edge is its own fidelity.
Real path_fidelity(const std::vector<Real>& edge_fidelities);

// Full path evaluation: queueing delay (chosen backend) plus merge latency
// give the total dwell, each edge is costed under fiber + memory noise,
// and the per-edge fidelities are folded into the end-to-end figure.
// The closed-form queue backend falls back to the exact chain whenever its
// expression is degenerate or yields a negative or non-finite wait.
PathReport evaluate_path(const PathConfig& path, const QueueParams& queue,
                         const ChannelParams& channel, const PathOptions& options = {});

}  // namespace qrepnet

#endif
