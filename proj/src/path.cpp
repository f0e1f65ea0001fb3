#include "qrepnet/path.hpp"

#include <cmath>
#include <limits>

#include "qrepnet/errors.hpp"

namespace qrepnet {

Real compose_swap_fidelity(Real fidelity_acc, Real fidelity_edge) {
    if (!(fidelity_acc >= 0 && fidelity_acc <= 1))
        throw InvalidInputError("accumulated fidelity outside [0, 1]");
    if (!(fidelity_edge >= 0 && fidelity_edge <= 1))
        throw InvalidInputError("edge fidelity outside [0, 1]");
    return fidelity_acc * fidelity_edge +
           (1 - fidelity_acc) * (1 - fidelity_edge) / 3;
}

Real path_fidelity(const std::vector<Real>& edge_fidelities) {
    if (edge_fidelities.empty()) throw InvalidConfigError("path has no edges");
    Real f = edge_fidelities.front();
    if (!(f >= 0 && f <= 1)) throw InvalidInputError("edge fidelity outside [0, 1]");
    for (size_t i = 1; i < edge_fidelities.size(); ++i)
        f = compose_swap_fidelity(f, edge_fidelities[i]);
    return f;
}

namespace {

Real _queue_wait(const QueueParams& queue, const PathOptions& options) {
    switch (options.backend) {
        case QueueBackend::des:
            return simulate_queue(queue, options.des_served, options.des_seed).mean_wait_s;
        case QueueBackend::analytic: {
            Real w = std::numeric_limits<Real>::quiet_NaN();
            try {
                w = mean_wait_analytic(queue);
            } catch (const DegenerateFormulaError&) {
            }
            if (std::isfinite(w) && w >= 0) return w;
            return mean_wait_markov(queue).mean_wait_s;
        }
        case QueueBackend::markov:
        default:
            return mean_wait_markov(queue).mean_wait_s;
    }
}

}  // namespace

PathReport evaluate_path(const PathConfig& path, const QueueParams& queue,
                         const ChannelParams& channel, const PathOptions& options) {
    if (!(path.total_length_km > 0)) throw InvalidConfigError("path length must be > 0");
    if (path.edge_count_m < 1) throw InvalidConfigError("edge count must be >= 1");
    if (path.memory_units_i < 1) throw InvalidConfigError("memory units must be >= 1");
    if (queue.capacity != path.memory_units_i)
        throw InvalidConfigError("queue capacity must match the path's memory units");

    const Real edge_length_km = path.total_length_km / path.edge_count_m;
    const SwapSchedule schedule = SwapSchedule::for_edge_count(
        edge_length_km, channel.light_speed_mps, path.edge_count_m);

    PathReport report;
    report.t_swap_s = t_swap(schedule, options.exponent);
    report.t_queue_s = _queue_wait(queue, options);
    report.t_total_s = t_total_overhead(report.t_swap_s, report.t_queue_s);

    const FiberParams fiber{channel.attenuation_db_per_km, edge_length_km};
    report.edge_costs.reserve(static_cast<size_t>(path.edge_count_m));
    std::vector<Real> fidelities;
    fidelities.reserve(static_cast<size_t>(path.edge_count_m));
    for (int e = 0; e < path.edge_count_m; ++e) {
        const bool charged = options.dwell == DwellMode::per_edge || e == 0;
        const MemoryParams memory{charged ? report.t_total_s : 0,
                                  channel.memory_time_constant_s};
        const Real cost = edge_cost(path.input_state, fiber, memory);
        report.edge_costs.push_back(cost);
        fidelities.push_back(1 - cost);
    }

    report.fidelity = path_fidelity(fidelities);
    report.cost = 1 - report.fidelity;
    return report;
}

}  // namespace qrepnet
