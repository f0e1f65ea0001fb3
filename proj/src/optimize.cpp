#include "qrepnet/optimize.hpp"

#include <cmath>

namespace qrepnet {

Real raw_rate(Real t_total_s) {
    if (t_total_s < 0 || !std::isfinite(t_total_s))
        throw InvalidInputError("total latency must be finite and >= 0");
    if (t_total_s == 0) throw InfiniteRateError("zero total latency has no finite rate");
    return 1 / t_total_s;
}

EvalRow evaluate_config(const PipelineParams& params, int edge_count_m, int code_size_k,
                        int capacity_i) {
    const QueueParams queue{params.arrival_rate_hz, params.serving_rate_hz, capacity_i};
    const PathConfig path{params.total_length_km, edge_count_m, capacity_i,
                          params.input_state};
    const ChannelParams channel{params.attenuation_db_per_km, params.light_speed_mps,
                                params.memory_time_constant_s};
    const PathReport report = evaluate_path(path, queue, channel, params.path_options);

    const Real flip = flip_probability_from_fidelity(report.fidelity, params.mapping);
    const CodeConfig code{code_size_k,
                          std::vector<Real>(static_cast<size_t>(code_size_k), flip)};
    const Real logical_error = logical_error_exact(code, params.decoder);

    EvalRow row;
    row.edge_count_m = edge_count_m;
    row.code_size_k = code_size_k;
    row.capacity_i = capacity_i;
    row.rate_hz = raw_rate(report.t_total_s);
    row.accuracy = 1 - logical_error;
    row.objective_hz = row.rate_hz * row.accuracy;
    row.fidelity = report.fidelity;
    row.flip_probability = flip;
    row.feasible = params.constraint_on_cost
                       ? report.cost > params.fidelity_threshold
                       : report.fidelity >= params.fidelity_threshold;
    return row;
}

namespace {

// Higher objective wins; exact ties fall to the smaller grid coordinates.
bool _better(const EvalRow& a, const EvalRow& b) {
    if (a.objective_hz != b.objective_hz) return a.objective_hz > b.objective_hz;
    if (a.edge_count_m != b.edge_count_m) return a.edge_count_m < b.edge_count_m;
    if (a.code_size_k != b.code_size_k) return a.code_size_k < b.code_size_k;
    return a.capacity_i < b.capacity_i;
}

}  // namespace

OptimizationResult grid_search(const PipelineParams& params, const GridSpec& grid) {
    if (grid.edge_counts.empty() || grid.code_sizes.empty() || grid.capacities.empty())
        throw InvalidConfigError("search grid has an empty axis");

    std::vector<EvalRow> table;
    table.reserve(grid.edge_counts.size() * grid.code_sizes.size() * grid.capacities.size());
    for (int m : grid.edge_counts)
        for (int k : grid.code_sizes)
            for (int i : grid.capacities) table.push_back(evaluate_config(params, m, k, i));

    const EvalRow* best = nullptr;
    const EvalRow* best_any = nullptr;
    long feasible_count = 0;
    for (const EvalRow& row : table) {
        if (!best_any || _better(row, *best_any)) best_any = &row;
        if (!row.feasible) continue;
        ++feasible_count;
        if (!best || _better(row, *best)) best = &row;
    }

    if (!best)
        throw InfeasibleError("no grid point satisfies the fidelity constraint; closest miss at "
                              "M=" + std::to_string(best_any->edge_count_m) +
                              " K=" + std::to_string(best_any->code_size_k) +
                              " I=" + std::to_string(best_any->capacity_i),
                              *best_any, table);

    return OptimizationResult{*best, std::move(table), feasible_count};
}

}  // namespace qrepnet
