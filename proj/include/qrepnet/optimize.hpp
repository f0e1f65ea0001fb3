#ifndef QREPNET_OPTIMIZE_HPP
#define QREPNET_OPTIMIZE_HPP

#include <vector>

#include "qrepnet/errors.hpp"
#include "qrepnet/path.hpp"
#include "qrepnet/repetition.hpp"
#include "qrepnet/types.hpp"

namespace qrepnet {

// Everything held fixed while the grid varies (M, K, memory units).
struct PipelineParams {
    Real total_length_km;
    Real attenuation_db_per_km;
    Real light_speed_mps;
    Real memory_time_constant_s;
    Real arrival_rate_hz;
    Real serving_rate_hz;
    PureState input_state;
    DecoderKind decoder = DecoderKind::lut;
    FlipMapping mapping = FlipMapping::werner;
    Real fidelity_threshold = 0.5;
    // Compatibility switch: accept a row when its path cost exceeds the
    // threshold instead of requiring the fidelity to reach it.
    bool constraint_on_cost = false;
    PathOptions path_options;
};

struct GridSpec {
    std::vector<int> edge_counts;
    std::vector<int> code_sizes;
    std::vector<int> capacities;
};

struct EvalRow {
    int edge_count_m;
    int code_size_k;
    int capacity_i;
    Real rate_hz;
    Real accuracy;
    Real objective_hz;
    Real fidelity;
    Real flip_probability;
    bool feasible;
};

struct OptimizationResult {
    EvalRow best;
    std::vector<EvalRow> table;
    long feasible_count;
};

// Raised when no grid point satisfies the fidelity constraint; carries the
// closest miss and the full table so callers can still report it.
struct InfeasibleError : Error {
    InfeasibleError(const std::string& msg, EvalRow best_row, std::vector<EvalRow> rows)
        : Error(msg), best_infeasible(best_row), table(std::move(rows)) {}
    EvalRow best_infeasible;
    std::vector<EvalRow> table;
};

// 1 / t_total.
Real raw_rate(Real t_total_s);

// One grid point end to end: path evaluation, fidelity-to-flip mapping,
// exact logical error, rate and accuracy-weighted objective.
EvalRow evaluate_config(const PipelineParams& params, int edge_count_m, int code_size_k,
                        int capacity_i);

// Exhaustive sweep. The optimum is the feasible row of highest objective;
// exact objective ties go to the smallest (M, K, I) lexicographically, so
// the result does not depend on iteration order.
OptimizationResult grid_search(const PipelineParams& params, const GridSpec& grid);

}  // namespace qrepnet

#endif
