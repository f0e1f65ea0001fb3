#include "qrepnet/swap.hpp"

#include <cmath>

#include "qrepnet/errors.hpp"

namespace qrepnet {

int swap_iterations(int edge_count_m) {
    if (edge_count_m < 1) throw InvalidConfigError("edge count must be >= 1");
    int j = 0;
    while ((1L << j) < edge_count_m) ++j;
    return j;
}

SwapSchedule SwapSchedule::for_edge_count(Real edge_length_km, Real light_speed_mps,
                                          int edge_count_m) {
    return SwapSchedule{edge_length_km, light_speed_mps, swap_iterations(edge_count_m)};
}

Real t_swap(const SwapSchedule& schedule, SwapExponent exponent) {
    if (!(schedule.light_speed_mps > 0)) throw InvalidConfigError("light speed must be > 0");
    if (schedule.edge_length_km < 0) throw InvalidConfigError("edge length must be >= 0");
    if (schedule.iterations_j < 0 || schedule.iterations_j > 62)
        throw InvalidConfigError("iteration count out of range");

    const Real per_hop_s = schedule.edge_length_km * 1000 / schedule.light_speed_mps;
    const Real rounds = std::ldexp(Real(1), schedule.iterations_j) - 1;
    const Real scale = exponent == SwapExponent::doubled ? 2 : 1;
    return scale * rounds * per_hop_s;
}

}  // namespace qrepnet
