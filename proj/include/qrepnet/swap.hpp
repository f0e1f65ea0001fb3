#ifndef QREPNET_SWAP_HPP
#define QREPNET_SWAP_HPP

#include "qrepnet/types.hpp"

namespace qrepnet {

// Exponent convention for the per-round latency term. The doubled variant
// exists only for comparison runs and is never the default.
enum class SwapExponent { standard, doubled };

// Merging schedule of a segmented path: edges are pairwise joined over
// iterations_j rounds, each round waiting on classical signalling across
// the (uniform) edge length.
struct SwapSchedule {
    Real edge_length_km;
    Real light_speed_mps;
    int iterations_j;

    static SwapSchedule for_edge_count(Real edge_length_km, Real light_speed_mps,
                                       int edge_count_m);
};

// Smallest j with 2^j >= m; 0 for a single edge.
int swap_iterations(int edge_count_m);

// Total merge latency: sum over rounds of 2^(j-1) * l / c (or 2^j * l / c
// under the doubled convention). Closed form (2^J - 1) * l / c.
Real t_swap(const SwapSchedule& schedule, SwapExponent exponent = SwapExponent::standard);

}  // namespace qrepnet

#endif
