#ifndef QREPNET_QUEUEING_HPP
#define QREPNET_QUEUEING_HPP

#include <cstdint>
#include <vector>

#include "qrepnet/types.hpp"

namespace qrepnet {

// Single server, deterministic service time 1/serving_rate, Poisson
// arrivals, at most `capacity` customers in the system (service position
// included). Arrivals that find the system full are dropped.
struct QueueParams {
    Real arrival_rate_hz;
    Real serving_rate_hz;
    int capacity;
};

struct QueueStats {
    // Queueing delay of an accepted customer, service time excluded.
    Real mean_wait_s = 0;
    Real mean_number_in_system = 0;
    Real blocking_probability = 0;
    // Time-stationary occupancy distribution over 0..capacity.
    std::vector<Real> stationary_distribution;
    // Batch-means standard error; zero for the exact backend.
    Real mean_wait_stderr_s = 0;
    long served = 0;
};

// Coefficients b_0..b_n of the closed-form waiting-time expression,
// b_0 = 1 and b_k = sum_{i=1..k} ((-1)^i / i!) (k-i)^i e^((k-i) rho) rho^i.
std::vector<Real> b_coefficients(int n, Real rho);

// Closed-form mean wait
//   (I - 1 - (sum_{i<I} b_i - I) / (rho b_{I-1})) / gamma
// evaluated exactly as written. Kept for comparison runs; the b_1 = 0
// degeneracy makes it unusable at capacity 2 and its output diverges from
// the exact chain elsewhere, so nothing in the library asserts against it.
Real mean_wait_analytic(const QueueParams& params);

// Exact stationary analysis via the chain embedded at departures.
QueueStats mean_wait_markov(const QueueParams& params);

// Event-driven simulation, bit-reproducible for a fixed seed. Runs until
// `served_target` customers have been accepted (all of them eventually
// complete service); waits are averaged over accepted customers only.
QueueStats simulate_queue(const QueueParams& params, long served_target, std::uint64_t seed);

// Total per-qubit latency: merge signalling plus queueing delay.
Real t_total_overhead(Real t_swap_s, Real t_queue_s);

}  // namespace qrepnet

#endif
