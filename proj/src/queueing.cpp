#include "qrepnet/queueing.hpp"

#include <algorithm>
#include <cmath>

#include "qrepnet/errors.hpp"
#include "qrepnet/rng.hpp"

namespace qrepnet {

namespace {

void _check_params(const QueueParams& p) {
    if (!(p.arrival_rate_hz > 0) || !std::isfinite(p.arrival_rate_hz))
        throw InvalidConfigError("arrival rate must be positive");
    if (!(p.serving_rate_hz > 0) || !std::isfinite(p.serving_rate_hz))
        throw InvalidConfigError("serving rate must be positive");
    if (p.capacity < 1) throw InvalidConfigError("capacity must be >= 1");
}

}  // namespace

std::vector<Real> b_coefficients(int n, Real rho) {
    if (n < 0) throw InvalidInputError("coefficient order must be >= 0");
    if (!(rho > 0) || !std::isfinite(rho)) throw InvalidInputError("rho must be positive");

    std::vector<Real> b(static_cast<size_t>(n) + 1);
    b[0] = 1;
    for (int k = 1; k <= n; ++k) {
        Real sum = 0;
        Real sign_over_fact = 1;  // (-1)^i / i!
        Real rho_pow = 1;         // rho^i
        for (int i = 1; i <= k; ++i) {
            sign_over_fact *= -Real(1) / i;
            rho_pow *= rho;
            sum += sign_over_fact * std::pow(Real(k - i), i) * std::exp((k - i) * rho) * rho_pow;
        }
        b[static_cast<size_t>(k)] = sum;
    }
    return b;
}

Real mean_wait_analytic(const QueueParams& params) {
    _check_params(params);
    const int cap = params.capacity;
    const Real rho = params.arrival_rate_hz / params.serving_rate_hz;

    const std::vector<Real> b = b_coefficients(cap - 1, rho);
    const Real denom = rho * b[static_cast<size_t>(cap - 1)];
    if (denom == 0)
        throw DegenerateFormulaError("closed-form wait undefined: rho * b_{I-1} is zero");

    Real partial = 0;
    for (int i = 0; i < cap; ++i) partial += b[static_cast<size_t>(i)];
    return (cap - 1 - (partial - cap) / denom) / params.serving_rate_hz;
}

QueueStats mean_wait_markov(const QueueParams& params) {
    _check_params(params);
    const int cap = params.capacity;
    const Real rho = params.arrival_rate_hz / params.serving_rate_hz;

    // Chain embedded at departures; the state is the number left behind,
    // 0..cap-1. From state j >= 1 the next departure leaves
    // j - 1 + min(A, cap - j) customers, A ~ Poisson(rho); from the empty
    // state the next arrival restarts the cycle, so row 0 equals row 1.
    VectorXr pi;
    if (cap == 1) {
        pi = VectorXr::Ones(1);
    } else {
        std::vector<Real> a(static_cast<size_t>(cap), 0);
        a[0] = std::exp(-rho);
        for (int k = 1; k < cap; ++k) a[static_cast<size_t>(k)] = a[static_cast<size_t>(k - 1)] * rho / k;

        MatrixXr P = MatrixXr::Zero(cap, cap);
        for (int j = 0; j < cap; ++j) {
            const int base = std::max(j - 1, 0);
            Real mass = 0;
            for (int m = 0; base + m <= cap - 2; ++m) {
                P(j, base + m) = a[static_cast<size_t>(m)];
                mass += a[static_cast<size_t>(m)];
            }
            P(j, cap - 1) = 1 - mass;
        }

        MatrixXr sys = P.transpose() - MatrixXr::Identity(cap, cap);
        sys.row(cap - 1).setOnes();
        VectorXr rhs = VectorXr::Zero(cap);
        rhs(cap - 1) = 1;
        pi = sys.fullPivLu().solve(rhs);
        if (!pi.allFinite()) throw NumericalError("stationary solve failed");
        if (pi.minCoeff() < -1e-9) throw NumericalError("stationary solve went negative");
        pi = pi.cwiseMax(0.0);
        pi /= pi.sum();
    }

    // Departures see the same occupancy as accepted arrivals, which pins
    // the time-stationary law: p_j = pi_j / (pi_0 + rho) for j < cap and
    // the blocking mass is whatever normalization leaves.
    const Real denom = pi(0) + rho;
    QueueStats stats;
    stats.stationary_distribution.assign(static_cast<size_t>(cap) + 1, 0);
    for (int j = 0; j < cap; ++j)
        stats.stationary_distribution[static_cast<size_t>(j)] = pi(j) / denom;
    stats.stationary_distribution[static_cast<size_t>(cap)] =
        std::max(Real(0), 1 - Real(1) / denom);
    {
        Real total = 0;
        for (Real v : stats.stationary_distribution) total += v;
        for (Real& v : stats.stationary_distribution) v /= total;
    }

    Real mean_n = 0;
    for (int j = 0; j <= cap; ++j) mean_n += j * stats.stationary_distribution[static_cast<size_t>(j)];
    stats.mean_number_in_system = mean_n;
    stats.blocking_probability = stats.stationary_distribution[static_cast<size_t>(cap)];

    const Real p_busy = 1 - stats.stationary_distribution[0];
    const Real mean_queue = std::max(Real(0), mean_n - p_busy);
    const Real accepted_rate = params.arrival_rate_hz * (1 - stats.blocking_probability);
    stats.mean_wait_s = accepted_rate > 0 ? mean_queue / accepted_rate : 0;
    return stats;
}

QueueStats simulate_queue(const QueueParams& params, long served_target, std::uint64_t seed) {
    _check_params(params);
    if (served_target < 10000)
        throw InvalidInputError("served target must be at least 10^4 for a stable estimate");

    const int cap = params.capacity;
    const Real service_s = 1 / params.serving_rate_hz;
    const Real arrival_hz = params.arrival_rate_hz;

    std::mt19937_64 rng(seed);

    // Departure times of accepted-but-not-departed customers, oldest first.
    std::vector<Real> ring(static_cast<size_t>(cap));
    int head = 0;
    int count = 0;

    std::vector<Real> hist(static_cast<size_t>(cap) + 1, 0);
    Real last_event = 0;
    auto advance_to = [&](Real t_new, int occupancy) {
        hist[static_cast<size_t>(occupancy)] += t_new - last_event;
        last_event = t_new;
    };

    constexpr int kBatches = 100;
    const long batch_size = served_target / kBatches;
    Real batch_sum[kBatches] = {0};

    Real t = 0;
    Real wait_total = 0;
    long accepted = 0;
    long dropped = 0;

    while (accepted < served_target) {
        t += exponential(rng, arrival_hz);
        while (count > 0 && ring[static_cast<size_t>(head)] <= t) {
            advance_to(ring[static_cast<size_t>(head)], count);
            head = (head + 1) % cap;
            --count;
        }
        advance_to(t, count);
        if (count == cap) {
            ++dropped;
            continue;
        }
        const Real start =
            count > 0 ? ring[static_cast<size_t>((head + count - 1) % cap)] : t;
        ring[static_cast<size_t>((head + count) % cap)] = start + service_s;
        ++count;

        const Real wait = start - t;
        wait_total += wait;
        const long batch = std::min(accepted / batch_size, long(kBatches - 1));
        batch_sum[batch] += wait;
        ++accepted;
    }

    while (count > 0) {
        advance_to(ring[static_cast<size_t>(head)], count);
        head = (head + 1) % cap;
        --count;
    }

    QueueStats stats;
    stats.served = accepted;
    stats.mean_wait_s = wait_total / static_cast<Real>(accepted);
    stats.blocking_probability =
        static_cast<Real>(dropped) / static_cast<Real>(accepted + dropped);

    const Real total_time = last_event;
    stats.stationary_distribution.assign(hist.begin(), hist.end());
    Real mean_n = 0;
    for (size_t j = 0; j < stats.stationary_distribution.size(); ++j) {
        stats.stationary_distribution[j] /= total_time;
        mean_n += static_cast<Real>(j) * stats.stationary_distribution[j];
    }
    stats.mean_number_in_system = mean_n;

    // Batch means absorb the autocorrelation of consecutive waits.
    Real var = 0;
    for (int i = 0; i < kBatches; ++i) {
        const long n_i = i == kBatches - 1 ? served_target - batch_size * (kBatches - 1) : batch_size;
        const Real diff = batch_sum[i] / static_cast<Real>(n_i) - stats.mean_wait_s;
        var += diff * diff;
    }
    var /= kBatches - 1;
    stats.mean_wait_stderr_s = std::sqrt(var / kBatches);
    return stats;
}

Real t_total_overhead(Real t_swap_s, Real t_queue_s) {
    if (t_swap_s < 0 || t_queue_s < 0) throw InvalidInputError("latency terms must be >= 0");
    return t_swap_s + t_queue_s;
}

}  // namespace qrepnet
