#pragma once

#include <cstddef>
#include <optional>

#include "dmcap/channel.hpp"
#include "dmcap/distribution.hpp"

namespace dmcap {

struct SolverConfig {
    double epsilon = 1e-4;                      // absolute accuracy target
    std::size_t max_iterations = 1'000'000;
    std::optional<Distribution> initial_input;  // strictly positive; default uniform
};

struct CapacityResult {
    double capacity_lower;    // I_L, nats -- the capacity value to report
    double capacity_upper;    // best I_U seen, nats
    Distribution input_dist;  // input distribution after the last update
    std::size_t iterations;
    bool converged;           // reached I_U - I_L < epsilon
};

// Alternating multiplicative-update iteration.  Each pass computes
//   c_j = exp(sum_k Q(k|j) log(Q(k|j) / q_k)),   q_k = sum_i p_i Q(k|i)
// (0 log 0 terms dropped), the bounds I_L = log sum_j p_j c_j and
// I_U = log max_j c_j, then updates p_j <- p_j c_j / sum.  Stops as soon as
// I_U - I_L < epsilon (strict).  Runs out of budget -> converged=false with
// the best bounds seen, not an exception.
CapacityResult ba_capacity(const ChannelMatrix& channel,
                           const SolverConfig& config = {});

// I(X;Y) in nats for a fixed input distribution, with 0 log 0 = 0.
double mutual_information(const ChannelMatrix& channel, const Distribution& input);

// Exhaustive check for two-input channels: max of mutual_information over
// p0 in {0, step, 2 step, ..., 1}.  No iteration, so it cross-validates the
// solver from a different code path.
double capacity_oracle_grid(const ChannelMatrix& channel, double grid_step);

}  // namespace dmcap
