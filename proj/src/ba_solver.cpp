#include "dmcap/ba_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

namespace dmcap {

namespace {

// sum_k row[k] log(row[k] / q[k]) over the row's support.  Zero entries
// contribute 0 (continuous extension of x log x); q[k] > 0 is guaranteed on
// the support as long as the row carries input mass.
double row_information(const std::vector<double>& row,
                       const std::vector<double>& q,
                       std::vector<double>& scratch) {
    scratch.clear();
    for (std::size_t k = 0; k < row.size(); ++k)
        if (row[k] > 0.0) scratch.push_back(row[k] * std::log(row[k] / q[k]));
    return pairwise_sum(scratch);
}

void output_distribution(const ChannelMatrix& ch, const std::vector<double>& p,
                         std::vector<double>& q) {
    const std::size_t m = ch.num_outputs();
    q.assign(m, 0.0);
    for (std::size_t j = 0; j < p.size(); ++j) {
        if (p[j] == 0.0) continue;
        const auto& row = ch.row(j).probs();
        for (std::size_t k = 0; k < m; ++k) q[k] += p[j] * row[k];
    }
}

}  // namespace

CapacityResult ba_capacity(const ChannelMatrix& channel, const SolverConfig& config) {
    const std::size_t n = channel.num_inputs();
    if (n < 2)
        throw std::domain_error("capacity needs at least two input symbols");
    if (!(config.epsilon > 0.0))
        throw std::domain_error("epsilon must be positive");
    if (config.max_iterations < 1)
        throw std::domain_error("max_iterations must be at least 1");

    std::vector<double> p(n, 1.0 / static_cast<double>(n));
    if (config.initial_input) {
        if (config.initial_input->size() != n)
            throw std::domain_error("initial input has wrong length");
        for (double v : *config.initial_input)
            if (v <= 0.0)
                throw std::domain_error(
                    "initial input must be strictly positive (a zero entry is "
                    "a fixed point of the multiplicative update)");
        p = config.initial_input->probs();
    }

    std::vector<double> q, c(n), scratch;
    scratch.reserve(channel.num_outputs());

    double lower = 0.0;
    double best_upper = std::numeric_limits<double>::infinity();
    std::size_t it = 0;
    bool converged = false;

    while (it < config.max_iterations) {
        ++it;
        output_distribution(channel, p, q);
        for (std::size_t j = 0; j < n; ++j)
            c[j] = p[j] == 0.0
                       ? 0.0  // letter dropped out of the support; keep it out
                       : std::exp(row_information(channel.row(j).probs(), q, scratch));

        double s = 0.0, cmax = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            s += p[j] * c[j];
            if (p[j] > 0.0) cmax = std::max(cmax, c[j]);
        }
        lower = std::log(s);
        const double upper = std::log(cmax);
        best_upper = std::min(best_upper, upper);

        for (std::size_t j = 0; j < n; ++j) p[j] = p[j] * c[j] / s;

        if (upper - lower < config.epsilon) {
            converged = true;
            break;
        }
    }

    return CapacityResult{lower, best_upper, Distribution(std::move(p)), it,
                          converged};
}

double mutual_information(const ChannelMatrix& channel, const Distribution& input) {
    if (input.size() != channel.num_inputs())
        throw std::domain_error("input length does not match channel inputs");
    std::vector<double> q, scratch;
    scratch.reserve(channel.num_outputs());
    output_distribution(channel, input.probs(), q);
    double info = 0.0;
    for (std::size_t j = 0; j < input.size(); ++j)
        if (input[j] > 0.0)
            info += input[j] * row_information(channel.row(j).probs(), q, scratch);
    return info;
}

double capacity_oracle_grid(const ChannelMatrix& channel, double grid_step) {
    if (channel.num_inputs() != 2)
        throw invalid_alphabet_error("grid oracle handles two-input channels only");
    if (!(grid_step > 0.0 && grid_step <= 0.01))
        throw std::domain_error("grid_step must lie in (0, 0.01]");

    const auto& r0 = channel.row(0).probs();
    const auto& r1 = channel.row(1).probs();
    const std::size_t m = channel.num_outputs();
    const auto steps = static_cast<std::size_t>(std::llround(1.0 / grid_step));

    std::vector<double> q(m), scratch;
    scratch.reserve(m);
    double best = 0.0;
    for (std::size_t i = 0; i <= steps; ++i) {
        const double p0 = static_cast<double>(i) / static_cast<double>(steps);
        const double p1 = 1.0 - p0;
        for (std::size_t k = 0; k < m; ++k) q[k] = p0 * r0[k] + p1 * r1[k];
        double info = 0.0;
        if (p0 > 0.0) info += p0 * row_information(r0, q, scratch);
        if (p1 > 0.0) info += p1 * row_information(r1, q, scratch);
        best = std::max(best, info);
    }
    return best;
}

}  // namespace dmcap
