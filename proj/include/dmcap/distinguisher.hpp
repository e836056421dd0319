#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dmcap/channel.hpp"
#include "dmcap/distribution.hpp"

namespace dmcap {

// Histogram of i.i.d. draws from one source.
struct SampleCounts {
    std::vector<std::uint64_t> counts;  // per-symbol tallies, length M
    std::uint64_t total;                // sum of counts
};

enum class Decision { Biased, Uniform };

// Empirical error rates of the log-likelihood-ratio acceptor.
struct DistinguisherReport {
    std::uint64_t sample_count;
    std::size_t trials;
    double false_accept_biased;   // decided Biased when the source was fair
    double false_accept_uniform;  // decided Uniform when the source was biased
    std::uint64_t seed;
    std::string generator;        // RNG identity, for cross-implementation checks
};

// n_samples i.i.d. draws via inverse-CDF lookup on the cumulative vector.
// Deterministic for a given seed; the stream is mt19937_64 with 53-bit
// uniform doubles.
SampleCounts draw_samples(const Distribution& dist, std::uint64_t n_samples,
                          std::uint64_t rng_seed);

// Biased iff sum_b counts[b] * log(biased(b) / fair(b)) is strictly positive;
// ties and empty counts fall to Uniform, as does a -infinity sum (a sample
// the biased source cannot emit).  fair must be strictly positive.
Decision llr_decide(const SampleCounts& counts, const Distribution& biased,
                    const Distribution& fair);

// 2*trials independent experiments on a two-row channel whose second row is
// uniform: `trials` sourcing from row 0 and `trials` from row 1, each decided
// by llr_decide.  Per-trial RNG streams are derived from (seed, trial index)
// with splitmix64, so a parallel schedule would reproduce the serial report
// bit for bit.
DistinguisherReport estimate_error_rates(const ChannelMatrix& channel,
                                         std::uint64_t n_samples,
                                         std::size_t trials,
                                         std::uint64_t rng_seed);

}  // namespace dmcap
