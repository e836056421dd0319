#include "dmcap/distinguisher.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace dmcap {

namespace {

// splitmix64 step; used only to spread (seed, stream index) into well-mixed
// 64-bit seeds for the per-trial generators.
std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index) {
    return splitmix64(seed + 0x9e3779b97f4a7c15ULL * (index + 1));
}

// Uniform double in [0, 1) with 53 random bits.  std::uniform_real_distribution
// is implementation-defined, which would tie reports to one standard library.
double uniform53(std::mt19937_64& gen) {
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

}  // namespace

SampleCounts draw_samples(const Distribution& dist, std::uint64_t n_samples,
                          std::uint64_t rng_seed) {
    std::vector<double> cdf(dist.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < dist.size(); ++i) {
        acc += dist[i];
        cdf[i] = acc;
    }
    cdf.back() = 1.0;  // guard against round-off at the top

    SampleCounts out{std::vector<std::uint64_t>(dist.size(), 0), n_samples};
    std::mt19937_64 gen(rng_seed);
    for (std::uint64_t t = 0; t < n_samples; ++t) {
        const double u = uniform53(gen);
        const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        ++out.counts[static_cast<std::size_t>(it - cdf.begin())];
    }
    return out;
}

Decision llr_decide(const SampleCounts& counts, const Distribution& biased,
                    const Distribution& fair) {
    if (counts.counts.size() != biased.size() || biased.size() != fair.size())
        throw invalid_alphabet_error("counts and distributions differ in length");
    for (double f : fair)
        if (f <= 0.0)
            throw std::domain_error("the fair hypothesis must be strictly positive");

    double llr = 0.0;
    for (std::size_t b = 0; b < biased.size(); ++b) {
        if (counts.counts[b] == 0) continue;
        if (biased[b] == 0.0) return Decision::Uniform;  // sum is -infinity
        llr += static_cast<double>(counts.counts[b]) * std::log(biased[b] / fair[b]);
    }
    return llr > 0.0 ? Decision::Biased : Decision::Uniform;  // tie -> Uniform
}

DistinguisherReport estimate_error_rates(const ChannelMatrix& channel,
                                         std::uint64_t n_samples,
                                         std::size_t trials,
                                         std::uint64_t rng_seed) {
    if (trials < 1) throw std::domain_error("trials must be at least 1");
    if (channel.num_inputs() < 2)
        throw std::domain_error("need a biased row and a fair row");
    const Distribution& biased = channel.row(0);
    const Distribution& fair = channel.row(1);
    const double u = 1.0 / static_cast<double>(channel.num_outputs());
    for (double f : fair)
        if (std::abs(f - u) > prob_tol)
            throw std::domain_error("row 1 must be the uniform distribution");

    // Streams 2t feed the biased-source experiments, 2t+1 the fair-source
    // ones, so each trial is reproducible on its own.
    std::size_t accept_biased_when_fair = 0;
    std::size_t accept_fair_when_biased = 0;
    for (std::size_t t = 0; t < trials; ++t) {
        const auto from_biased =
            draw_samples(biased, n_samples, substream_seed(rng_seed, 2 * t));
        if (llr_decide(from_biased, biased, fair) == Decision::Uniform)
            ++accept_fair_when_biased;
        const auto from_fair =
            draw_samples(fair, n_samples, substream_seed(rng_seed, 2 * t + 1));
        if (llr_decide(from_fair, biased, fair) == Decision::Biased)
            ++accept_biased_when_fair;
    }

    const auto rate = [trials](std::size_t c) {
        return static_cast<double>(c) / static_cast<double>(trials);
    };
    return DistinguisherReport{n_samples,
                               trials,
                               rate(accept_biased_when_fair),
                               rate(accept_fair_when_biased),
                               rng_seed,
                               "mt19937_64"};
}

}  // namespace dmcap
