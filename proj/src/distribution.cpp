#include "dmcap/distribution.hpp"

#include <cmath>
#include <string>

namespace dmcap {

Distribution::Distribution(std::vector<double> probs) : probs_(std::move(probs)) {
    if (probs_.empty())
        throw invalid_alphabet_error("distribution needs at least one outcome");
    for (double& p : probs_) {
        if (p < 0.0) {
            if (p <= -prob_tol)
                throw std::domain_error("negative probability " + std::to_string(p));
            p = 0.0;  // transform round-off
        }
        if (std::isnan(p))
            throw std::domain_error("probability is NaN");
    }
    const double sum = pairwise_sum(probs_);
    if (std::abs(sum - 1.0) > prob_tol)
        throw std::domain_error("probabilities sum to " + std::to_string(sum) +
                                ", expected 1");
}

Distribution Distribution::uniform(std::size_t m) {
    if (m == 0) throw invalid_alphabet_error("empty alphabet");
    return Distribution(std::vector<double>(m, 1.0 / static_cast<double>(m)));
}

Distribution Distribution::point_mass(std::size_t m, std::size_t at) {
    if (m == 0) throw invalid_alphabet_error("empty alphabet");
    if (at >= m) throw std::domain_error("point mass outside alphabet");
    std::vector<double> v(m, 0.0);
    v[at] = 1.0;
    return Distribution(std::move(v));
}

}  // namespace dmcap
