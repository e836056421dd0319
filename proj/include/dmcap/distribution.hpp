#pragma once

#include <span>
#include <stdexcept>
#include <vector>

namespace dmcap {

// Alphabet is unusable: wrong length, not a power of two where one is
// required, mismatched dimensions.
struct invalid_alphabet_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A Walsh spectrum that is not the transform of any probability distribution.
struct invalid_spectrum_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Tolerance for sum-to-one and nonnegativity checks.  Entries in
// (-prob_tol, 0) are treated as transform round-off and clamped to zero.
inline constexpr double prob_tol = 1e-12;

// Pairwise (tree) summation: rounding error grows O(log n) instead of O(n),
// which keeps long probability sums honest without exotic accumulators.
inline double pairwise_sum(std::span<const double> x) {
    if (x.size() <= 32) {
        double s = 0.0;
        for (double v : x) s += v;
        return s;
    }
    const std::size_t h = x.size() / 2;
    return pairwise_sum(x.first(h)) + pairwise_sum(x.subspan(h));
}

// Probability vector over a finite alphabet {0, ..., M-1}.  Immutable after
// construction; the constructor validates nonnegativity and total mass.
class Distribution {
public:
    explicit Distribution(std::vector<double> probs);

    std::size_t size() const { return probs_.size(); }
    double operator[](std::size_t i) const { return probs_[i]; }
    const std::vector<double>& probs() const { return probs_; }

    auto begin() const { return probs_.begin(); }
    auto end() const { return probs_.end(); }

    static Distribution uniform(std::size_t m);
    static Distribution point_mass(std::size_t m, std::size_t at);

private:
    std::vector<double> probs_;
};

}  // namespace dmcap
