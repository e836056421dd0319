#include "dmcap/analytic.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "dmcap/ba_solver.hpp"
#include "dmcap/walsh.hpp"

namespace dmcap {

namespace {
constexpr double ln2 = 0.6931471805599453094;
constexpr double inf = std::numeric_limits<double>::infinity();

void check_unit_interval(double x, const char* name) {
    if (!(x >= 0.0 && x <= 1.0))
        throw std::domain_error(std::string(name) + " = " + std::to_string(x) +
                                " outside [0, 1]");
}

double xlogx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }
}  // namespace

double binary_entropy(double p) {
    check_unit_interval(p, "p");
    return -(xlogx(p) + xlogx(1.0 - p)) / ln2;
}

double bsc_capacity_exact(double d) {
    check_unit_interval(d, "d");
    const double p = (1.0 - d) / 2.0;
    return ln2 + xlogx(p) + xlogx(1.0 - p);
}

double bsc_capacity_estimate(double d) {
    check_unit_interval(d, "d");
    return d * d / (2.0 * ln2);
}

double nonsym_capacity_estimate(double d) {
    check_unit_interval(d, "d");
    return d * d / (8.0 * ln2);
}

double crypto_estimate(unsigned k, double d) {
    if (k < 1) throw std::domain_error("sparsity k must be at least 1");
    if (d < 0.0) throw std::domain_error("d must be nonnegative");
    if (k * d > 1.0 + prob_tol)
        throw std::domain_error("k*d = " + std::to_string(k * d) + " exceeds 1");
    return k * d * d / (8.0 * ln2);
}

double nonsym_mutual_information_closed(double p0, double d) {
    check_unit_interval(p0, "p0");
    check_unit_interval(d, "d");
    const double h_out = binary_entropy((1.0 + p0 * d) / 2.0);
    const double h_row = binary_entropy((1.0 - d) / 2.0);
    return (h_out - p0 * (h_row - 1.0) - 1.0) * ln2;
}

double renyi_divergence(const Distribution& p, const Distribution& q, double alpha) {
    if (p.size() != q.size())
        throw invalid_alphabet_error("divergence needs equal-length distributions");
    if (!(alpha > 0.0) || alpha == 1.0)
        throw std::domain_error("order must be positive and not 1");

    std::vector<double> terms;
    terms.reserve(p.size());
    if (alpha == 0.5) {
        for (std::size_t i = 0; i < p.size(); ++i)
            terms.push_back(std::sqrt(p[i] * q[i]));
        return -2.0 * std::log(pairwise_sum(terms));
    }
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] == 0.0) continue;  // 0^alpha = 0 for alpha > 0
        if (q[i] == 0.0) {
            if (alpha > 1.0) return inf;
            continue;  // q^(1-alpha) = 0 for alpha < 1
        }
        terms.push_back(std::pow(p[i], alpha) * std::pow(q[i], 1.0 - alpha));
    }
    // An empty or vanishing sum means disjoint support: the divergence is
    // +infinity at every order, and log(0)/(alpha-1) lands there for alpha<1.
    return std::log(pairwise_sum(terms)) / (alpha - 1.0);
}

double kl_divergence(const Distribution& p, const Distribution& q) {
    if (p.size() != q.size())
        throw invalid_alphabet_error("divergence needs equal-length distributions");
    std::vector<double> terms;
    terms.reserve(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] == 0.0) continue;
        if (q[i] == 0.0) return inf;
        terms.push_back(p[i] * std::log(p[i] / q[i]));
    }
    return pairwise_sum(terms);
}

double entropy_quadratic_approx(double d) {
    if (!(d >= -1.0 && d <= 1.0))
        throw std::domain_error("|d| must not exceed 1");
    return 1.0 - d * d / (2.0 * ln2);
}

EstimateComparison conjecture_gap(const ChannelMatrix& channel, double epsilon) {
    if (channel.num_inputs() != 2)
        throw invalid_alphabet_error("comparison handles two-input channels only");

    // Read the bias structure off row 0: the largest non-trivial Walsh
    // magnitude and its multiplicity.
    const WalshSpectrum spec = walsh_hadamard_transform(channel.row(0));
    double d = 0.0;
    for (std::size_t m = 1; m < spec.coeffs.size(); ++m)
        d = std::max(d, std::abs(spec.coeffs[m]));
    unsigned k = 1;
    if (d > prob_tol) {
        k = 0;
        for (std::size_t m = 1; m < spec.coeffs.size(); ++m)
            if (std::abs(spec.coeffs[m]) >= d - 1e-9) ++k;
    } else {
        d = 0.0;
    }

    const auto& r0 = channel.row(0);
    const auto& r1 = channel.row(1);
    const bool mirrored_2x2 = channel.num_outputs() == 2 &&
                              std::abs(r1[0] - r0[1]) <= prob_tol &&
                              std::abs(r1[1] - r0[0]) <= prob_tol;

    EstimateComparison cmp;
    cmp.d = d;
    cmp.ba_capacity = ba_capacity(channel, {.epsilon = epsilon}).capacity_lower;
    cmp.renyi_half_over_two = renyi_divergence(r0, r1, 0.5) / 2.0;
    if (mirrored_2x2) {
        cmp.closed_form_or_estimate = bsc_capacity_exact(d);
        cmp.crypto_estimate = bsc_capacity_estimate(d);
    } else {
        cmp.closed_form_or_estimate = k * d * d / (8.0 * ln2);
        cmp.crypto_estimate = cmp.closed_form_or_estimate;
    }
    return cmp;
}

}  // namespace dmcap
