#include "dmcap/walsh.hpp"

#include <bit>
#include <cmath>
#include <string>

namespace dmcap {

void fwht(std::vector<double>& a) {
    const std::size_t len = a.size();
    if (len == 0 || !std::has_single_bit(len))
        throw invalid_alphabet_error("transform length " + std::to_string(len) +
                                     " is not a power of two");
    for (std::size_t h = 1; h < len; h *= 2) {
        for (std::size_t i = 0; i < len; i += 2 * h) {
            for (std::size_t j = i; j < i + h; ++j) {
                const double x = a[j];
                const double y = a[j + h];
                a[j] = x + y;
                a[j + h] = x - y;
            }
        }
    }
}

WalshSpectrum walsh_hadamard_transform(const Distribution& dist) {
    std::vector<double> c = dist.probs();
    fwht(c);
    // c[0] is the total mass, 1 within the constructor's tolerance; pin it so
    // spectra of distributions carry the trivial coefficient exactly.
    c[0] = 1.0;
    return WalshSpectrum{std::move(c),
                         static_cast<unsigned>(std::countr_zero(dist.size()))};
}

Distribution inverse_walsh_hadamard(const WalshSpectrum& spec) {
    const std::size_t len = spec.coeffs.size();
    if (len == 0 || !std::has_single_bit(len))
        throw invalid_alphabet_error("spectrum length " + std::to_string(len) +
                                     " is not a power of two");
    if (std::abs(spec.coeffs[0] - 1.0) > prob_tol)
        throw invalid_spectrum_error("trivial coefficient is " +
                                     std::to_string(spec.coeffs[0]) +
                                     ", expected 1");
    std::vector<double> v = spec.coeffs;
    fwht(v);  // self-inverse up to the factor 2^n
    const double inv_len = 1.0 / static_cast<double>(len);
    for (double& x : v) {
        x *= inv_len;
        if (x < -prob_tol)
            throw invalid_spectrum_error(
                "spectrum implies negative probability " + std::to_string(x));
    }
    // Exact total mass can drift by a few ulps through the butterfly; divide
    // it out so downstream sum checks see clean distributions.
    const double sum = pairwise_sum(v);
    for (double& x : v) x /= sum;
    return Distribution(std::move(v));
}

}  // namespace dmcap
