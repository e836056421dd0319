#include "dmcap/channel.hpp"

#include <algorithm>
#include <string>

#include "dmcap/walsh.hpp"

namespace dmcap {

ChannelMatrix::ChannelMatrix(std::vector<Distribution> rows)
    : rows_(std::move(rows)) {
    if (rows_.empty())
        throw invalid_alphabet_error("channel needs at least one input symbol");
    m_ = rows_[0].size();
    for (const auto& r : rows_)
        if (r.size() != m_)
            throw invalid_alphabet_error("channel rows differ in length");
}

static void check_bias(double d) {
    if (!(d >= 0.0 && d <= 1.0))
        throw std::domain_error("bias d = " + std::to_string(d) +
                                " outside [0, 1]");
}

ChannelMatrix make_bsc(double d) {
    check_bias(d);
    const double p = (1.0 - d) / 2.0;
    std::vector<Distribution> rows;
    rows.emplace_back(std::vector<double>{1.0 - p, p});
    rows.emplace_back(std::vector<double>{p, 1.0 - p});
    return ChannelMatrix(std::move(rows));
}

ChannelMatrix make_nonsymmetric_binary(double d) {
    check_bias(d);
    const double p = (1.0 - d) / 2.0;
    std::vector<Distribution> rows;
    rows.emplace_back(std::vector<double>{1.0 - p, p});
    rows.emplace_back(std::vector<double>{0.5, 0.5});
    return ChannelMatrix(std::move(rows));
}

ChannelMatrix make_wht_sparse_channel(unsigned n, unsigned k, double d,
                                      const std::vector<std::size_t>& masks,
                                      const std::vector<int>& signs) {
    if (n < 1 || n >= 8 * sizeof(std::size_t))
        throw std::domain_error("dimension n = " + std::to_string(n) +
                                " unsupported");
    const std::size_t len = std::size_t{1} << n;
    if (k < 1 || k > len - 1)
        throw std::domain_error("sparsity k = " + std::to_string(k) +
                                " outside [1, 2^n - 1]");
    if (d < 0.0)
        throw std::domain_error("coefficient d must be nonnegative");
    if (static_cast<double>(k) * d > 1.0 + prob_tol)
        throw invalid_spectrum_error("k*d = " + std::to_string(k * d) +
                                     " exceeds 1; row 0 would go negative");

    std::vector<std::size_t> where(masks);
    if (where.empty()) {
        where.resize(k);
        for (unsigned i = 0; i < k; ++i) where[i] = i + 1;  // smallest nonzero masks
    } else {
        if (where.size() != k)
            throw std::domain_error("expected " + std::to_string(k) + " masks, got " +
                                    std::to_string(where.size()));
        auto sorted = where;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 0; i < sorted.size(); ++i) {
            if (sorted[i] == 0 || sorted[i] >= len)
                throw std::domain_error("mask " + std::to_string(sorted[i]) +
                                        " outside [1, 2^n - 1]");
            if (i > 0 && sorted[i] == sorted[i - 1])
                throw std::domain_error("duplicate mask " + std::to_string(sorted[i]));
        }
    }
    if (!signs.empty() && signs.size() != k)
        throw std::domain_error("signs must match the mask count");
    for (int s : signs)
        if (s != 1 && s != -1) throw std::domain_error("signs must be +1 or -1");

    WalshSpectrum spec{std::vector<double>(len, 0.0), n};
    spec.coeffs[0] = 1.0;
    for (std::size_t i = 0; i < where.size(); ++i)
        spec.coeffs[where[i]] = (signs.empty() ? 1.0 : signs[i]) * d;

    std::vector<Distribution> rows;
    rows.push_back(inverse_walsh_hadamard(spec));
    rows.push_back(Distribution::uniform(len));
    return ChannelMatrix(std::move(rows));
}

}  // namespace dmcap
