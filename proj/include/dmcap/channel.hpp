#pragma once

#include <cstddef>
#include <vector>

#include "dmcap/distribution.hpp"

namespace dmcap {

// Row-stochastic transition matrix: row(j)[k] = Q(k|j), the probability of
// output symbol k given input symbol j.
class ChannelMatrix {
public:
    explicit ChannelMatrix(std::vector<Distribution> rows);

    std::size_t num_inputs() const { return rows_.size(); }  // N
    std::size_t num_outputs() const { return m_; }           // M
    const Distribution& row(std::size_t j) const { return rows_[j]; }

private:
    std::vector<Distribution> rows_;
    std::size_t m_;
};

// Binary symmetric channel with crossover p = (1-d)/2:
// rows (1-p, p) and (p, 1-p).
ChannelMatrix make_bsc(double d);

// One biased row, one fair row: (1-p, p) and (1/2, 1/2) with p = (1-d)/2.
ChannelMatrix make_nonsymmetric_binary(double d);

// 2 x 2^n channel: row 1 is uniform, row 0 is the inverse WHT of the sparse
// spectrum with coeffs[0] = 1 and magnitude d at each of the k masks.
// Default masks are {1, ..., k}; capacity can depend on whether the chosen
// masks are linearly independent.  `signs` (entries +1/-1, default all +1)
// flips individual coefficients to -d.  Requires k*d <= 1 so that an
// all-positive spectrum stays a distribution.
ChannelMatrix make_wht_sparse_channel(unsigned n, unsigned k, double d,
                                      const std::vector<std::size_t>& masks = {},
                                      const std::vector<int>& signs = {});

}  // namespace dmcap
