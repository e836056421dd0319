#pragma once

#include "dmcap/channel.hpp"
#include "dmcap/distribution.hpp"

namespace dmcap {

// One comparison record for a two-input channel: solver output next to the
// closed form (when the channel shape has one) or the quadratic estimate,
// plus the order-1/2 divergence statistic.  All capacity-like fields in nats.
struct EstimateComparison {
    double d;                        // dominant spectral bias of row 0
    double ba_capacity;              // solver lower bound
    double closed_form_or_estimate;  // exact formula if known, else k d^2/(8 log 2)
    double renyi_half_over_two;      // D_{1/2}(row0 || row1) / 2
    double crypto_estimate;          // quadratic heuristic for this shape
};

// Binary entropy in binary bits: -p log2 p - (1-p) log2(1-p), 0 log 0 = 0.
double binary_entropy(double p);

// Exact BSC capacity in nats: log 2 + p log p + (1-p) log(1-p), p = (1-d)/2.
double bsc_capacity_exact(double d);

// Quadratic BSC estimate d^2 / (2 log 2).
double bsc_capacity_estimate(double d);

// Quadratic estimate d^2 / (8 log 2) for the one-biased-row binary channel.
double nonsym_capacity_estimate(double d);

// Sparse-spectrum generalization k d^2 / (8 log 2); requires k*d <= 1.
double crypto_estimate(unsigned k, double d);

// Closed form for the one-biased-row channel at input (p0, 1-p0), in nats:
// (H((1+p0 d)/2) - p0 (H((1-d)/2) - 1) - 1) * log 2 with H in binary bits.
double nonsym_mutual_information_closed(double p0, double d);

// Renyi divergence of order alpha (alpha > 0, alpha != 1), nats:
//   (1/(alpha-1)) log sum_x P(x)^alpha Q(x)^(1-alpha).
// Order 1/2 reduces to -2 log sum sqrt(P Q).  For alpha > 1 a point with
// P > 0, Q = 0 makes it +infinity.
double renyi_divergence(const Distribution& p, const Distribution& q, double alpha);

// KL divergence sum P log(P/Q) in nats; +infinity if Q misses P's support.
double kl_divergence(const Distribution& p, const Distribution& q);

// Second-order expansion of binary_entropy((1+d)/2): 1 - d^2/(2 log 2), in
// binary bits.  The remainder is O(d^4); tests pin the constant.
double entropy_quadratic_approx(double d);

// Runs the solver on a two-input channel (outputs a power of two) and fills
// an EstimateComparison.  d and k are read off row 0's Walsh spectrum: d is
// the largest non-trivial magnitude, k how many coefficients share it.  A
// 2x2 channel whose second row mirrors the first gets the symmetric closed
// form and d^2/(2 log 2); everything else gets k d^2/(8 log 2) for both
// estimate fields.
EstimateComparison conjecture_gap(const ChannelMatrix& channel, double epsilon);

}  // namespace dmcap
