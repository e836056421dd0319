#pragma once

#include <vector>

#include "dmcap/distribution.hpp"

namespace dmcap {

// Walsh-Hadamard coefficients of a distribution over n-bit strings, indexed
// by mask: coeffs[m] = sum_b D(b) * (-1)^<m,b>.  coeffs[0] is the total mass,
// pinned to exactly 1 when the spectrum comes from a Distribution.
struct WalshSpectrum {
    std::vector<double> coeffs;  // length 2^n
    unsigned n = 0;              // dimension in bits
};

// In-place fast transform (the h-doubling butterfly, n*2^n adds).  Applying
// it twice multiplies the input by 2^n.  Length must be a power of two.
void fwht(std::vector<double>& data);

WalshSpectrum walsh_hadamard_transform(const Distribution& dist);

// Inverse transform.  Rejects spectra whose preimage has an entry below
// -prob_tol; smaller negatives are round-off and get clamped.
Distribution inverse_walsh_hadamard(const WalshSpectrum& spec);

}  // namespace dmcap
