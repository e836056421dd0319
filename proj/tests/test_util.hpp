#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "dmcap/channel.hpp"
#include "dmcap/distribution.hpp"

namespace testutil {

// Reference grids for the two binary channel families at epsilon = 1e-4,
// 4-decimal values, frozen.  Columns: d, capacity, renyi_half_over_two,
// estimate d^2/(8 log 2).
inline constexpr double table1[19][4] = {
    {0.05, 0.0003, 0.0003, 0.0005}, {0.10, 0.0013, 0.0013, 0.0018},
    {0.15, 0.0028, 0.0028, 0.0041}, {0.20, 0.0051, 0.0051, 0.0072},
    {0.25, 0.0080, 0.0080, 0.0113}, {0.30, 0.0116, 0.0116, 0.0162},
    {0.35, 0.0159, 0.0161, 0.0221}, {0.40, 0.0210, 0.0213, 0.0289},
    {0.45, 0.0270, 0.0275, 0.0365}, {0.50, 0.0338, 0.0347, 0.0451},
    {0.55, 0.0417, 0.0430, 0.0546}, {0.60, 0.0507, 0.0527, 0.0649},
    {0.65, 0.0610, 0.0639, 0.0762}, {0.70, 0.0728, 0.0771, 0.0884},
    {0.75, 0.0865, 0.0927, 0.1014}, {0.80, 0.1023, 0.1116, 0.1154},
    {0.85, 0.1211, 0.1350, 0.1303}, {0.90, 0.1440, 0.1657, 0.1461},
    {0.95, 0.1737, 0.2107, 0.1628},
};

// Columns: d, capacity, closed-form theory, renyi_half_over_two,
// estimate d^2/(2 log 2).
inline constexpr double table2[19][5] = {
    {0.05, 0.0012, 0.0013, 0.0013, 0.0018},
    {0.10, 0.0050, 0.0050, 0.0050, 0.0072},
    {0.15, 0.0113, 0.0113, 0.0114, 0.0162},
    {0.20, 0.0201, 0.0201, 0.0204, 0.0289},
    {0.25, 0.0316, 0.0316, 0.0323, 0.0451},
    {0.30, 0.0457, 0.0457, 0.0472, 0.0649},
    {0.35, 0.0626, 0.0626, 0.0653, 0.0884},
    {0.40, 0.0823, 0.0823, 0.0872, 0.1154},
    {0.45, 0.1050, 0.1050, 0.1131, 0.1461},
    {0.50, 0.1308, 0.1308, 0.1438, 0.1803},
    {0.55, 0.1600, 0.1600, 0.1801, 0.2182},
    {0.60, 0.1927, 0.1927, 0.2231, 0.2597},
    {0.65, 0.2294, 0.2294, 0.2745, 0.3048},
    {0.70, 0.2704, 0.2704, 0.3367, 0.3535},
    {0.75, 0.3164, 0.3164, 0.4133, 0.4058},
    {0.80, 0.3681, 0.3681, 0.5108, 0.4617},
    {0.85, 0.4268, 0.4268, 0.6410, 0.5212},
    {0.90, 0.4946, 0.4946, 0.8304, 0.5843},
    {0.95, 0.5762, 0.5762, 1.1640, 0.6510},
};

inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Strictly-positive-with-probability-1 random distribution: i.i.d. uniform
// weights, normalized.
inline dmcap::Distribution random_dist(std::mt19937_64& rng, std::size_t m) {
    std::vector<double> v(m);
    double sum = 0.0;
    for (auto& x : v) {
        x = uniform01(rng);
        sum += x;
    }
    for (auto& x : v) x /= sum;
    return dmcap::Distribution(std::move(v));
}

inline dmcap::ChannelMatrix random_channel(std::mt19937_64& rng, std::size_t n,
                                           std::size_t m) {
    std::vector<dmcap::Distribution> rows;
    rows.reserve(n);
    for (std::size_t j = 0; j < n; ++j) rows.push_back(random_dist(rng, m));
    return dmcap::ChannelMatrix(std::move(rows));
}

}  // namespace testutil
