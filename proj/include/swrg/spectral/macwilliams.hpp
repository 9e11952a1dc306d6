#pragma once

#include "swrg/common.hpp"
#include "swrg/spectral/weight_distribution.hpp"

#include <vector>

namespace swrg {

/// Binary Krawtchouk polynomial K_j(i) for length N.
BigInt krawtchouk(std::uint64_t N, std::uint64_t j, std::uint64_t i);

/// Dual homogeneous weight distribution for a code of length n over an order-4 chain ring
/// (homogeneous weight = Hamming weight of the Gray image, length 2n).
/// Throws Inconsistent if a coefficient is negative or not an integer.
WeightDistribution macwilliams_hom(const WeightDistribution& wd);
/// B_0..B_{2n} as big integers; same checks as macwilliams_hom but no 64-bit limit.
std::vector<BigInt> macwilliams_coefficients(const WeightDistribution& wd);

/// Pless moments of the Gray image, solved for the low dual frequencies.
struct PowerMoments {
    std::size_t n = 0;
    int cls = 0;  // 2k1 + k2
    BigInt moment[4];  // sum_i i^t A_i over nonzero weights, t = 0..3
    Rational B1, B2, B3;
    bool b1_zero = false;
    bool consistent = false;  // B1, B2, B3 non-negative integers and the size identity holds
    std::string note;
};

PowerMoments power_moments(const WeightDistribution& wd, int k1, int k2);

}  // namespace swrg
