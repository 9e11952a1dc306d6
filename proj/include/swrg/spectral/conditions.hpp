#pragma once

#include "swrg/common.hpp"
#include "swrg/spectral/weight_distribution.hpp"

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

namespace swrg {

/// Ring constants entering the eigenvalue formula theta = b + n(q-1)q^(e-1) - q*w.
struct WeightScale {
    std::uint64_t q = 2;
    unsigned e = 2;
};

BigInt eigenvalue(std::uint64_t n, WeightScale sc, const BigInt& b, std::uint64_t w);

/// (theta, multiplicity) pairs, largest theta first.
std::vector<std::pair<BigInt, std::uint64_t>> predicted_spectrum(const WeightDistribution& wd, WeightScale sc,
                                                                 const BigInt& b);

/// (t2-t3) t1^s + (t3-t1) t2^s + (t1-t2) t3^s.
BigInt ssum_form(const BigInt& t1, const BigInt& t2, const BigInt& t3, unsigned s);

/// Arithmetic s-sum / s-SWRG condition for a three-weight code. Throws unless w1 < w2 < w3.
bool ssum_condition(std::uint64_t n, WeightScale sc, const BigInt& b, unsigned s, std::array<std::uint64_t, 3> w);

/// theta2 = 0 and theta1 = -theta3; for b = 0 this is w2 = n(q-1)q^(e-2), w1 + w3 = 2 w2.
bool odd_s_family_check(std::uint64_t n, WeightScale sc, std::array<std::uint64_t, 3> w, const BigInt& b = 0);

struct UniquenessReport {
    bool family = false;
    std::vector<unsigned> passing;  // s in [2, s_max] where ssum_condition holds
    /// family, or at most one passing s.
    bool consistent() const { return family || passing.size() <= 1; }
};

UniquenessReport uniqueness_guard(std::uint64_t n, WeightScale sc, const BigInt& b, std::array<std::uint64_t, 3> w,
                                  unsigned s_max = 15);

}  // namespace swrg
