#pragma once

#include "swrg/code/gray.hpp"
#include "swrg/code/linear_code.hpp"
#include "swrg/spectral/weight_distribution.hpp"

namespace swrg {

struct KerdockInstance {
    int s = 0;
    Ring galois;            // GR(4, s)
    LinearCode k_minus;     // length 2^s - 1, |K-| = 4^s
    LinearCode k_full;      // length 2^s, Z4 j + Q
    WeightDistribution wd_minus;
    WeightDistribution wd_full;
};

/// K- as the cyclic trace code {(Tr(lambda xi^t))_t : lambda in GR(4,s)}; K = Z4 j + Q with
/// Q = {(Tr(lambda x))_{x in T}} over the Teichmuller set T. Odd s in [3, 7].
KerdockInstance kerdock(int s, std::uint64_t budget = kDefaultEnumerationBudget);

/// Rows (Tr(xi^(i+t)))_{t=0..2^s-2}, i < s.
Matrix kerdock_minus_rows(const Ring& galois);

}  // namespace swrg
