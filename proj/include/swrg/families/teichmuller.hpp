#pragma once

#include "swrg/common.hpp"

#include <array>
#include <vector>

namespace swrg {

/// Published parameters of the generalized Teichmuller code T_{q,k,s} over GR(4,r), q = 2^r.
/// Weights are in the printed scale; our homogeneous weights are q^{r-2} times larger.
struct TeichmullerParams {
    std::uint64_t q = 0;
    unsigned r = 0, k = 0, s = 0;
    BigInt n;
    std::array<BigInt, 3> w;
    std::array<BigInt, 3> A;
    BigInt b;             // 2^s q^{r-1}
    Rational weight_scale;  // q^{r-2}
    Rational S;           // sum of weights in our scale
    Rational S_identity;  // (3/q)(b + n(q-1)q^{r-1})
    bool identity_holds = false;
    bool degenerate = false;  // some A_i = 0
    BigInt code_size;     // 1 + sum A_i
};

/// Throws InvalidArgument for q not a power of 2, k < 2, or s outside the legal set.
TeichmullerParams teichmuller_params(std::uint64_t q, unsigned k, unsigned s);

/// s in {0,2,...,(k-1)r} for odd k, {r, r+2, ..., (k-1)r} for even k.
std::vector<unsigned> teichmuller_legal_s(std::uint64_t q, unsigned k);

}  // namespace swrg
