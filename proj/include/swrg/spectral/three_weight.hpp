#pragma once

#include "swrg/common.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace swrg {

/// Frequencies forced by the first four moments for a three-weight code over an
/// order-4 chain ring with d⊥ >= 3 (so B1 = B2 = 0). y = 2^(2k1+k2-1).
struct TriplePrediction {
    std::uint64_t n = 0;
    BigInt y;
    std::uint64_t w[3] = {0, 0, 0};
    Rational A[3];
    Rational B3;
    bool admissible() const;
};

TriplePrediction predict_three_weight(std::uint64_t n, const BigInt& y, std::uint64_t w1, std::uint64_t w2, std::uint64_t w3);

enum class SumFilter { Any, Exactly, AtLeast3nMod3 };

struct FeasibilityOptions {
    SumFilter filter = SumFilter::Any;
    std::uint64_t sum = 0;  // for SumFilter::Exactly
    int cls_min = 1;
    int cls_max = 0;  // 0: delsarte_class_bound(n)
    /// Also apply the odd-weight and even-subcode lemmas: no three odd weights, and a
    /// lone odd weight w_j needs A_j = y and w_j in {n, n+1}.
    bool parity_lemmas = false;
};

struct FeasibleTriple {
    std::uint64_t n = 0;
    int cls = 0;
    std::uint64_t w[3] = {0, 0, 0};
    TriplePrediction prediction;
    std::uint64_t S = 0;
    std::optional<BigInt> b;  // loop count making S = (3/q)(b + n(q-1)q^(e-1)), q = 2
};

/// floor(log2(sum_{i<=3} C(2n, i))), capped at 2n.
int delsarte_class_bound(std::uint64_t n);

std::vector<FeasibleTriple> feasible_triples(std::uint64_t n, const FeasibilityOptions& opt = {});

/// All 1 <= w1 < w2 < w3 <= 2n with w1+w2+w3 = S, no integrality.
std::vector<std::array<std::uint64_t, 3>> candidate_triples(std::uint64_t n, std::uint64_t S);

struct ExceptionalTuple {
    std::uint64_t n = 0;
    int cls = 0;
    std::uint64_t w[3] = {0, 0, 0};
    BigInt y;          // 2^(cls-1), as used by the frequency formulas
    BigInt printed_y;  // 2^(cls-2), the column printed alongside the published list
    BigInt A[3];
    BigInt B3;
    bool macwilliams_nonnegative = false;
};

/// Tuples with S = 3n and w2 != n whose predicted frequencies are integral.
std::vector<ExceptionalTuple> exceptional_scan(std::uint64_t n_max);

}  // namespace swrg
