#pragma once

#include "swrg/code/linear_code.hpp"
#include "swrg/graph/ssum.hpp"
#include "swrg/spectral/weight_distribution.hpp"

#include <optional>

namespace swrg {

struct TraceCodeInstance {
    int p = 0, m = 0;
    LinearCode C;                 // length (p^2m - p^m)/2 over F_p+uF_p
    Replication replication;      // P = replication.reduced
    WeightDistribution wd_C, wd_P;
    bool P_projective = false;
    bool P_three_weight = false;
    /// S_P against 3(1 - 1/p) n_P in the homogeneous normalization
    BigInt sum_P;
    Rational sum_target;
    bool sum_relation = false;
    /// Closed-form weights p^{2m-1}-p^{m-1}, ... as printed, for comparison with wd_P.
    std::vector<BigInt> closed_form_weights;
    SsumResult tss;               // Omega = unit multiples of P's columns, s = 3, no loops
    /// b with S_P = (3/q)(b + n q^{e-1}(q-1)); when a non-negative integer, the check with b loops
    Rational implied_loops;
    std::optional<SsumResult> tss_with_loops;
};

/// {(Tr(a x))_{x in L} : a in F_{p^m}+uF_{p^m}}, L = Q + uF_{p^m}, Q the nonzero squares.
/// p odd prime, m = 2 mod 4, p^{2m} <= 3^10.
TraceCodeInstance trace_code(int p, int m, std::uint64_t budget = kDefaultEnumerationBudget);

/// Generator rows (Tr(beta_i x))_{x in L} for an F_p-basis beta_i of F_{p^m}.
Matrix trace_code_rows(int p, int m);

}  // namespace swrg
