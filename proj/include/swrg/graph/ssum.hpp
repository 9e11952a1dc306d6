#pragma once

#include "swrg/code/linear_code.hpp"
#include "swrg/common.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace swrg {

inline constexpr std::uint64_t kDefaultGroupBudget = std::uint64_t{1} << 20;

struct SsumResult {
    unsigned s = 0;
    bool include_zero = false;
    std::uint64_t loops = 0;  // multiplicity of 0 as a summand
    bool holds = false;
    std::optional<BigInt> sigma0;  // representations of h in Omega
    std::optional<BigInt> sigma1;  // representations of h outside Omega and nonzero
    /// Refutation: two targets with equal membership and different counts.
    std::optional<std::pair<Vec, Vec>> witness;
};

/// Counts representations h = x_1 + ... + x_s with x_i in Omega (plus 0 when include_zero)
/// by s-fold convolution over R^k, and checks they depend only on membership of h in Omega.
/// Throws InvalidArgument if Omega contains 0 or is not stable under unit scaling.
SsumResult ssum_set_check(const Ring& R, std::size_t k, const std::vector<Vec>& omega, unsigned s, bool include_zero,
                          std::uint64_t budget = kDefaultGroupBudget);

/// Same with 0 allowed as a summand with multiplicity b (walks in the Cayley graph with b loops).
SsumResult ssum_set_check_loops(const Ring& R, std::size_t k, const std::vector<Vec>& omega, unsigned s,
                                std::uint64_t b, std::uint64_t budget = kDefaultGroupBudget);

/// Number of distinct nonzero weights of the code whose generator columns are the elements of Omega.
std::size_t dual_weight_count_check(const Ring& R, std::size_t k, const std::vector<Vec>& omega,
                                    std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace swrg
