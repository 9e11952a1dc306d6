#pragma once

#include "swrg/code/linear_code.hpp"

#include <string>

namespace swrg {

/// Byte string invariant under column permutation, unit scaling of columns and row
/// operations: shape, weight distribution, and the sorted multiset of column profiles
/// (for each coordinate, the joint histogram of codeword weight and entry weight).
std::string canonical_invariant(const LinearCode& C, std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace swrg
