#pragma once

#include "swrg/code/linear_code.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace swrg {

using BitVec = std::vector<std::uint8_t>;  // one bit per byte

/// Weight-preserving binary image of a word over Z4 (0->00, 1->01, 2->11, 3->10) or
/// F2+uF2 (a+ub -> (b, a+b)). Length 2n.
BitVec gray_map(const Ring& R, const Vec& word);
BitVec gray_map(const Ring& R, const std::uint8_t* word, std::size_t n);

struct LinearityScan {
    bool linear = true;
    std::uint64_t pairs_checked = 0;
    std::uint64_t failing_pairs = 0;
    /// indices (i, j) into the word list with image(i) xor image(j) outside the image set
    std::optional<std::pair<std::size_t, std::size_t>> witness;
};

/// Checks closure of a binary word set under xor over all ordered pairs (i, j); the
/// scan is exhaustive and reports the first failing pair.
LinearityScan is_binary_linear(const std::vector<BitVec>& words);

/// Gray images of all codewords together with the codewords themselves.
struct GrayImage {
    std::vector<Vec> codewords;
    std::vector<BitVec> images;
};
GrayImage gray_image(const LinearCode& C, std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace swrg
