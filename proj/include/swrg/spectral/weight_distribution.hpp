#pragma once

#include "swrg/code/linear_code.hpp"
#include "swrg/common.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace swrg {

/// Sorted (weight, frequency) pairs including (0, 1).
struct WeightDistribution {
    std::size_t n = 0;
    std::uint64_t code_size = 0;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> entries;
    /// Display scale only (weights are always stored in the canonical normalization).
    Rational scale = 1;

    std::uint64_t frequency(std::uint64_t w) const;
    std::vector<std::uint64_t> nonzero_weights() const;
    std::size_t nonzero_count() const { return nonzero_weights().size(); }
    bool three_weight() const { return nonzero_count() == 3; }
    /// "{4:6, 6:16, 8:9}"; "{0:1}" for the zero code.
    std::string to_string() const;

    static WeightDistribution from_pairs(std::size_t n, const std::vector<std::pair<std::uint64_t, std::uint64_t>>& pairs);
    friend bool operator==(const WeightDistribution& a, const WeightDistribution& b) {
        return a.n == b.n && a.code_size == b.code_size && a.entries == b.entries;
    }
};

WeightDistribution weight_distribution(const LinearCode& C, std::uint64_t budget = kDefaultEnumerationBudget);
/// Distribution of an explicit word list (no linearity assumed).
WeightDistribution weight_distribution_of_words(const Ring& R, std::size_t n, const std::vector<Vec>& words);

std::uint64_t hom_weight(const Ring& R, const Vec& word);

}  // namespace swrg
