#pragma once

#include "swrg/code/linear_code.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace swrg {

enum class SearchMode { Decide, Exhaust };
enum class SearchStatus { Realized, Empty, Undecided };

std::string to_string(SearchMode m);
std::string to_string(SearchStatus s);

struct SearchSpec {
    Ring ring = Ring::zpm(2, 2);
    std::size_t n = 0;
    int k1 = 1, k2 = 0;
    std::array<std::uint64_t, 3> weights{};
    SearchMode mode = SearchMode::Decide;
    /// Node cap per depth-1 subtree; exceeding it without a witness gives Undecided.
    std::uint64_t budget_nodes = std::uint64_t{1} << 32;
    unsigned threads = 0;  // 0: hardware concurrency
    /// Append-only JSONL of finished subtrees; finished subtrees are skipped on rerun.
    std::string checkpoint;
    /// Disable the weight-window pruning (oracle runs).
    bool prune = true;
};

struct ClassificationRecord {
    SearchSpec spec;
    SearchStatus status = SearchStatus::Undecided;
    std::vector<Matrix> witnesses;   // Decide: at most one; Exhaust: one per canonical invariant
    std::uint64_t solutions = 0;     // leaves accepted (Exhaust counts repeats)
    std::uint64_t nodes = 0;
    std::uint64_t pruned = 0;
    std::size_t subtrees = 0;
    std::size_t subtrees_resumed = 0;
    double elapsed_ms = 0;
    std::size_t point_count = 0;
};

/// Searches for projective regular codes of length n and shape (k1, k2) over an order-4
/// chain ring whose nonzero homogeneous weights lie in the target set. Columns are distinct
/// points from shape_points; e_1..e_k1 are always present (standard form).
ClassificationRecord search(const SearchSpec& spec);

/// Witness rows (k1 + k2 generator rows) for a set of point indices.
Matrix witness_matrix(const std::vector<Vec>& points, const std::vector<std::uint32_t>& chosen);

}  // namespace swrg
