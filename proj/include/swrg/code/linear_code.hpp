#pragma once

#include "swrg/algebra/ring.hpp"
#include "swrg/common.hpp"

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

namespace swrg {

using Vec = std::vector<Ring::Elem>;
using Matrix = std::vector<Vec>;  // row-major, one Vec per row

inline constexpr std::uint64_t kDefaultEnumerationBudget = std::uint64_t{1} << 24;

/// Row-reduced form U*G*P whose permuted columns show the block pattern
/// [I A B; 0 gI gD] (one block row per pivot valuation).
struct StandardForm {
    Matrix permuted;                  // reduced rows, columns in permuted order
    Matrix rows;                      // same rows, original column order
    std::vector<std::size_t> perm;    // permuted column j is original column perm[j]
    std::vector<int> valuations;      // pivot valuation per row, nondecreasing
    std::vector<int> shape;           // shape[i] = number of rows with pivot valuation i
};

StandardForm standard_form(const Ring& R, const Matrix& rows);

/// Additive group generators v_j with orders o_j such that the code is the direct sum of <v_j>.
struct AdditiveBasis {
    Matrix generators;
    std::vector<std::uint32_t> orders;
};

/// Linear code over a chain ring given by generator rows. Immutable.
class LinearCode {
public:
    /// Rejects an empty matrix, ragged rows, out-of-range entries, rings with more than 256
    /// elements, and (unless allow_zero_columns) all-zero columns.
    static LinearCode from_rows(const Ring& R, Matrix rows, bool allow_zero_columns = false);

    const Ring& ring() const { return ring_; }
    const Matrix& rows() const { return rows_; }
    std::size_t length() const { return length_; }
    const StandardForm& standard() const { return sf_; }
    const std::vector<int>& shape() const { return sf_.shape; }
    /// (k1, k2) for depth <= 2 rings.
    std::pair<int, int> shape2() const;
    /// sum over rows of (e - valuation); |C| = q^log_size()
    int log_size() const;
    BigInt size() const;
    /// |C| as an integer; throws BudgetExceeded above 2^62.
    std::uint64_t size_u64() const;

    Vec column(std::size_t j) const;
    Vec encode(const Vec& message) const;
    const AdditiveBasis& additive_basis() const { return basis_; }

    /// Calls fn once per codeword (words are bytes, length()). Throws BudgetExceeded if |C| > budget.
    void for_each_codeword(const std::function<void(const std::uint8_t*)>& fn,
                           std::uint64_t budget = kDefaultEnumerationBudget) const;
    std::vector<Vec> codewords(std::uint64_t budget = kDefaultEnumerationBudget) const;

    bool has_zero_column() const;

private:
    Ring ring_;
    Matrix rows_;
    std::size_t length_ = 0;
    StandardForm sf_;
    AdditiveBasis basis_;
};

LinearCode dual_code(const LinearCode& C);

bool is_regular(const LinearCode& C);
bool is_projective(const LinearCode& C);
bool is_proper(const LinearCode& C, std::uint64_t budget = kDefaultEnumerationBudget);
/// Minimum nonzero homogeneous weight of the dual code, by enumeration (0 when the dual is {0}).
std::uint64_t dual_minimum_weight(const LinearCode& C, std::uint64_t budget = kDefaultEnumerationBudget);
bool dual_distance_at_least(const LinearCode& C, std::uint64_t d, std::uint64_t budget = kDefaultEnumerationBudget);
/// (2q-1)q^{e-2}: the dual-distance threshold equivalent to regular and projective.
std::uint64_t projective_dual_threshold(const Ring& R);

/// Lexicographically least vector among the unit multiples of v.
Vec associate_canonical(const Ring& R, const Vec& v);
/// Lexicographically least vector among lambda*v for lambda in `scalars`.
Vec scalar_canonical(const Ring& R, const Vec& v, const std::vector<Ring::Elem>& scalars);

LinearCode punctured(const LinearCode& C, std::size_t coordinate);
/// Subcode of words with even homogeneous weight.
LinearCode even_weight_subcode(const LinearCode& C, std::uint64_t budget = kDefaultEnumerationBudget);

enum class ReplicationGrouping { Identical, PrimeScalars, Associates };

struct Replication {
    std::uint64_t factor = 1;                 // gcd of class multiplicities
    std::vector<std::uint64_t> multiplicities;
    LinearCode reduced;                       // one column per class, repeated multiplicity/factor times
};

/// Groups columns into classes (identical, equal up to F_p^* scalars, or associate) and
/// factors out the common multiplicity.
Replication replication_factor(const LinearCode& C, ReplicationGrouping grouping = ReplicationGrouping::PrimeScalars);

}  // namespace swrg
