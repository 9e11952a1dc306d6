#pragma once

#include "swrg/graph/cayley.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace swrg {

/// Row `base` of (A + bI)^s: number of length-s walks from base to each vertex.
std::vector<BigInt> walk_counts(const CayleyGraph& G, unsigned s, std::uint32_t base);
inline std::vector<BigInt> walk_counts(const CayleyGraph& G, unsigned s) { return walk_counts(G, s, G.zero_index()); }

/// trace((A + bI)^t) for t = 0..t_max.
std::vector<BigInt> trace_powers(const CayleyGraph& G, unsigned t_max);

struct SrgParameters {
    std::uint64_t v = 0, k = 0;
    BigInt lambda, mu;
};

struct SwrgCertificate {
    unsigned s = 0;
    bool holds = false;
    BigInt lambda, nu;
    std::optional<BigInt> mu;  // no non-adjacent pair: vacuous
    /// When refuted: two targets (walks counted from vertex 0) with equal adjacency status.
    std::optional<std::pair<std::uint32_t, std::uint32_t>> witness;
    std::optional<SrgParameters> srg;  // s = 2 and b accounted for
    bool connected = true;
};

/// (A + bI)^s = lambda A + mu (J - I - A) + nu I, checked from vertex 0 (Cayley graphs are vertex-transitive).
SwrgCertificate is_swrg(const CayleyGraph& G, unsigned s);

struct SpectrumCertificate {
    std::vector<std::pair<BigInt, std::uint64_t>> predicted;
    bool annihilator_zero = false;
    std::vector<BigInt> traces;              // trace(M^t), t = 0..#theta-1
    std::vector<Rational> multiplicities;    // Vandermonde solution
    bool multiplicities_match = false;
    bool verified() const { return annihilator_zero && multiplicities_match; }
};

/// Certifies that M = A + bI has exactly the predicted integer spectrum.
SpectrumCertificate verify_spectrum(const CayleyGraph& G, const std::vector<std::pair<BigInt, std::uint64_t>>& predicted);

}  // namespace swrg
