#include "swrg/spectral/conditions.hpp"

#include <algorithm>

namespace swrg {

BigInt eigenvalue(std::uint64_t n, WeightScale sc, const BigInt& b, std::uint64_t w) {
    if (sc.e == 0 || sc.q < 2) throw InvalidArgument("weight scale needs q >= 2 and e >= 1");
    return b + BigInt(n) * (sc.q - 1) * bigpow(BigInt(sc.q), sc.e - 1) - BigInt(sc.q) * w;
}

std::vector<std::pair<BigInt, std::uint64_t>> predicted_spectrum(const WeightDistribution& wd, WeightScale sc,
                                                                 const BigInt& b) {
    std::vector<std::pair<BigInt, std::uint64_t>> out;
    for (const auto& [w, a] : wd.entries) out.emplace_back(eigenvalue(wd.n, sc, b, w), a);
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first > y.first; });
    // merge equal eigenvalues (only possible for inconsistent input, kept for safety)
    std::vector<std::pair<BigInt, std::uint64_t>> merged;
    for (auto& e : out) {
        if (!merged.empty() && merged.back().first == e.first) merged.back().second += e.second;
        else merged.push_back(std::move(e));
    }
    return merged;
}

BigInt ssum_form(const BigInt& t1, const BigInt& t2, const BigInt& t3, unsigned s) {
    return (t2 - t3) * bigpow(t1, s) + (t3 - t1) * bigpow(t2, s) + (t1 - t2) * bigpow(t3, s);
}

bool ssum_condition(std::uint64_t n, WeightScale sc, const BigInt& b, unsigned s, std::array<std::uint64_t, 3> w) {
    if (!(w[0] < w[1] && w[1] < w[2])) throw InvalidArgument("weights must satisfy w1 < w2 < w3");
    if (s < 2) throw InvalidArgument("s must be at least 2");
    if (b < 0) throw InvalidArgument("loop count must be non-negative");
    return ssum_form(eigenvalue(n, sc, b, w[0]), eigenvalue(n, sc, b, w[1]), eigenvalue(n, sc, b, w[2]), s) == 0;
}

bool odd_s_family_check(std::uint64_t n, WeightScale sc, std::array<std::uint64_t, 3> w, const BigInt& b) {
    const BigInt t1 = eigenvalue(n, sc, b, w[0]), t2 = eigenvalue(n, sc, b, w[1]), t3 = eigenvalue(n, sc, b, w[2]);
    return t2 == 0 && t1 == -t3;
}

UniquenessReport uniqueness_guard(std::uint64_t n, WeightScale sc, const BigInt& b, std::array<std::uint64_t, 3> w,
                                  unsigned s_max) {
    UniquenessReport r;
    r.family = odd_s_family_check(n, sc, w, b);
    for (unsigned s = 2; s <= s_max; ++s)
        if (ssum_condition(n, sc, b, s, w)) r.passing.push_back(s);
    return r;
}

}  // namespace swrg
