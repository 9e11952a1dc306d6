#include "swrg/spectral/weight_distribution.hpp"

#include "swrg/kernels/kernels.hpp"

#include <algorithm>
#include <map>

namespace swrg {

std::uint64_t WeightDistribution::frequency(std::uint64_t w) const {
    for (const auto& [wt, a] : entries)
        if (wt == w) return a;
    return 0;
}

std::vector<std::uint64_t> WeightDistribution::nonzero_weights() const {
    std::vector<std::uint64_t> out;
    for (const auto& [wt, a] : entries)
        if (wt != 0 && a != 0) out.push_back(wt);
    return out;
}

std::string WeightDistribution::to_string() const {
    std::string s = "{";
    bool first = true;
    for (const auto& [wt, a] : entries) {
        if (wt == 0 && entries.size() > 1) continue;
        if (!first) s += ", ";
        first = false;
        s += std::to_string(wt) + ":" + std::to_string(a);
    }
    return s + "}";
}

WeightDistribution WeightDistribution::from_pairs(std::size_t n, const std::vector<std::pair<std::uint64_t, std::uint64_t>>& pairs) {
    std::map<std::uint64_t, std::uint64_t> m;
    for (const auto& [w, a] : pairs) m[w] += a;
    if (!m.count(0)) m[0] = 1;
    WeightDistribution wd;
    wd.n = n;
    for (const auto& [w, a] : m) {
        if (a == 0) continue;
        wd.entries.emplace_back(w, a);
        wd.code_size += a;
    }
    return wd;
}

std::uint64_t hom_weight(const Ring& R, const Vec& word) {
    std::uint64_t s = 0;
    for (auto x : word) s += R.hom_weight(x);
    return s;
}

WeightDistribution weight_distribution(const LinearCode& C, std::uint64_t budget) {
    const Ring& R = C.ring();
    const std::size_t n = C.length();
    std::vector<std::uint64_t> hist(n * R.max_weight() + 1, 0);
    if (R.size() <= 16 && R.max_weight() <= 255) {
        std::uint8_t wtable[16] = {};
        for (Ring::Elem a = 0; a < R.size(); ++a) wtable[a] = static_cast<std::uint8_t>(R.hom_weight(a));
        const auto& K = kernels::active();
        C.for_each_codeword([&](const std::uint8_t* w) { ++hist[K.weight_sum(w, n, wtable)]; }, budget);
    } else {
        C.for_each_codeword(
            [&](const std::uint8_t* w) {
                std::uint64_t s = 0;
                for (std::size_t i = 0; i < n; ++i) s += R.hom_weight(w[i]);
                ++hist[s];
            },
            budget);
    }
    WeightDistribution wd;
    wd.n = n;
    for (std::size_t w = 0; w < hist.size(); ++w)
        if (hist[w]) {
            wd.entries.emplace_back(w, hist[w]);
            wd.code_size += hist[w];
        }
    return wd;
}

WeightDistribution weight_distribution_of_words(const Ring& R, std::size_t n, const std::vector<Vec>& words) {
    std::map<std::uint64_t, std::uint64_t> m;
    for (const auto& w : words) ++m[hom_weight(R, w)];
    WeightDistribution wd;
    wd.n = n;
    for (const auto& [w, a] : m) {
        wd.entries.emplace_back(w, a);
        wd.code_size += a;
    }
    return wd;
}

}  // namespace swrg
