#include "swrg/classify/invariant.hpp"

#include <algorithm>
#include <map>
#include <vector>

namespace swrg {

std::string canonical_invariant(const LinearCode& C, std::uint64_t budget) {
    const Ring& R = C.ring();
    const std::size_t n = C.length();
    std::map<std::uint64_t, std::uint64_t> wd;
    std::vector<std::map<std::pair<std::uint64_t, std::uint32_t>, std::uint64_t>> profile(n);
    std::vector<std::uint32_t> ew(n);
    C.for_each_codeword(
        [&](const std::uint8_t* w) {
            std::uint64_t s = 0;
            for (std::size_t j = 0; j < n; ++j) s += ew[j] = R.hom_weight(w[j]);
            ++wd[s];
            for (std::size_t j = 0; j < n; ++j) ++profile[j][{s, ew[j]}];
        },
        budget);
    std::string out = R.name() + "|n" + std::to_string(n) + "|shape";
    for (int k : C.shape()) out += "," + std::to_string(k);
    out += "|wd";
    for (const auto& [w, a] : wd) out += " " + std::to_string(w) + ":" + std::to_string(a);
    std::vector<std::string> cols;
    for (const auto& p : profile) {
        std::string s;
        for (const auto& [key, cnt] : p)
            s += std::to_string(key.first) + "/" + std::to_string(key.second) + "=" + std::to_string(cnt) + ";";
        cols.push_back(std::move(s));
    }
    std::sort(cols.begin(), cols.end());
    out += "|cols";
    for (const auto& c : cols) out += " [" + c + "]";
    return out;
}

}  // namespace swrg
