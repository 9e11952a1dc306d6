#include "swrg/code/gray.hpp"

#include <string>
#include <unordered_set>

namespace swrg {

namespace {

enum class GrayKind { Z4, F2U };

GrayKind gray_kind(const Ring& R) {
    if (R.family() == RingFamily::Zpm && R.size() == 4) return GrayKind::Z4;
    if (R.family() == RingFamily::FqU && R.q() == 2) return GrayKind::F2U;
    throw InvalidArgument("Gray map is defined for Z4 and F2+uF2 only, not " + R.name());
}

}  // namespace

BitVec gray_map(const Ring& R, const std::uint8_t* word, std::size_t n) {
    static constexpr std::uint8_t z4[4][2] = {{0, 0}, {0, 1}, {1, 1}, {1, 0}};
    const GrayKind kind = gray_kind(R);
    BitVec out(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        const unsigned x = word[i];
        if (kind == GrayKind::Z4) {
            out[2 * i] = z4[x][0];
            out[2 * i + 1] = z4[x][1];
        } else {
            const unsigned a = x & 1u, b = x >> 1;  // x = a + 2b encodes a + ub
            out[2 * i] = static_cast<std::uint8_t>(b);
            out[2 * i + 1] = static_cast<std::uint8_t>(a ^ b);
        }
    }
    return out;
}

BitVec gray_map(const Ring& R, const Vec& word) {
    std::vector<std::uint8_t> bytes(word.begin(), word.end());
    return gray_map(R, bytes.data(), bytes.size());
}

LinearityScan is_binary_linear(const std::vector<BitVec>& words) {
    LinearityScan scan;
    std::unordered_set<std::string> image;
    for (const auto& w : words) image.emplace(w.begin(), w.end());
    std::string sum;
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = 0; j < words.size(); ++j) {
            ++scan.pairs_checked;
            sum.assign(words[i].size(), 0);
            for (std::size_t t = 0; t < sum.size(); ++t) sum[t] = static_cast<char>(words[i][t] ^ words[j][t]);
            if (!image.count(sum)) {
                ++scan.failing_pairs;
                if (scan.linear) scan.witness = std::make_pair(i, j);
                scan.linear = false;
            }
        }
    return scan;
}

GrayImage gray_image(const LinearCode& C, std::uint64_t budget) {
    GrayImage g;
    C.for_each_codeword(
        [&](const std::uint8_t* w) {
            g.codewords.emplace_back(w, w + C.length());
            g.images.push_back(gray_map(C.ring(), w, C.length()));
        },
        budget);
    return g;
}

}  // namespace swrg
