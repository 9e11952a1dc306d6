#include "swrg/graph/ssum.hpp"

#include "swrg/spectral/weight_distribution.hpp"

#include <algorithm>
#include <set>

namespace swrg {

namespace {

std::uint64_t vec_key(const Ring& R, const Vec& v) {
    std::uint64_t key = 0;
    for (std::size_t i = v.size(); i-- > 0;) key = key * R.size() + v[i];
    return key;
}

Vec key_vec(const Ring& R, std::uint64_t key, std::size_t k) {
    Vec v(k);
    for (std::size_t i = 0; i < k; ++i, key /= R.size()) v[i] = static_cast<Ring::Elem>(key % R.size());
    return v;
}

template <class T>
std::vector<T> convolve(const Ring& R, std::size_t k, std::uint64_t G, const std::vector<std::uint64_t>& summands,
                        unsigned s) {
    // translation table: tr[j*G + g] = g + summand_j
    std::vector<std::uint32_t> tr(summands.size() * G);
    for (std::uint64_t g = 0; g < G; ++g) {
        const Vec gv = key_vec(R, g, k);
        for (std::size_t j = 0; j < summands.size(); ++j) {
            const Vec sv = key_vec(R, summands[j], k);
            Vec w(k);
            for (std::size_t i = 0; i < k; ++i) w[i] = R.add(gv[i], sv[i]);
            tr[j * G + g] = static_cast<std::uint32_t>(vec_key(R, w));
        }
    }
    std::vector<T> cur(G, T(0)), next(G, T(0));
    cur[0] = T(1);
    for (unsigned t = 0; t < s; ++t) {
        std::fill(next.begin(), next.end(), T(0));
        for (std::size_t j = 0; j < summands.size(); ++j)
            for (std::uint64_t g = 0; g < G; ++g) next[tr[j * G + g]] += cur[g];
        cur.swap(next);
    }
    return cur;
}

}  // namespace

SsumResult ssum_set_check(const Ring& R, std::size_t k, const std::vector<Vec>& omega, unsigned s, bool include_zero,
                          std::uint64_t budget) {
    SsumResult r = ssum_set_check_loops(R, k, omega, s, include_zero ? 1 : 0, budget);
    r.include_zero = include_zero;
    return r;
}

SsumResult ssum_set_check_loops(const Ring& R, std::size_t k, const std::vector<Vec>& omega, unsigned s, std::uint64_t b,
                                std::uint64_t budget) {
    if (s < 1) throw InvalidArgument("s must be positive");
    if (k == 0) throw InvalidArgument("dimension must be positive");
    const BigInt Gbig = bigpow(BigInt(R.size()), static_cast<unsigned>(k));
    if (Gbig > BigInt(budget)) throw BudgetExceeded("group R^k exceeds budget");
    const auto G = static_cast<std::uint64_t>(Gbig);

    std::set<std::uint64_t> members;
    for (const auto& v : omega) {
        if (v.size() != k) throw InvalidArgument("Omega vector has wrong dimension");
        if (std::all_of(v.begin(), v.end(), [](auto x) { return x == 0; })) throw InvalidArgument("Omega contains 0");
        members.insert(vec_key(R, v));
    }
    for (const auto& v : omega)
        for (auto u : R.units()) {
            Vec m(k);
            for (std::size_t i = 0; i < k; ++i) m[i] = R.mul(u, v[i]);
            if (!members.count(vec_key(R, m))) throw InvalidArgument("Omega is not stable under unit scaling");
        }
    std::vector<std::uint64_t> summands(members.begin(), members.end());
    summands.insert(summands.begin(), b, std::uint64_t{0});

    std::vector<BigInt> counts;
    if (bigpow(BigInt(summands.size()), s) < (BigInt(1) << 62)) {
        for (auto c : convolve<std::int64_t>(R, k, G, summands, s)) counts.emplace_back(c);
    } else {
        counts = convolve<BigInt>(R, k, G, summands, s);
    }

    SsumResult res;
    res.s = s;
    res.include_zero = b == 1;
    res.loops = b;
    res.holds = true;
    std::optional<std::uint64_t> first_in, first_out;
    for (std::uint64_t h = 1; h < G; ++h) {
        auto& first = members.count(h) ? first_in : first_out;
        if (!first) {
            first = h;
            continue;
        }
        if (counts[h] != counts[*first]) {
            res.holds = false;
            res.witness = std::make_pair(key_vec(R, *first, k), key_vec(R, h, k));
            break;
        }
    }
    if (first_in) res.sigma0 = counts[*first_in];
    if (first_out) res.sigma1 = counts[*first_out];
    return res;
}

std::size_t dual_weight_count_check(const Ring& R, std::size_t k, const std::vector<Vec>& omega, std::uint64_t budget) {
    if (omega.empty()) return 0;
    Matrix rows(k, Vec(omega.size()));
    for (std::size_t j = 0; j < omega.size(); ++j)
        for (std::size_t i = 0; i < k; ++i) rows[i][j] = omega[j][i];
    const auto C = LinearCode::from_rows(R, rows);
    return weight_distribution(C, budget).nonzero_count();
}

}  // namespace swrg
