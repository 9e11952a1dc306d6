#pragma once

// Brute-force reference computations. They share no code paths with the library beyond
// ring arithmetic: codes are spanned by explicit R-combinations, duals by scanning R^n.

#include "swrg/algebra/ring.hpp"
#include "swrg/code/linear_code.hpp"
#include "swrg/common.hpp"

#include <map>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using swrg::BigInt;
using swrg::Matrix;
using swrg::Ring;
using swrg::Vec;

inline Vec unrank(const Ring& R, std::uint64_t t, std::size_t len) {
    Vec v(len);
    for (std::size_t i = 0; i < len; ++i, t /= R.size()) v[i] = static_cast<Ring::Elem>(t % R.size());
    return v;
}

inline std::uint64_t pow_u(std::uint64_t b, std::size_t e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

/// Every sum c_1 g_1 + ... + c_l g_l with c in R^l.
inline std::set<Vec> span(const Ring& R, const Matrix& rows) {
    std::set<Vec> out;
    const std::size_t l = rows.size(), n = rows[0].size();
    for (std::uint64_t t = 0; t < pow_u(R.size(), l); ++t) {
        const Vec c = unrank(R, t, l);
        Vec w(n, 0);
        for (std::size_t i = 0; i < l; ++i)
            for (std::size_t j = 0; j < n; ++j) w[j] = R.add(w[j], R.mul(c[i], rows[i][j]));
        out.insert(w);
    }
    return out;
}

/// {x in R^n : x . g_i = 0 for all rows}.
inline std::set<Vec> dual_words(const Ring& R, const Matrix& rows) {
    std::set<Vec> out;
    const std::size_t n = rows[0].size();
    for (std::uint64_t t = 0; t < pow_u(R.size(), n); ++t) {
        const Vec x = unrank(R, t, n);
        bool ok = true;
        for (const auto& g : rows) {
            Ring::Elem s = 0;
            for (std::size_t j = 0; j < n; ++j) s = R.add(s, R.mul(x[j], g[j]));
            if (s != 0) {
                ok = false;
                break;
            }
        }
        if (ok) out.insert(x);
    }
    return out;
}

inline std::uint64_t weight(const Ring& R, const Vec& v) {
    std::uint64_t s = 0;
    for (auto x : v) s += R.hom_weight(x);
    return s;
}

inline std::map<std::uint64_t, std::uint64_t> distribution(const Ring& R, const std::set<Vec>& words) {
    std::map<std::uint64_t, std::uint64_t> m;
    for (const auto& w : words) ++m[weight(R, w)];
    return m;
}

inline std::map<std::uint64_t, std::uint64_t> as_map(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& e) {
    return {e.begin(), e.end()};
}

/// Row `base` of (A + bI)^s from a dense adjacency matrix, big-integer arithmetic.
inline std::vector<BigInt> dense_walks(const std::vector<std::vector<std::uint8_t>>& A, std::uint64_t b, unsigned s,
                                       std::size_t base) {
    const std::size_t V = A.size();
    std::vector<BigInt> x(V, 0), y(V, 0);
    x[base] = 1;
    for (unsigned t = 0; t < s; ++t) {
        for (std::size_t v = 0; v < V; ++v) {
            BigInt acc = BigInt(b) * x[v];
            for (std::size_t u = 0; u < V; ++u)
                if (A[u][v]) acc += x[u];
            y[v] = acc;
        }
        x.swap(y);
    }
    return x;
}

/// Number of ordered s-tuples from `summands` adding to each h in R^k (direct enumeration).
inline std::map<Vec, std::uint64_t> representation_counts(const Ring& R, std::size_t k, const std::vector<Vec>& summands,
                                                          unsigned s) {
    std::map<Vec, std::uint64_t> out;
    const std::uint64_t total = pow_u(summands.size(), s);
    for (std::uint64_t t = 0; t < total; ++t) {
        Vec h(k, 0);
        std::uint64_t x = t;
        for (unsigned i = 0; i < s; ++i, x /= summands.size()) {
            const Vec& v = summands[x % summands.size()];
            for (std::size_t j = 0; j < k; ++j) h[j] = R.add(h[j], v[j]);
        }
        ++out[h];
    }
    return out;
}

inline Matrix random_matrix(const Ring& R, std::size_t l, std::size_t n, std::mt19937_64& rng) {
    Matrix M(l, Vec(n));
    std::uniform_int_distribution<std::uint32_t> d(0, R.size() - 1);
    for (auto& row : M)
        for (auto& x : row) x = d(rng);
    return M;
}

}  // namespace oracle
