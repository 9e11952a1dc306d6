#include "swrg/spectral/macwilliams.hpp"

#include <limits>

namespace swrg {

namespace {

BigInt binom(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    BigInt r = 1;
    for (std::uint64_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

}  // namespace

BigInt krawtchouk(std::uint64_t N, std::uint64_t j, std::uint64_t i) {
    BigInt s = 0;
    for (std::uint64_t h = 0; h <= j && h <= i; ++h) {
        BigInt t = binom(i, h) * binom(N - i, j - h);
        s += (h & 1) ? -t : t;
    }
    return s;
}

std::vector<BigInt> macwilliams_coefficients(const WeightDistribution& wd) {
    const std::uint64_t N = 2 * wd.n;
    BigInt size = 0;
    for (const auto& [w, a] : wd.entries) {
        if (w > N) throw InvalidArgument("weight " + std::to_string(w) + " exceeds 2n");
        size += a;
    }
    std::vector<BigInt> out(N + 1);
    for (std::uint64_t j = 0; j <= N; ++j) {
        BigInt s = 0;
        for (const auto& [w, a] : wd.entries) s += BigInt(a) * krawtchouk(N, j, w);
        if (s % size != 0) throw Inconsistent("MacWilliams coefficient B_" + std::to_string(j) + " is not an integer");
        out[j] = s / size;
        if (out[j] < 0) throw Inconsistent("MacWilliams coefficient B_" + std::to_string(j) + " is negative");
    }
    return out;
}

WeightDistribution macwilliams_hom(const WeightDistribution& wd) {
    const auto B = macwilliams_coefficients(wd);
    WeightDistribution out;
    out.n = wd.n;
    for (std::uint64_t j = 0; j < B.size(); ++j) {
        if (B[j] == 0) continue;
        if (B[j] > BigInt(std::numeric_limits<std::uint64_t>::max())) throw BudgetExceeded("dual frequency exceeds 64 bits");
        out.entries.emplace_back(j, static_cast<std::uint64_t>(B[j]));
        out.code_size += static_cast<std::uint64_t>(B[j]);
    }
    return out;
}

PowerMoments power_moments(const WeightDistribution& wd, int k1, int k2) {
    PowerMoments pm;
    pm.n = wd.n;
    pm.cls = 2 * k1 + k2;
    for (const auto& [w, a] : wd.entries) {
        if (w == 0) continue;
        BigInt p = 1;
        for (int t = 0; t < 4; ++t) {
            pm.moment[t] += BigInt(a) * p;
            p *= w;
        }
    }
    const Rational N = Rational(BigInt(2 * wd.n));
    const Rational c = Rational(BigInt(1) << pm.cls);  // |C|
    // Gray image has length N and 2^cls words:
    //   sum iA   = |C|/2 (N - B1)
    //   sum i^2A = |C|/4 (N(N+1) - 2N B1 + 2 B2)
    //   sum i^3A = |C|/8 (N^2(N+3) - (3N^2+3N-2) B1 + 6N B2 - 6 B3)
    const Rational m1(pm.moment[1]), m2(pm.moment[2]), m3(pm.moment[3]);
    pm.B1 = N - 2 * m1 / c;
    pm.B2 = (4 * m2 / c - N * (N + 1) + 2 * N * pm.B1) / 2;
    pm.B3 = (N * N * (N + 3) - (3 * N * N + 3 * N - 2) * pm.B1 + 6 * N * pm.B2 - 8 * m3 / c) / 6;
    pm.b1_zero = pm.B1 == 0;
    const bool size_ok = pm.moment[0] + 1 == (BigInt(1) << pm.cls);
    auto nonneg_int = [](const Rational& r) { return is_integer(r) && r >= 0; };
    pm.consistent = size_ok && nonneg_int(pm.B1) && nonneg_int(pm.B2) && nonneg_int(pm.B3);
    if (!size_ok) pm.note = "frequencies do not sum to 2^(2k1+k2)";
    else if (!pm.consistent) pm.note = "implied dual frequencies are not non-negative integers";
    return pm;
}

}  // namespace swrg
