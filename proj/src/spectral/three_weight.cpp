#include "swrg/spectral/three_weight.hpp"

#include "swrg/spectral/macwilliams.hpp"
#include "swrg/spectral/weight_distribution.hpp"


namespace swrg {

namespace {

using i128 = __int128;

// Integer numerators/denominators of the frequency formulas. 3*y*B3 = y*T + 2*w1*w2*w3.
struct Raw {
    i128 num[3], den[3];
    i128 b3num, b3den;
};

Raw raw_prediction(i128 n, i128 y, i128 w1, i128 w2, i128 w3) {
    Raw r;
    r.num[0] = y * (2 * n * n - 2 * n * w2 - 2 * n * w3 + 2 * w2 * w3 + n) - w2 * w3;
    r.den[0] = (w2 - w1) * (w3 - w1);
    r.num[1] = y * (2 * n * n - 2 * n * w1 - 2 * n * w3 + 2 * w1 * w3 + n) - w1 * w3;
    r.den[1] = (w2 - w3) * (w2 - w1);
    r.num[2] = y * (2 * n * n - 2 * n * w1 - 2 * n * w2 + 2 * w1 * w2 + n) - w1 * w2;
    r.den[2] = (w3 - w1) * (w3 - w2);
    const i128 S = w1 + w2 + w3, P = w1 * w2 * w3, E2 = w1 * w2 + w1 * w3 + w2 * w3;
    const i128 T = 2 * n * n * (2 * n + 3) - S * 2 * n * (2 * n + 1) - 4 * P + 4 * n * E2;
    r.b3num = y * T + 2 * P;
    r.b3den = 3 * y;
    return r;
}

bool raw_admissible(const Raw& r) {
    for (int i = 0; i < 3; ++i) {
        if (r.num[i] % r.den[i] != 0) return false;
        if (r.num[i] / r.den[i] < 1) return false;
    }
    return r.b3num % r.b3den == 0 && r.b3num / r.b3den >= 0;
}

bool divisibility_ok(int cls, std::uint64_t w1, std::uint64_t w2, std::uint64_t w3) {
    if (cls < 2) return true;
    const BigInt P = BigInt(w1) * w2 * w3;
    return P % (BigInt(1) << (cls - 2)) == 0;
}

bool parity_ok(std::uint64_t n, const TriplePrediction& p) {
    int odd = 0, j = -1;
    for (int i = 0; i < 3; ++i)
        if (p.w[i] & 1) ++odd, j = i;
    if (odd == 3) return false;
    if (odd == 1) return p.A[j] == Rational(p.y) && (p.w[j] == n || p.w[j] == n + 1);
    return true;
}

bool fits_fast(std::uint64_t n, int cls) { return cls <= 60 && n <= 100000; }

}  // namespace

bool TriplePrediction::admissible() const {
    for (const auto& a : A)
        if (!is_integer(a) || a < 1) return false;
    return is_integer(B3) && B3 >= 0;
}

TriplePrediction predict_three_weight(std::uint64_t n, const BigInt& y, std::uint64_t w1, std::uint64_t w2, std::uint64_t w3) {
    if (!(w1 < w2 && w2 < w3)) throw InvalidArgument("weights must satisfy w1 < w2 < w3");
    if (y <= 0) throw InvalidArgument("y must be positive");
    TriplePrediction p;
    p.n = n;
    p.y = y;
    p.w[0] = w1, p.w[1] = w2, p.w[2] = w3;
    const BigInt N(n), a(w1), b(w2), c(w3);
    auto freq = [&](const BigInt& u, const BigInt& v, const BigInt& d1, const BigInt& d2) {
        BigInt num = y * (2 * N * N - 2 * N * u - 2 * N * v + 2 * u * v + N) - u * v;
        return ratio(num, d1 * d2);
    };
    p.A[0] = freq(b, c, b - a, c - a);
    p.A[1] = freq(a, c, b - c, b - a);
    p.A[2] = freq(a, b, c - a, c - b);
    const BigInt S = a + b + c, P = a * b * c, E2 = a * b + a * c + b * c;
    const BigInt T = 2 * N * N * (2 * N + 3) - S * 2 * N * (2 * N + 1) - 4 * P + 4 * N * E2;
    p.B3 = Rational(T, 3) + ratio(2 * P, 3 * y);
    return p;
}

int delsarte_class_bound(std::uint64_t n) {
    const std::uint64_t N = 2 * n;
    BigInt s = 1 + BigInt(N) + BigInt(N) * (N - 1) / 2 + BigInt(N) * (N - 1) * (N - 2) / 6;
    int k = 0;
    while ((BigInt(1) << (k + 1)) <= s) ++k;
    return static_cast<int>(std::min<std::uint64_t>(k, N));
}

std::vector<FeasibleTriple> feasible_triples(std::uint64_t n, const FeasibilityOptions& opt) {
    std::vector<FeasibleTriple> out;
    if (n == 0) return out;
    const std::uint64_t W = 2 * n;
    const int cmax = opt.cls_max > 0 ? opt.cls_max : delsarte_class_bound(n);
    for (int cls = std::max(1, opt.cls_min); cls <= cmax; ++cls) {
        const BigInt y = BigInt(1) << (cls - 1);
        for (std::uint64_t w1 = 1; w1 <= W; ++w1)
            for (std::uint64_t w2 = w1 + 1; w2 <= W; ++w2)
                for (std::uint64_t w3 = w2 + 1; w3 <= W; ++w3) {
                    const std::uint64_t S = w1 + w2 + w3;
                    if (opt.filter == SumFilter::Exactly && S != opt.sum) continue;
                    if (opt.filter == SumFilter::AtLeast3nMod3 && (S < 3 * n || S % 3 != 0)) continue;
                    if (fits_fast(n, cls) &&
                        !raw_admissible(raw_prediction(n, i128(1) << (cls - 1), w1, w2, w3)))
                        continue;
                    if (!divisibility_ok(cls, w1, w2, w3)) continue;
                    TriplePrediction p = predict_three_weight(n, y, w1, w2, w3);
                    if (!p.admissible()) continue;
                    if (opt.parity_lemmas && !parity_ok(n, p)) continue;
                    FeasibleTriple t;
                    t.n = n;
                    t.cls = cls;
                    t.w[0] = w1, t.w[1] = w2, t.w[2] = w3;
                    t.prediction = p;
                    t.S = S;
                    // q = 2, e = 2: S = (3/2)(b + 2n)
                    if (S >= 3 * n && (2 * S) % 3 == 0) t.b = BigInt(2 * S / 3) - 2 * BigInt(n);
                    out.push_back(std::move(t));
                }
    }
    return out;
}

std::vector<std::array<std::uint64_t, 3>> candidate_triples(std::uint64_t n, std::uint64_t S) {
    std::vector<std::array<std::uint64_t, 3>> out;
    const std::uint64_t W = 2 * n;
    for (std::uint64_t w1 = 1; w1 <= W; ++w1)
        for (std::uint64_t w2 = w1 + 1; w2 <= W; ++w2) {
            if (S <= w1 + w2) break;
            const std::uint64_t w3 = S - w1 - w2;
            if (w3 > w2 && w3 <= W) out.push_back({w1, w2, w3});
        }
    return out;
}

std::vector<ExceptionalTuple> exceptional_scan(std::uint64_t n_max) {
    std::vector<ExceptionalTuple> out;
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        const int cmax = delsarte_class_bound(n);
        for (int cls = 1; cls <= cmax; ++cls) {
            for (const auto& w : candidate_triples(n, 3 * n)) {
                if (w[1] == n) continue;
                if (fits_fast(n, cls) && !raw_admissible(raw_prediction(n, i128(1) << (cls - 1), w[0], w[1], w[2])))
                    continue;
                if (!divisibility_ok(cls, w[0], w[1], w[2])) continue;
                const TriplePrediction p = predict_three_weight(n, BigInt(1) << (cls - 1), w[0], w[1], w[2]);
                if (!p.admissible()) continue;
                ExceptionalTuple e;
                e.n = n;
                e.cls = cls;
                for (int i = 0; i < 3; ++i) {
                    e.w[i] = w[i];
                    e.A[i] = numerator(p.A[i]);
                }
                e.y = p.y;
                e.printed_y = cls >= 2 ? BigInt(1) << (cls - 2) : BigInt(0);
                e.B3 = numerator(p.B3);
                WeightDistribution wd;
                wd.n = n;
                wd.entries.emplace_back(0, 1);
                for (int i = 0; i < 3; ++i) wd.entries.emplace_back(w[i], static_cast<std::uint64_t>(e.A[i]));
                wd.code_size = static_cast<std::uint64_t>(BigInt(1) << cls);
                try {
                    macwilliams_coefficients(wd);
                    e.macwilliams_nonnegative = true;
                } catch (const Inconsistent&) {
                    e.macwilliams_nonnegative = false;
                }
                out.push_back(std::move(e));
            }
        }
    }
    return out;
}

}  // namespace swrg
