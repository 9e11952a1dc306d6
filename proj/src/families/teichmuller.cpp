#include "swrg/families/teichmuller.hpp"

#include <algorithm>

namespace swrg {

namespace {

unsigned log2_exact(std::uint64_t q) {
    if (q < 2 || (q & (q - 1)) != 0) throw InvalidArgument("q must be a power of 2, at least 2");
    unsigned r = 0;
    while ((std::uint64_t{1} << r) < q) ++r;
    return r;
}

}  // namespace

std::vector<unsigned> teichmuller_legal_s(std::uint64_t q, unsigned k) {
    const unsigned r = log2_exact(q);
    if (k < 2) throw InvalidArgument("k must be at least 2");
    std::vector<unsigned> out;
    for (unsigned s = (k % 2 ? 0 : r); s <= (k - 1) * r; s += 2) out.push_back(s);
    return out;
}

TeichmullerParams teichmuller_params(std::uint64_t q, unsigned k, unsigned s) {
    const auto legal = teichmuller_legal_s(q, k);
    if (std::find(legal.begin(), legal.end(), s) == legal.end())
        throw InvalidArgument("s = " + std::to_string(s) + " is not legal for q = " + std::to_string(q) +
                              ", k = " + std::to_string(k));
    TeichmullerParams t;
    t.q = q;
    t.r = log2_exact(q);
    t.k = k;
    t.s = s;
    const BigInt Q(q), qk = bigpow(Q, k), two(2);
    t.n = bigpow(two, s) * (qk - 1) / (Q - 1);
    // 2^{s/2} q^{(k-1)/2} and 2^{s/2} q^{(k+1)/2} as powers of 2 (the exponents are integers on the legal set)
    const BigInt delta = bigpow(two, (s + t.r * (k - 1)) / 2);
    const BigInt eps = bigpow(two, (s + t.r * (k + 1)) / 2);
    const BigInt mid = bigpow(two, s) * qk;
    t.w = {mid - delta, mid, mid + delta};
    t.A = {(qk - 1) * (qk + eps) / 2, qk - 1, (qk - 1) * (qk - eps) / 2};
    t.b = bigpow(two, s) * bigpow(Q, t.r - 1);
    t.weight_scale = t.r >= 2 ? Rational(bigpow(Q, t.r - 2)) : Rational(BigInt(1), Q);
    t.S = t.weight_scale * Rational(t.w[0] + t.w[1] + t.w[2]);
    t.S_identity = Rational(3 * (t.b + t.n * (Q - 1) * bigpow(Q, t.r - 1)), Q);
    t.identity_holds = t.S == t.S_identity;
    t.degenerate = std::any_of(t.A.begin(), t.A.end(), [](const BigInt& a) { return a == 0; });
    t.code_size = 1 + t.A[0] + t.A[1] + t.A[2];
    return t;
}

}  // namespace swrg
