#include "swrg/families/trace_code.hpp"

#include "swrg/algebra/field.hpp"
#include "swrg/algebra/galois.hpp"
#include "swrg/graph/cayley.hpp"

namespace swrg {

Matrix trace_code_rows(int p, int m) {
    if (p < 3 || !is_prime(p)) throw InvalidArgument("trace_code: p must be an odd prime");
    if (m < 2 || m % 4 != 2) throw InvalidArgument("trace_code: m must be 2 mod 4");
    if (bigpow(BigInt(p), static_cast<unsigned>(2 * m)) > bigpow(BigInt(3), 10))
        throw BudgetExceeded("trace_code: p^2m exceeds 3^10");
    const Ring big = Ring::fqu(p, m), small = Ring::fqu(p, 1);
    const Field& F = big.residue_field();
    const std::uint32_t q = F.size();

    // x = a + u b with a a nonzero square and b arbitrary; encoding a + q*b
    std::vector<Ring::Elem> L;
    for (Field::Elem a = 1; a < q; ++a) {
        if (!F.is_square(a)) continue;
        for (Field::Elem b = 0; b < q; ++b) L.push_back(static_cast<Ring::Elem>(a + q * b));
    }
    Matrix rows(static_cast<std::size_t>(m), Vec(L.size()));
    for (int i = 0; i < m; ++i) {
        std::vector<int> d(static_cast<std::size_t>(m), 0);
        d[static_cast<std::size_t>(i)] = 1;
        const Ring::Elem beta = F.from_digits(d);
        for (std::size_t j = 0; j < L.size(); ++j) rows[i][j] = fqu_trace(big, small, big.mul(beta, L[j]));
    }
    return rows;
}

TraceCodeInstance trace_code(int p, int m, std::uint64_t budget) {
    const Ring R = Ring::fqu(p, 1);
    auto C = LinearCode::from_rows(R, trace_code_rows(p, m));
    auto rep = replication_factor(C, ReplicationGrouping::PrimeScalars);
    TraceCodeInstance t{p, m, C, rep, {}, {}, false, false, 0, 0, false, {}, {}, 0, std::nullopt};
    t.wd_C = weight_distribution(C, budget);
    t.wd_P = weight_distribution(rep.reduced, budget);
    t.P_projective = is_projective(rep.reduced);
    t.P_three_weight = t.wd_P.three_weight();
    for (auto w : t.wd_P.nonzero_weights()) t.sum_P += w;
    const auto nP = rep.reduced.length();
    t.sum_target = Rational(3 * BigInt(nP) * (p - 1), BigInt(p));
    t.sum_relation = t.P_three_weight && Rational(t.sum_P) == t.sum_target;
    const BigInt pm1 = bigpow(BigInt(p), static_cast<unsigned>(m - 1));
    const BigInt base = bigpow(BigInt(p), static_cast<unsigned>(2 * m - 1)) - pm1;
    const BigInt half = bigpow(BigInt(p), static_cast<unsigned>(m / 2));
    t.closed_form_weights = {base - pm1 * (half + 1), base, base + pm1 * (half - 1)};

    const auto& P = rep.reduced;
    const auto omega = omega_from_columns(R, P.rows());
    t.tss = ssum_set_check(R, P.rows().size(), omega, 3, false);
    t.implied_loops = Rational(BigInt(p) * t.sum_P, 3) - Rational(BigInt(nP) * (p - 1) * p);
    if (is_integer(t.implied_loops) && t.implied_loops >= 0)
        t.tss_with_loops = ssum_set_check_loops(R, P.rows().size(), omega, 3,
                                                static_cast<std::uint64_t>(numerator(t.implied_loops)));
    return t;
}

}  // namespace swrg
