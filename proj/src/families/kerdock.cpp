#include "swrg/families/kerdock.hpp"

#include "swrg/algebra/galois.hpp"

namespace swrg {

Matrix kerdock_minus_rows(const Ring& G) {
    const int s = G.params().r;
    const std::uint64_t n = (std::uint64_t{1} << s) - 1;
    const Ring::Elem xi = gr4_xi(G);
    Matrix rows(static_cast<std::size_t>(s), Vec(n));
    Ring::Elem lambda = G.one();
    for (int i = 0; i < s; ++i, lambda = G.mul(lambda, xi)) {
        Ring::Elem x = lambda;
        for (std::uint64_t t = 0; t < n; ++t, x = G.mul(x, xi)) rows[i][t] = gr4_trace(G, x);
    }
    return rows;
}

KerdockInstance kerdock(int s, std::uint64_t budget) {
    if (s < 3 || s > 7 || s % 2 == 0) throw InvalidArgument("kerdock: s must be odd with 3 <= s <= 7");
    const Ring G = Ring::gr4(s);
    const Ring Z4 = Ring::zpm(2, 2);
    Matrix minus = kerdock_minus_rows(G);

    const auto T = teichmuller_set(G);
    const Ring::Elem xi = gr4_xi(G);
    Matrix full(static_cast<std::size_t>(s) + 1, Vec(T.size()));
    std::fill(full[0].begin(), full[0].end(), Z4.one());
    Ring::Elem lambda = G.one();
    for (int i = 0; i < s; ++i, lambda = G.mul(lambda, xi))
        for (std::size_t t = 0; t < T.size(); ++t) full[i + 1][t] = gr4_trace(G, G.mul(lambda, T[t]));

    KerdockInstance K{s, G, LinearCode::from_rows(Z4, std::move(minus)), LinearCode::from_rows(Z4, std::move(full)), {}, {}};
    K.wd_minus = weight_distribution(K.k_minus, budget);
    K.wd_full = weight_distribution(K.k_full, budget);
    return K;
}

}  // namespace swrg
