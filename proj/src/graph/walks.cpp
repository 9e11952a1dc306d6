#include "swrg/graph/walks.hpp"

#include "swrg/kernels/kernels.hpp"

#include <algorithm>

namespace swrg {

namespace {

// y = (A + shift I) x on the translation table, exact.
void apply_big(const CayleyGraph& G, const std::vector<BigInt>& x, std::vector<BigInt>& y, const BigInt& shift) {
    const std::size_t V = G.vertex_count(), K = G.degree();
    const auto& nbr = G.translations();
    for (std::size_t v = 0; v < V; ++v) {
        BigInt acc = shift * x[v];
        for (std::size_t k = 0; k < K; ++k) acc += x[nbr[k * V + v]];
        y[v] = std::move(acc);
    }
}

// Applies M - theta_j I for each factor to e_base. Uses the i64 kernel while |entries| stay
// provably below 2^62, big integers otherwise.
std::vector<BigInt> apply_factors(const CayleyGraph& G, std::uint32_t base, const std::vector<BigInt>& shifts) {
    const std::size_t V = G.vertex_count(), K = G.degree();
    BigInt bound = 1;
    bool small = true;
    for (const auto& sh : shifts) {
        bound *= BigInt(K) + abs(sh);
        if (bound >= (BigInt(1) << 62)) small = false;
    }
    if (small) {
        const auto& ker = kernels::active();
        std::vector<std::int64_t> x(V, 0), y(V, 0);
        x[base] = 1;
        for (const auto& sh : shifts) {
            ker.walk_step_i64(x.data(), y.data(), G.translations().data(), V, K, static_cast<std::int64_t>(sh));
            x.swap(y);
        }
        std::vector<BigInt> out(V);
        for (std::size_t v = 0; v < V; ++v) out[v] = x[v];
        return out;
    }
    std::vector<BigInt> x(V, 0), y(V, 0);
    x[base] = 1;
    for (const auto& sh : shifts) {
        apply_big(G, x, y, sh);
        x.swap(y);
    }
    return x;
}

}  // namespace

std::vector<BigInt> walk_counts(const CayleyGraph& G, unsigned s, std::uint32_t base) {
    if (base >= G.vertex_count()) throw InvalidArgument("base vertex out of range");
    return apply_factors(G, base, std::vector<BigInt>(s, BigInt(G.loops())));
}

std::vector<BigInt> trace_powers(const CayleyGraph& G, unsigned t_max) {
    std::vector<BigInt> out;
    const std::size_t V = G.vertex_count();
    std::vector<BigInt> x(V, 0), y(V, 0);
    x[G.zero_index()] = 1;
    for (unsigned t = 0; t <= t_max; ++t) {
        out.push_back(BigInt(V) * x[G.zero_index()]);
        if (t < t_max) {
            apply_big(G, x, y, BigInt(G.loops()));
            x.swap(y);
        }
    }
    return out;
}

SwrgCertificate is_swrg(const CayleyGraph& G, unsigned s) {
    if (s < 2) throw InvalidArgument("s must be at least 2");
    SwrgCertificate c;
    c.s = s;
    c.connected = G.connected();
    const auto counts = walk_counts(G, s);
    const std::uint32_t z = G.zero_index();
    const std::size_t V = G.vertex_count();
    std::vector<char> adj(V, 0);
    for (std::size_t k = 0; k < G.degree(); ++k) adj[G.translations()[k * V + z]] = 1;
    c.nu = counts[z];
    c.holds = true;
    std::optional<std::uint32_t> first_adj, first_non;
    for (std::uint32_t v = 0; v < V; ++v) {
        if (v == z) continue;
        auto& first = adj[v] ? first_adj : first_non;
        if (!first) {
            first = v;
            continue;
        }
        if (counts[v] != counts[*first]) {
            c.holds = false;
            c.witness = std::make_pair(*first, v);
            break;
        }
    }
    if (first_adj) c.lambda = counts[*first_adj];
    if (first_non) c.mu = counts[*first_non];
    if (c.holds && s == 2) {
        // (A + bI)^2 = A^2 + 2bA + b^2 I
        const BigInt b(G.loops());
        SrgParameters p;
        p.v = V;
        p.k = G.degree();
        p.lambda = c.lambda - 2 * b;
        p.mu = c.mu.value_or(0);
        c.srg = p;
    }
    return c;
}

SpectrumCertificate verify_spectrum(const CayleyGraph& G, const std::vector<std::pair<BigInt, std::uint64_t>>& predicted) {
    SpectrumCertificate c;
    c.predicted = predicted;
    const std::size_t m = predicted.size();
    if (m == 0) throw InvalidArgument("empty predicted spectrum");
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (predicted[i].first == predicted[j].first) throw InvalidArgument("predicted eigenvalues must be distinct");

    // Every polynomial in M commutes with translations, so it vanishes iff its column at 0 does.
    std::vector<BigInt> shifts;
    for (const auto& [theta, mult] : predicted) shifts.push_back(BigInt(G.loops()) - theta);
    const auto col = apply_factors(G, G.zero_index(), shifts);
    c.annihilator_zero = std::all_of(col.begin(), col.end(), [](const BigInt& x) { return x == 0; });

    c.traces = trace_powers(G, static_cast<unsigned>(m - 1));
    // sum_i m_i theta_i^t = trace(M^t), t = 0..m-1
    std::vector<std::vector<Rational>> a(m, std::vector<Rational>(m + 1));
    for (std::size_t t = 0; t < m; ++t) {
        for (std::size_t i = 0; i < m; ++i) a[t][i] = Rational(bigpow(predicted[i].first, static_cast<unsigned>(t)));
        a[t][m] = Rational(c.traces[t]);
    }
    for (std::size_t col_i = 0; col_i < m; ++col_i) {
        std::size_t piv = col_i;
        while (piv < m && a[piv][col_i] == 0) ++piv;
        if (piv == m) throw Inconsistent("singular Vandermonde system");
        std::swap(a[piv], a[col_i]);
        for (std::size_t r = 0; r < m; ++r) {
            if (r == col_i || a[r][col_i] == 0) continue;
            const Rational f = a[r][col_i] / a[col_i][col_i];
            for (std::size_t k = col_i; k <= m; ++k) a[r][k] -= f * a[col_i][k];
        }
    }
    c.multiplicities_match = true;
    for (std::size_t i = 0; i < m; ++i) {
        c.multiplicities.push_back(a[i][m] / a[i][i]);
        if (c.multiplicities.back() != Rational(BigInt(predicted[i].second))) c.multiplicities_match = false;
    }
    return c;
}

}  // namespace swrg
