#include <doctest.h>

#include "support/oracles.hpp"

#include "swrg/classify/tables.hpp"
#include "swrg/code/matrix_io.hpp"
#include "swrg/graph/cayley.hpp"
#include "swrg/graph/ssum.hpp"
#include "swrg/graph/walks.hpp"
#include "swrg/spectral/conditions.hpp"
#include "swrg/spectral/weight_distribution.hpp"

#include <random>

using namespace swrg;

namespace {

Matrix random_columns_without_zero(const Ring& R, std::size_t l, std::size_t n, std::mt19937_64& rng) {
    for (;;) {
        auto M = oracle::random_matrix(R, l, n, rng);
        bool zero = false;
        for (std::size_t j = 0; j < n; ++j) {
            bool z = true;
            for (std::size_t i = 0; i < l; ++i) z = z && M[i][j] == 0;
            zero = zero || z;
        }
        if (!zero) return M;
    }
}

}  // namespace

TEST_CASE("Cayley graph of the 4-cycle") {
    const Ring z4 = Ring::parse_name("z4");
    const auto G = CayleyGraph::from_connection_set(z4, 1, {{1}, {3}}, {});
    CHECK(G.vertex_count() == 4);
    CHECK(G.degree() == 2);
    CHECK(G.connected());
    const auto c = is_swrg(G, 2);
    CHECK(c.holds);
    REQUIRE(c.srg);
    CHECK(c.srg->lambda == 0);
    CHECK(c.srg->mu == 2);
    CHECK_THROWS_AS(CayleyGraph::from_connection_set(z4, 1, {{1}}, {}), InvalidArgument);
    CHECK_THROWS_AS(CayleyGraph::from_connection_set(z4, 1, {{0}, {1}, {3}}, {}), InvalidArgument);
}

TEST_CASE("walk counts match dense matrix powers") {
    std::mt19937_64 rng(0x3a1c);
    for (const char* name : {"z4", "f2u"}) {
        const Ring R = Ring::parse_name(name);
        for (int it = 0; it < 25; ++it) {
            const auto H = random_columns_without_zero(R, 2, 1 + rng() % 4, rng);
            SyndromeGraphOptions opt;
            opt.b = rng() % 3;
            opt.ambient = rng() % 2;
            const auto G = syndrome_graph(R, H, opt);
            const auto A = G.adjacency_matrix();
            for (unsigned s = 1; s <= 5; ++s)
                REQUIRE(walk_counts(G, s) == oracle::dense_walks(A, opt.b, s, G.zero_index()));
        }
    }
}

TEST_CASE("trace powers are V times the closed walk count") {
    const Ring z4 = Ring::parse_name("z4");
    const auto G = syndrome_graph(z4, {{1, 0, 1}, {0, 1, 1}}, {});
    const auto tr = trace_powers(G, 4);
    for (unsigned t = 1; t <= 4; ++t) CHECK(tr[t] == BigInt(G.vertex_count()) * walk_counts(G, t)[G.zero_index()]);
}

TEST_CASE("graph SWRG agrees with the convolution s-sum check") {
    std::mt19937_64 rng(0x55);
    for (const char* name : {"z4", "f2u"}) {
        const Ring R = Ring::parse_name(name);
        for (int it = 0; it < 40; ++it) {
            const std::size_t l = 1 + rng() % 2;
            const auto H = random_columns_without_zero(R, l, 1 + rng() % 4, rng);
            const auto omega = omega_from_columns(R, H);
            SyndromeGraphOptions opt;
            opt.ambient = true;
            const auto G = CayleyGraph::from_connection_set(R, l, omega, opt);
            for (unsigned s = 2; s <= 5; ++s) REQUIRE(is_swrg(G, s).holds == ssum_set_check(R, l, omega, s, false).holds);
        }
    }
}

TEST_CASE("s-sum sigma constants agree with direct representation counts") {
    std::mt19937_64 rng(8);
    const Ring R = Ring::parse_name("z4");
    for (int it = 0; it < 30; ++it) {
        const auto H = random_columns_without_zero(R, 2, 1 + rng() % 3, rng);
        const auto omega = omega_from_columns(R, H);
        for (unsigned s = 2; s <= 3; ++s) {
            const auto res = ssum_set_check(R, 2, omega, s, false);
            const auto counts = oracle::representation_counts(R, 2, omega, s);
            const std::set<Vec> om(omega.begin(), omega.end());
            std::set<std::uint64_t> in, out;
            for (std::uint64_t t = 1; t < 16; ++t) {
                const Vec h = oracle::unrank(R, t, 2);
                const auto it2 = counts.find(h);
                const std::uint64_t c = it2 == counts.end() ? 0 : it2->second;
                (om.count(h) ? in : out).insert(c);
            }
            const bool constant = in.size() <= 1 && out.size() <= 1;
            REQUIRE(res.holds == constant);
            if (res.holds && res.sigma0) REQUIRE(*res.sigma0 == BigInt(*in.begin()));
        }
    }
}

TEST_CASE("loops enter the s-sum check as a weighted zero summand") {
    const Ring R = Ring::parse_name("z4");
    const auto H = Matrix{{1, 0, 1}, {0, 1, 1}};
    const auto omega = omega_from_columns(R, H);
    SyndromeGraphOptions opt;
    opt.ambient = true;
    for (std::uint64_t b : {0u, 1u, 2u}) {
        opt.b = b;
        const auto G = CayleyGraph::from_connection_set(R, 2, omega, opt);
        for (unsigned s = 2; s <= 4; ++s) CHECK(is_swrg(G, s).holds == ssum_set_check_loops(R, 2, omega, s, b).holds);
    }
    CHECK_THROWS_AS(ssum_set_check(R, 2, {{1, 0}}, 2, false), InvalidArgument);  // not unit stable
}

TEST_CASE("spectrum certificate for a two-weight example") {
    const Ring z4 = Ring::parse_name("z4");
    const Matrix H{{1, 0, 1}, {0, 1, 1}};
    const auto G = syndrome_graph(z4, H, {});
    const auto sp = predicted_spectrum(weight_distribution(LinearCode::from_rows(z4, H)), {2, 2}, 0);
    const auto cert = verify_spectrum(G, sp);
    CHECK(cert.verified());
    // a wrong prediction is refuted
    auto bad = sp;
    bad.back().first -= 1;
    CHECK_FALSE(verify_spectrum(G, bad).verified());
}

TEST_CASE("dual weight count of the column set") {
    const Ring z4 = Ring::parse_name("z4");
    const auto& m = table1_matrices()[1];
    const auto H = parse_matrix(z4, m.rows);
    CHECK(dual_weight_count_check(z4, 3, omega_from_columns(z4, H)) <= 3);
}
