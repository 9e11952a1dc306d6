#include <doctest.h>

#include "swrg/algebra/galois.hpp"
#include "swrg/families/kerdock.hpp"
#include "swrg/families/teichmuller.hpp"
#include "swrg/families/trace_code.hpp"
#include "swrg/graph/cayley.hpp"
#include "swrg/graph/walks.hpp"
#include "swrg/spectral/macwilliams.hpp"

using namespace swrg;

TEST_CASE("punctured Kerdock code for s = 3") {
    const auto K = kerdock(3);
    CHECK(K.k_minus.length() == 7);
    CHECK(K.k_minus.size_u64() == 64);
    CHECK(K.wd_minus.to_string() == "{6:42, 8:7, 10:14}");
    CHECK(K.k_full.length() == 8);
    CHECK(K.k_full.size_u64() == 256);
    // the full code is the Z4 Kerdock code of length 8 (octacode weights)
    CHECK(K.wd_full.nonzero_weights() == std::vector<std::uint64_t>{6, 8, 10, 16});
    CHECK_THROWS_AS(kerdock(4), InvalidArgument);
}

TEST_CASE("Kerdock frequencies follow the odd-s closed form") {
    for (int s : {3, 5}) {
        const auto K = kerdock(s);
        const std::uint64_t n = (1u << s) - 1;
        const auto ws = K.wd_minus.nonzero_weights();
        REQUIRE(ws.size() == 3);
        CHECK(ws[1] == n + 1);
        CHECK(ws[0] + ws[2] == 2 * (n + 1));
        CHECK(K.wd_minus.code_size == (std::uint64_t{1} << (2 * s)));
    }
}

TEST_CASE("Kerdock dual has minimum distance at least 3") {
    const auto K = kerdock(3);
    const auto dual = macwilliams_hom(K.wd_minus);
    CHECK(dual.frequency(1) == 0);
    CHECK(dual.frequency(2) == 0);
}

TEST_CASE("Teichmuller parameters for q = 2, k = 3") {
    const auto t = teichmuller_params(2, 3, 0);
    CHECK(t.A[0] == 42);
    CHECK(t.A[1] == 7);
    CHECK(t.A[2] == 14);
    CHECK(t.identity_holds);
    CHECK(t.code_size == 64);
    CHECK_THROWS(teichmuller_params(3, 3, 0));
}

TEST_CASE("Teichmuller identity for every legal parameter set") {
    for (std::uint64_t q : {2, 4, 8, 16})
        for (unsigned k = 2; k <= 5; ++k)
            for (unsigned s : teichmuller_legal_s(q, k)) {
                const auto t = teichmuller_params(q, k, s);
                CHECK(t.identity_holds);
                CHECK(t.S == t.S_identity);
            }
}

TEST_CASE("trace code over F3+uF3") {
    const auto t = trace_code(3, 2);
    CHECK(t.C.length() == 36);
    CHECK(t.replication.factor == 2);
    CHECK(t.replication.reduced.length() == 18);
    CHECK_THROWS_AS(trace_code(2, 2), InvalidArgument);
    CHECK_THROWS_AS(trace_code(3, 3), InvalidArgument);
}
