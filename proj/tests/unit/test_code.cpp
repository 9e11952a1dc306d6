#include <doctest.h>

#include "support/oracles.hpp"

#include "swrg/code/gray.hpp"
#include "swrg/code/linear_code.hpp"
#include "swrg/code/matrix_io.hpp"

#include <random>
#include <set>

using namespace swrg;

TEST_CASE("parse and format matrices") {
    const Ring z4 = Ring::parse_name("z4");
    const auto M = parse_matrix(z4, "1 0 1 # comment\n\n0 1 3");
    CHECK(M == Matrix{{1, 0, 1}, {0, 1, 3}});
    CHECK(parse_matrix(z4, format_matrix(z4, M)) == M);
    CHECK_THROWS_AS(parse_matrix(z4, "1 0; 1"), InvalidArgument);
    CHECK_THROWS_AS(parse_matrix(z4, ""), InvalidArgument);
    const Ring f2u = Ring::parse_name("f2u");
    CHECK(parse_matrix(f2u, "X X+1 1") == Matrix{{2, 3, 1}});
}

TEST_CASE("shape of small Z4 codes") {
    const Ring z4 = Ring::parse_name("z4");
    const auto C = LinearCode::from_rows(z4, parse_matrix(z4, "1 0 1 1 1 2; 0 1 0 3 3 1; 0 0 2 2 0 0"));
    CHECK(C.shape2() == std::make_pair(2, 1));
    CHECK(C.size_u64() == 32);
    CHECK(is_regular(C));
    CHECK(is_projective(C));
    CHECK(dual_distance_at_least(C, 3));
    // a redundant row does not change the code
    const auto D = LinearCode::from_rows(z4, parse_matrix(z4, "1 0 1 1 1 2; 0 1 0 3 3 1; 0 0 2 2 0 0; 1 1 1 0 0 3"));
    CHECK(D.shape2() == std::make_pair(2, 1));
    CHECK(D.codewords() == C.codewords());
}

TEST_CASE("zero columns are rejected unless requested") {
    const Ring z4 = Ring::parse_name("z4");
    CHECK_THROWS_AS(LinearCode::from_rows(z4, {{1, 0}}), InvalidArgument);
    CHECK(LinearCode::from_rows(z4, {{1, 0}}, true).has_zero_column());
}

TEST_CASE("codewords and duals agree with brute force on random matrices") {
    std::mt19937_64 rng(0xc0de);
    for (const char* name : {"z4", "f2u", "zpm:3,2", "fqu:3"}) {
        const Ring R = Ring::parse_name(name);
        for (int it = 0; it < 40; ++it) {
            const std::size_t l = 1 + rng() % 3, n = 1 + rng() % 4;
            const auto M = oracle::random_matrix(R, l, n, rng);
            const auto C = LinearCode::from_rows(R, M, true);
            const auto words = C.codewords();
            const std::set<Vec> got(words.begin(), words.end());
            REQUIRE(got.size() == words.size());
            REQUIRE(got == oracle::span(R, M));
            const auto D = dual_code(C);
            const auto dw = D.codewords();
            REQUIRE(std::set<Vec>(dw.begin(), dw.end()) == oracle::dual_words(R, M));
            REQUIRE(C.size() * D.size() == BigInt(oracle::pow_u(R.size(), n)));
            // standard form spans the same code (the zero code has no rows)
            if (C.standard().rows.empty()) {
                REQUIRE(got.size() == 1);
                continue;
            }
            const auto S = LinearCode::from_rows(R, C.standard().rows, true);
            const auto sw = S.codewords();
            REQUIRE(std::set<Vec>(sw.begin(), sw.end()) == got);
        }
    }
}

TEST_CASE("regular and projective via the dual-distance threshold") {
    std::mt19937_64 rng(11);
    for (const char* name : {"z4", "f2u"}) {
        const Ring R = Ring::parse_name(name);
        for (int it = 0; it < 60; ++it) {
            const auto M = oracle::random_matrix(R, 2, 1 + rng() % 4, rng);
            const auto C = LinearCode::from_rows(R, M, true);
            if (C.has_zero_column()) continue;
            const bool rp = is_regular(C) && is_projective(C);
            CHECK(rp == dual_distance_at_least(C, projective_dual_threshold(R)));
        }
    }
}

TEST_CASE("Gray images are weight preserving") {
    std::mt19937_64 rng(3);
    for (const char* name : {"z4", "f2u"}) {
        const Ring R = Ring::parse_name(name);
        for (int it = 0; it < 200; ++it) {
            const Vec v = oracle::random_matrix(R, 1, 6, rng)[0];
            const auto g = gray_map(R, v);
            std::uint64_t ones = 0;
            for (auto b : g) ones += b;
            CHECK(ones == oracle::weight(R, v));
        }
    }
}

TEST_CASE("Gray image of an F2+uF2 linear code is linear") {
    std::mt19937_64 rng(5);
    const Ring R = Ring::parse_name("f2u");
    for (int it = 0; it < 20; ++it) {
        const auto C = LinearCode::from_rows(R, oracle::random_matrix(R, 2, 4, rng), true);
        const auto scan = is_binary_linear(gray_image(C).images);
        CHECK(scan.linear);
        CHECK_FALSE(scan.witness);
    }
}

TEST_CASE("Gray linearity scan counts ordered pairs") {
    const std::vector<BitVec> words{{0, 0}, {0, 1}, {1, 0}};
    const auto scan = is_binary_linear(words);
    CHECK_FALSE(scan.linear);
    CHECK(scan.pairs_checked == 9);
    CHECK(scan.failing_pairs == 2);  // (01,10) and (10,01)
    CHECK_THROWS_AS(gray_map(Ring::parse_name("zpm:3,2"), Vec{1}), InvalidArgument);
}

TEST_CASE("replication factor of a doubled code") {
    const Ring z4 = Ring::parse_name("z4");
    const auto C = LinearCode::from_rows(z4, parse_matrix(z4, "1 1 0 0 1 1; 0 0 1 1 3 3"));
    const auto rep = replication_factor(C, ReplicationGrouping::Identical);
    CHECK(rep.factor == 2);
    CHECK(rep.reduced.length() == 3);
}

TEST_CASE("puncturing and even-weight subcode") {
    const Ring z4 = Ring::parse_name("z4");
    const auto C = LinearCode::from_rows(z4, parse_matrix(z4, "1 0 1; 0 1 1"));
    CHECK(punctured(C, 2).length() == 2);
    const auto E = even_weight_subcode(C);
    for (const auto& w : E.codewords()) CHECK(oracle::weight(z4, w) % 2 == 0);
}
