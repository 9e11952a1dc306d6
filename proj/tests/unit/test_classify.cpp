#include <doctest.h>

#include "support/oracles.hpp"

#include "swrg/classify/invariant.hpp"
#include "swrg/classify/points.hpp"
#include "swrg/classify/search.hpp"
#include "swrg/classify/tables.hpp"
#include "swrg/code/matrix_io.hpp"
#include "swrg/spectral/weight_distribution.hpp"

#include <cstdio>
#include <algorithm>
#include <filesystem>
#include <numeric>
#include <random>
#include <set>

using namespace swrg;

TEST_CASE("projective point counts") {
    const Ring z4 = Ring::parse_name("z4");
    // (|R|^l - |gamma R|^l) / |units|
    CHECK(projective_points(z4, 1).size() == 1);
    CHECK(projective_points(z4, 2).size() == 6);
    CHECK(projective_points(z4, 3).size() == 28);
    CHECK(shape_points(z4, 2, 1).size() == 12);
    CHECK(shape_points(z4, 3, 0).size() == 28);
    const auto pts = shape_points(z4, 2, 1);
    CHECK(pts[0] == Vec{1, 0, 0});
    CHECK(pts[1] == Vec{0, 1, 0});
    CHECK(shape_messages(z4, 2, 1).size() == 32);
}

TEST_CASE("search finds a published code and verifies the witness") {
    const Ring z4 = Ring::parse_name("z4");
    SearchSpec spec;
    spec.ring = z4;
    spec.n = 6;
    spec.k1 = 2;
    spec.k2 = 1;
    spec.weights = {4, 6, 8};
    spec.threads = 1;
    const auto rec = search(spec);
    REQUIRE(rec.status == SearchStatus::Realized);
    REQUIRE(rec.witnesses.size() == 1);
    const auto C = LinearCode::from_rows(z4, rec.witnesses[0]);
    CHECK(C.shape2() == std::make_pair(2, 1));
    CHECK(is_regular(C));
    CHECK(is_projective(C));
    for (auto w : weight_distribution(C).nonzero_weights()) CHECK((w == 4 || w == 6 || w == 8));
}

TEST_CASE("search reports an empty class") {
    SearchSpec spec;
    spec.n = 4;
    spec.k1 = 2;
    spec.k2 = 0;
    spec.weights = {1, 2, 3};
    spec.threads = 1;
    CHECK(search(spec).status == SearchStatus::Empty);
}

TEST_CASE("pruned and unpruned searches agree, node counts are deterministic") {
    std::mt19937_64 rng(0xc1a5);
    for (int it = 0; it < 20; ++it) {
        SearchSpec spec;
        spec.ring = Ring::parse_name(rng() % 2 ? "z4" : "f2u");
        spec.n = 3 + rng() % 3;
        spec.k1 = 1 + rng() % 2;
        spec.k2 = rng() % 2;
        std::set<std::uint64_t> ws;
        while (ws.size() < 3) ws.insert(1 + rng() % (2 * spec.n));
        std::copy(ws.begin(), ws.end(), spec.weights.begin());
        spec.threads = 1;
        const auto a = search(spec);
        const auto b = search(spec);
        CHECK(a.nodes == b.nodes);
        spec.prune = false;
        const auto c = search(spec);
        CHECK(a.status == c.status);
        CHECK(c.nodes >= a.nodes);
    }
}

TEST_CASE("exhaustive mode separates inequivalent witnesses") {
    SearchSpec spec;
    spec.n = 6;
    spec.k1 = 2;
    spec.k2 = 1;
    spec.weights = {4, 6, 8};
    spec.mode = SearchMode::Exhaust;
    spec.threads = 1;
    const auto rec = search(spec);
    CHECK(rec.status == SearchStatus::Realized);
    std::set<std::string> inv;
    for (const auto& W : rec.witnesses) inv.insert(canonical_invariant(LinearCode::from_rows(spec.ring, W)));
    CHECK(inv.size() == rec.witnesses.size());
    CHECK(rec.solutions >= rec.witnesses.size());
}

TEST_CASE("checkpoint resume reproduces the record") {
    const auto path = (std::filesystem::temp_directory_path() / "swrg_checkpoint_test.jsonl").string();
    std::remove(path.c_str());
    SearchSpec spec;
    spec.n = 5;
    spec.k1 = 2;
    spec.k2 = 1;
    spec.weights = {4, 6, 8};
    spec.mode = SearchMode::Exhaust;
    spec.threads = 1;
    spec.checkpoint = path;
    const auto first = search(spec);
    const auto second = search(spec);
    CHECK(second.subtrees_resumed == second.subtrees);
    CHECK(first.status == second.status);
    CHECK(first.nodes == second.nodes);
    CHECK(first.witnesses.size() == second.witnesses.size());
    std::remove(path.c_str());
}

TEST_CASE("canonical invariant ignores column order and unit scaling") {
    std::mt19937_64 rng(4);
    const Ring z4 = Ring::parse_name("z4");
    const auto G = parse_matrix(z4, table1_matrices()[0].rows);
    const auto base = canonical_invariant(LinearCode::from_rows(z4, G));
    for (int it = 0; it < 10; ++it) {
        Matrix H = G;
        std::vector<std::size_t> perm(H[0].size());
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        for (auto& row : H) {
            Vec r(row.size());
            for (std::size_t j = 0; j < row.size(); ++j) r[j] = row[perm[j]];
            row = r;
        }
        const std::size_t j = rng() % H[0].size();
        for (auto& row : H) row[j] = z4.mul(3, row[j]);
        CHECK(canonical_invariant(LinearCode::from_rows(z4, H)) == base);
    }
}

TEST_CASE("published matrices verify") {
    for (const auto* list : {&table1_matrices(), &table5_matrices()})
        for (const auto& m : *list) {
            const auto c = verify_published_matrix(m);
            CHECK_MESSAGE(c.match, m.name << ": " << c.detail);
        }
}

TEST_CASE("table identifiers") {
    CHECK(parse_table_id("2") == TableId::T2);
    CHECK(to_string(TableId::T4) == "T4");
    CHECK_THROWS(parse_table_id("9"));
    CHECK(to_string(SearchStatus::Empty) == "EMPTY");
    CHECK(to_string(SearchMode::Decide) == "DECIDE");
}
