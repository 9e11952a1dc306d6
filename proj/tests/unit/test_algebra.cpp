#include <doctest.h>

#include "swrg/algebra/field.hpp"
#include "swrg/algebra/galois.hpp"
#include "swrg/algebra/polynomial.hpp"
#include "swrg/algebra/ring.hpp"

#include <random>
#include <set>

using namespace swrg;

namespace {

std::vector<Ring> sample_rings() {
    return {Ring::zpm(2, 2), Ring::zpm(3, 2), Ring::zpm(2, 3), Ring::fqu(2), Ring::fqu(3), Ring::fqu(2, 2),
            Ring::gr4(2), Ring::gr4(3)};
}

}  // namespace

TEST_CASE("homogeneous weights on the small rings") {
    const Ring z4 = Ring::parse_name("z4");
    CHECK(z4.hom_weight(0) == 0);
    CHECK(z4.hom_weight(1) == 1);
    CHECK(z4.hom_weight(2) == 2);
    CHECK(z4.hom_weight(3) == 1);
    const Ring f2u = Ring::parse_name("f2u");
    // a + ub encoded a + 2b; u is the socle
    CHECK(f2u.hom_weight(2) == 2);
    CHECK(f2u.hom_weight(1) == 1);
    CHECK(f2u.hom_weight(3) == 1);
    CHECK(f2u.gamma() == 2);
}

TEST_CASE("homogeneous weight averages to (q-1)q^(e-2) on every nonzero ideal") {
    for (const Ring& R : sample_rings()) {
        if (R.depth() != 2) continue;
        // nonzero ideals: (gamma) and R itself
        for (int j = 0; j < 2; ++j) {
            std::uint64_t total = 0, count = 0;
            for (auto a : R.elements())
                if (R.valuation(a) >= j) {
                    total += R.hom_weight(a);
                    ++count;
                }
            CHECK_MESSAGE(total == (count) * (R.q() - 1) * 1, R.name());
        }
    }
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937_64 rng(0x5eed01);
    for (const Ring& R : sample_rings()) {
        std::uniform_int_distribution<Ring::Elem> pick(0, R.size() - 1);
        for (int it = 0; it < 500; ++it) {
            const auto a = pick(rng), b = pick(rng), c = pick(rng);
            REQUIRE(R.add(a, b) == R.add(b, a));
            REQUIRE(R.mul(a, b) == R.mul(b, a));
            REQUIRE(R.add(R.add(a, b), c) == R.add(a, R.add(b, c)));
            REQUIRE(R.mul(R.mul(a, b), c) == R.mul(a, R.mul(b, c)));
            REQUIRE(R.mul(a, R.add(b, c)) == R.add(R.mul(a, b), R.mul(a, c)));
            REQUIRE(R.add(a, R.neg(a)) == 0);
            if (R.is_unit(a)) REQUIRE(R.mul(a, R.unit_inverse(a)) == 1);
            REQUIRE(R.mul(R.unit_part(a), R.gamma_pow(R.valuation(a))) == a);
            if (R.valuation(b) >= R.valuation(a)) REQUIRE(R.mul(R.div_exact(b, a), a) == b);
        }
    }
}

TEST_CASE("chain ring sizes and unit counts") {
    for (const Ring& R : sample_rings()) {
        CHECK(R.units().size() == R.unit_count());
        CHECK(R.elements().size() == R.size());
        std::uint64_t qe = 1;
        for (int i = 0; i < R.depth(); ++i) qe *= R.q();
        CHECK(qe == R.size());
        CHECK(R.residue_reps().size() == R.q());
    }
}

TEST_CASE("element formatting round-trips") {
    for (const Ring& R : sample_rings())
        for (auto a : R.elements()) CHECK(R.parse(R.format(a)) == a);
}

TEST_CASE("field arithmetic") {
    for (auto [p, f] : std::vector<std::pair<int, int>>{{2, 3}, {3, 2}, {5, 1}, {2, 4}, {3, 3}}) {
        const Field F = Field::make(p, f);
        CHECK(poly::is_primitive(F.spec().modulus, p));
        std::set<Field::Elem> powers;
        for (std::uint32_t k = 0; k + 1 < F.size(); ++k) powers.insert(F.exp(k));
        CHECK(powers.size() == F.size() - 1);
        std::uint32_t squares = 0;
        for (Field::Elem a = 1; a < F.size(); ++a) {
            CHECK(F.mul(a, F.inv(a)) == 1);
            CHECK(F.exp(F.log(a)) == a);
            squares += F.is_square(a);
        }
        if (p != 2) CHECK(squares == (F.size() - 1) / 2);
    }
}

TEST_CASE("trace is additive and onto the prime field") {
    std::mt19937_64 rng(7);
    const Field F = Field::make(3, 4);
    std::uniform_int_distribution<Field::Elem> pick(0, F.size() - 1);
    std::vector<std::uint32_t> hits(3, 0);
    for (Field::Elem a = 0; a < F.size(); ++a) ++hits[F.trace(a)];
    CHECK(hits == std::vector<std::uint32_t>{27, 27, 27});
    for (int it = 0; it < 200; ++it) {
        const auto a = pick(rng), b = pick(rng);
        CHECK(F.trace(F.add(a, b)) == (F.trace(a) + F.trace(b)) % 3);
        CHECK(field_trace(F, a) == F.trace(a));
    }
}

TEST_CASE("Graeffe lift of x^3+x+1") {
    const poly::Coeffs f{1, 1, 0, 1};
    const auto h = hensel_lift(f);
    CHECK(h == poly::Coeffs{3, 1, 2, 1});
    CHECK(graeffe_identity(f, h));
    CHECK(is_basic_primitive(h));
}

TEST_CASE("Galois ring GR(4,3)") {
    const Ring R = Ring::gr4(3);
    CHECK(R.size() == 64);
    const auto T = teichmuller_set(R);
    CHECK(T.size() == 8);
    // Teichmuller elements are fixed by squaring
    for (auto t : T) CHECK(R.mul(t, t) == gr4_frobenius(R, t));
    // trace values are balanced over the ring: each of 0..3 taken 16 times
    std::vector<int> hits(4, 0);
    for (auto a : R.elements()) ++hits[gr4_trace(R, a)];
    CHECK(hits == std::vector<int>{16, 16, 16, 16});
    const auto xi = gr4_xi(R);
    CHECK(R.pow(xi, 7) == 1);
    for (std::uint64_t k = 1; k < 7; ++k) CHECK(R.pow(xi, k) != 1);
}

TEST_CASE("polynomial helpers") {
    CHECK(poly::degree({}) == -1);
    CHECK(poly::degree({1, 0, 0}) == 0);
    CHECK(poly::mul({1, 1}, {1, 1}, 2) == poly::Coeffs{1, 0, 1});
    CHECK(poly::rem_monic({0, 0, 0, 1}, {1, 1, 0, 1}, 2) == poly::Coeffs{1, 1});
    CHECK(poly::is_primitive({1, 1, 0, 1}, 2));
    CHECK_FALSE(poly::is_primitive({1, 1, 1, 1, 1}, 2));  // x^4+x^3+x^2+x+1 has order 5
}

TEST_CASE("invalid ring parameters are rejected") {
    CHECK_THROWS(Ring::zpm(4, 2));
    CHECK_THROWS(Ring::parse_name("nonsense"));
    CHECK_THROWS(Field::make(6, 1));
}
