#include "doctest.h"

#include "commgraph/field.hpp"
#include "commgraph/poly.hpp"

#include "helpers.hpp"

using namespace cg;
using cgtest::random_element;
using cgtest::random_nonzero;

TEST_CASE("field axioms hold on random triples") {
    for (const Field& f : cgtest::suite_fields()) {
        CAPTURE(f.spec_line());
        SplitMix64 rng(7);
        for (int t = 0; t < 10000; ++t) {
            Fe a = random_element(f, rng), b = random_element(f, rng),
               c = random_element(f, rng);
            CHECK(f.eq(f.add(a, b), f.add(b, a)));
            CHECK(f.eq(f.mul(a, b), f.mul(b, a)));
            CHECK(f.eq(f.add(f.add(a, b), c), f.add(a, f.add(b, c))));
            CHECK(f.eq(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c))));
            CHECK(f.eq(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c))));
            CHECK(f.eq(f.add(a, f.zero()), a));
            CHECK(f.eq(f.mul(a, f.one()), a));
            CHECK(f.is_zero(f.add(a, f.neg(a))));
            CHECK(f.eq(f.sub(a, b), f.add(a, f.neg(b))));
            if (!f.is_zero(b)) {
                CHECK(f.is_one(f.mul(b, f.inv(b))));
                CHECK(f.eq(f.mul(f.div(a, b), b), a));
            }
        }
    }
}

TEST_CASE("element text round-trips and the order is total") {
    for (const Field& f : cgtest::suite_fields()) {
        CAPTURE(f.spec_line());
        SplitMix64 rng(11);
        for (int t = 0; t < 500; ++t) {
            Fe a = random_element(f, rng), b = random_element(f, rng);
            CHECK(f.eq(f.parse(f.to_string(a)), a));
            int ab = f.cmp(a, b), ba = f.cmp(b, a);
            CHECK(ab == -ba);
            CHECK((ab == 0) == f.eq(a, b));
        }
    }
}

TEST_CASE("finite enumeration is a bijection") {
    for (const Field& f : {Field::finite(2, 1), Field::finite(7, 1), Field::finite(2, 3),
                           Field::finite(3, 2)}) {
        CAPTURE(f.spec_line());
        std::uint64_t q = f.order().convert_to<std::uint64_t>();
        Fe prev = f.element_at(0);
        CHECK(f.is_zero(prev));
        for (std::uint64_t i = 0; i < q; ++i) {
            Fe a = f.element_at(i);
            CHECK(f.element_index(a) == i);
            if (i > 0) CHECK(f.cmp(prev, a) < 0);
            prev = a;
        }
    }
}

TEST_CASE("integer and rational embeddings are homomorphic") {
    for (const Field& f : cgtest::suite_fields()) {
        CAPTURE(f.spec_line());
        for (long long a = -6; a <= 6; ++a)
            for (long long b = -6; b <= 6; ++b) {
                CHECK(f.eq(f.from_int(a + b), f.add(f.from_int(a), f.from_int(b))));
                CHECK(f.eq(f.from_int(a * b), f.mul(f.from_int(a), f.from_int(b))));
            }
    }
    Field Q = Field::rationals();
    CHECK(Q.eq(Q.from_rat(2, 4), Q.from_rat(1, 2)));
    CHECK(Q.eq(Q.from_rat(-3, -6), Q.from_rat(1, 2)));
    CHECK(Q.eq(Q.from_rat(3, -6), Q.from_rat(-1, 2)));
}

TEST_CASE("default extension modulus is monic and irreducible") {
    for (auto [p, k] : {std::pair<std::uint64_t, unsigned>{2, 3}, {3, 2}, {5, 2}, {2, 9}}) {
        Field ext = Field::finite(p, k);
        const auto& mod = ext.modulus();
        REQUIRE(mod.size() == k + 1);
        CHECK(mod.back() == 1);
        Field base = Field::finite(p, 1);
        std::vector<Fe> cs;
        for (std::uint64_t c : mod) cs.push_back(base.from_int(static_cast<long long>(c)));
        Poly m(base, cs);
        CHECK(m.is_monic());
        CHECK(poly_is_irreducible(m));
    }
}

TEST_CASE("bad field parameters are rejected") {
    CHECK_THROWS_AS(Field::finite(4, 1), Error);
    CHECK_THROWS_AS(Field::finite(1, 1), Error);
    try {
        Field::finite(6, 2);
        FAIL("composite characteristic accepted");
    } catch (const Error& e) {
        CHECK(e.code == Err::NonPrime);
    }
    // reducible modulus: x^2 + 1 = (x+1)^2 over GF(2)
    try {
        Field::finite(2, 2, {1, 0, 1});
        FAIL("reducible modulus accepted");
    } catch (const Error& e) {
        CHECK(e.code == Err::ReducibleModulus);
    }
}

TEST_CASE("frobenius fixes exactly the prime subfield") {
    Field f = Field::finite(2, 3);
    int fixed = 0;
    for (std::uint64_t i = 0; i < 8; ++i) {
        Fe a = f.element_at(i);
        if (f.eq(f.mul(a, a), a)) ++fixed; // a^2 = a <=> a in GF(2)
    }
    CHECK(fixed == 2);
}
