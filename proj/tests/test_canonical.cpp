#include "doctest.h"

#include "commgraph/canonical.hpp"

#include "helpers.hpp"

using namespace cg;

TEST_CASE("jordan form round-trips random specs") {
    for (const Field& f : cgtest::suite_fields()) {
        CAPTURE(f.spec_line());
        SplitMix64 rng(61);
        for (int t = 0; t < 60; ++t) {
            int n = 2 + static_cast<int>(rng.bounded(4));
            JordanSpec spec = cgtest::random_spec(f, n, rng);
            Matrix J = build_from_spec(f, spec);
            Matrix T = cgtest::random_invertible(f, n, rng);
            Matrix A = T * J * *T.inverse();
            JordanResult jr = jordan_form(A);
            CHECK(*jr.T.inverse() * A * jr.T == jr.J);
            spec.canonicalize(f);
            CHECK(jr.J == build_from_spec(f, spec));
            REQUIRE(jr.spec.blocks.size() == spec.blocks.size());
            for (std::size_t i = 0; i < spec.blocks.size(); ++i) {
                CHECK(jr.spec.blocks[i].size == spec.blocks[i].size);
                CHECK(f.eq(jr.spec.blocks[i].eigenvalue, spec.blocks[i].eigenvalue));
            }
        }
    }
}

TEST_CASE("canonical block order is eigenvalue-ascending, size-descending") {
    Field f = Field::finite(5, 1);
    JordanSpec spec;
    spec.blocks = {{f.from_int(3), 1}, {f.from_int(0), 2}, {f.from_int(3), 2},
                   {f.from_int(0), 1}};
    spec.canonicalize(f);
    REQUIRE(spec.blocks.size() == 4);
    CHECK(f.is_zero(spec.blocks[0].eigenvalue));
    CHECK(spec.blocks[0].size == 2);
    CHECK(spec.blocks[1].size == 1);
    CHECK(f.eq(spec.blocks[2].eigenvalue, f.from_int(3)));
    CHECK(spec.blocks[2].size == 2);
    CHECK(spec.total_size() == 6);
}

TEST_CASE("non-split spectra are refused with the factor degrees") {
    Field f2 = Field::finite(2, 1);
    Poly q(f2, {f2.one(), f2.one(), f2.one()}); // irreducible quadratic
    Matrix C = companion(q);
    try {
        jordan_form(C);
        FAIL("non-split matrix accepted");
    } catch (const Error& e) {
        CHECK(e.code == Err::NonSplitSpectrum);
    }
    Field Q = Field::rationals();
    Poly r(Q, {Q.one(), Q.zero(), Q.one()}); // x^2 + 1
    CHECK_THROWS_AS(jordan_form(companion(r)), Error);
}

TEST_CASE("companion matrices realize their polynomial") {
    for (const Field& f : {Field::finite(2, 1), Field::finite(7, 1), Field::rationals()}) {
        SplitMix64 rng(67);
        for (int t = 0; t < 50; ++t) {
            int d = 2 + static_cast<int>(rng.bounded(4));
            std::vector<Fe> cs;
            for (int i = 0; i < d; ++i) cs.push_back(cgtest::random_element(f, rng));
            cs.push_back(f.one());
            Poly p(f, cs);
            if (p.degree() != d) continue;
            Matrix C = companion(p);
            CHECK(C.char_poly() == p);
            CHECK(C.min_poly() == p);
            CHECK(is_minimal(C));
        }
    }
}

TEST_CASE("structure classification on canonical examples") {
    Field f = Field::finite(5, 1);
    Fe z = f.zero(), one = f.one(), two = f.from_int(2);

    Matrix minimal = build_from_spec(f, {{{z, 3}}});
    CHECK(is_minimal(minimal));
    CHECK_FALSE(is_maximal(minimal));
    CHECK_FALSE(is_semisimple(minimal));
    CHECK(is_rank_one_equivalent(minimal + Matrix::scalar(f, 3, two)) ==
          is_rank_one_equivalent(minimal));

    Matrix maximal = Matrix::diagonal(f, {one, one, two});
    CHECK(is_maximal(maximal));
    CHECK(is_semisimple(maximal));
    CHECK(is_rank_one_equivalent(maximal)); // A - I has rank one
    auto form = rank_one_form(maximal);
    REQUIRE(form.has_value());
    CHECK(form->second.rank() == 1);
    CHECK(f.eq(form->first, one));

    Matrix semi = Matrix::diagonal(f, {z, one, two});
    CHECK(is_semisimple(semi));
    CHECK(is_minimal(semi));
    CHECK_FALSE(is_maximal(semi));
    CHECK_FALSE(is_rank_one_equivalent(semi));

    StructureReport rep = structure_report(maximal);
    CHECK(rep.maximal);
    CHECK(rep.semisimple);
    CHECK(rep.rank_one_equiv);
    CHECK_FALSE(rep.minimal);
    CHECK(rep.min_poly_degree == 2);

    CHECK_THROWS_AS(structure_report(Matrix::identity(f, 3)), Error);
}

TEST_CASE("degree-two irreducible minimal polynomials are not classified maximal") {
    Field f2 = Field::finite(2, 1);
    Poly q(f2, {f2.one(), f2.one(), f2.one()});
    Matrix A = direct_sum(companion(q), companion(q)); // min poly q, degree 2
    CHECK(A.min_poly().degree() == 2);
    CHECK_FALSE(is_maximal(A));
    StructureReport rep = structure_report(A);
    CHECK_FALSE(rep.maximal);
    CHECK_FALSE(rep.notes.empty());
}
