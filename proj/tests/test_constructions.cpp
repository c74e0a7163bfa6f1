#include "doctest.h"

#include "commgraph/constructions.hpp"
#include "commgraph/m9.hpp"

#include "helpers.hpp"

using namespace cg;

TEST_CASE("cauchy matrix entries and determinant") {
    Field Q = Field::rationals();
    std::vector<Fe> xs = {Q.from_int(1), Q.from_int(2)};
    std::vector<Fe> ys = {Q.from_int(0), Q.from_int(-1)};
    Matrix C = cauchy_matrix(Q, xs, ys);
    CHECK(Q.eq(C.at(0, 0), Q.one()));
    CHECK(Q.eq(C.at(0, 1), Q.from_rat(1, 2)));
    CHECK(Q.eq(C.at(1, 0), Q.from_rat(1, 2)));
    CHECK(Q.eq(C.at(1, 1), Q.from_rat(1, 3)));
    CHECK(Q.eq(C.det(), Q.from_rat(1, 12)));
    CHECK(C.all_minors_nonzero());

    CHECK_THROWS_AS(cauchy_matrix(Q, {Q.one(), Q.one()}, ys), Error);
    CHECK_THROWS_AS(cauchy_matrix(Q, {Q.zero(), Q.one()}, {Q.zero(), Q.one()}), Error);
}

TEST_CASE("theorem5 instances carry validated conjugators") {
    Field f = Field::finite(7, 1);
    JordanSpec sa = {{{f.zero(), 3}}};
    JordanSpec sb = {{{f.zero(), 1}, {f.one(), 2}}};
    Theorem5Instance inst = theorem5_instance(f, sa, sb);
    CHECK(is_minimal(inst.A));
    CHECK(is_minimal(inst.Bprime));
    CHECK(inst.S.all_minors_nonzero());
    CHECK(inst.A == build_from_spec(f, inst.specA));
    Matrix B = build_from_spec(f, inst.specB);
    CHECK(inst.Bprime == *inst.S.inverse() * B * inst.S);

    // q <= 2n leaves no room for the deterministic Cauchy parameters
    Field small = Field::finite(5, 1);
    try {
        theorem5_instance(small, sa, sb);
        FAIL("q <= 2n accepted");
    } catch (const Error& e) {
        CHECK(e.code == Err::DegenerateParameters);
    }

    // explicit conjugators must have all minors nonzero
    try {
        theorem5_instance(f, sa, sb, Matrix::identity(f, 3));
        FAIL("identity conjugator accepted");
    } catch (const Error& e) {
        CHECK(e.code == Err::BadConjugator);
    }

    // repeated eigenvalues violate the minimal-spectrum precondition
    JordanSpec bad = {{{f.zero(), 2}, {f.zero(), 1}}};
    try {
        theorem5_instance(f, bad, sb);
        FAIL("non-minimal spec accepted");
    } catch (const Error& e) {
        CHECK(e.code == Err::NotMinimalSpec);
    }
}

TEST_CASE("the n=3 family squares onto its rank-one hub") {
    Field f = Field::finite(5, 1);
    FamilyInstance zero_inst = family_n3(f, f.zero());
    // R_0 = (0,1,0)^tr (0,0,-1): the negated (2,3) unit
    CHECK(zero_inst.aux.at("R_alpha") == Matrix::unit(f, 3, 1, 2).scale(f.from_int(-1)));
    for (std::uint64_t a = 0; a < 5; ++a) {
        FamilyInstance inst = family_n3(f, f.element_at(a));
        CHECK(is_minimal(inst.X));
        CHECK(inst.X * inst.X == inst.aux.at("R_alpha"));
        CHECK(inst.aux.at("R_alpha").rank() == 1);
        CHECK(validate_path(inst.short_path, inst.X, inst.aux.at("Z")));
        CHECK(inst.aux.at("Z") == Matrix::unit(f, 3, 0, 0));
    }
}

TEST_CASE("the n=4 family conjugates both rank-one anchors at once") {
    Field f = Field::finite(7, 1);
    for (std::uint64_t a : {1ull, 2ull, 3ull}) {
        FamilyInstance inst = family_n4(f, f.element_at(a), f.from_int(2));
        const Matrix& N = inst.aux.at("N_alpha");
        const Matrix& P = inst.aux.at("P_alpha");
        const Matrix& S = inst.aux.at("S_alpha");
        Matrix Si = *S.inverse();
        CHECK(Si * N * S == Matrix::unit(f, 4, 0, 2));
        CHECK(Si * P * S == Matrix::unit(f, 4, 3, 3));
        CHECK(is_minimal(inst.X));
        CHECK(inst.X * N == N * inst.X);
        CHECK(inst.X * P == P * inst.X);
        CHECK(validate_path(inst.short_path, inst.X, inst.aux.at("Z")));
    }
    CHECK_THROWS_AS(family_n4(f, f.zero(), f.from_int(2)), Error);
    CHECK_THROWS_AS(family_n4(f, f.one(), f.one()), Error);
}

TEST_CASE("the n>=5 family keeps one shared sink") {
    Field f = Field::finite(7, 1);
    std::vector<Fe> eigs;
    for (int i = 0; i < 5; ++i) eigs.push_back(f.from_int(i));
    std::vector<Fe> alphas = {f.zero(), f.one(), f.from_int(2)};
    auto insts = family_n5plus_set(f, 5, alphas, eigs);
    REQUIRE(insts.size() == 3);
    const Matrix& Z = insts[0].aux.at("Z");
    for (const auto& inst : insts) {
        CHECK(is_minimal(inst.X));
        CHECK(inst.aux.at("Z") == Z); // w does not depend on alpha
        CHECK(validate_path(inst.short_path, inst.X, inst.aux.at("Z")));
        const Matrix& S = inst.aux.at("S_alpha");
        CHECK(S * inst.aux.at("A_diag") * *S.inverse() == inst.X);
    }
    CHECK(Z.rank() == 1);

    CHECK_THROWS_AS(family_n5plus(f, 4, f.one(), eigs), Error);
    std::vector<Fe> repeated = eigs;
    repeated[1] = repeated[0];
    CHECK_THROWS_AS(family_n5plus(f, 5, f.one(), repeated), Error);

    // characteristic two: alpha sets with difference one are rejected
    Field f8 = Field::finite(2, 3);
    try {
        check_alpha_set(f8, {f8.element_at(0), f8.element_at(1)});
        FAIL("char-2 clash accepted");
    } catch (const Error& e) {
        CHECK(e.code == Err::Char2IndexClash);
    }
    check_alpha_set(f, alphas); // fine in odd characteristic
}

TEST_CASE("the corner system is singular and its solution annihilates") {
    Field Q = Field::rationals();
    std::vector<Fe> e1 = {Q.one(), Q.zero(), Q.zero()};
    Matrix Zpin = lemma3_solve(Q, 2, 1, e1, e1);
    CHECK(Zpin == Matrix::unit(Q, 3, 2, 1));

    SplitMix64 rng(101);
    for (const Field& f : {Field::rationals(), Field::finite(5, 1)}) {
        for (int t = 0; t < 50; ++t) {
            int k1 = 1 + static_cast<int>(rng.bounded(4));
            int k2 = 1 + static_cast<int>(rng.bounded(4));
            int k = k1 + k2;
            std::vector<Fe> a, b;
            for (int i = 0; i < k; ++i) {
                a.push_back(cgtest::random_element(f, rng));
                b.push_back(cgtest::random_element(f, rng));
            }
            CHECK(f.is_zero(lemma3_system(f, k1, k2, a, b).det()));
            Matrix Z = lemma3_solve(f, k1, k2, a, b);
            Matrix A = direct_sum(jordan_cell(f, k1, f.zero()), jordan_cell(f, k2, f.zero()));
            Matrix R = Matrix::outer(f, a, b);
            CHECK_FALSE(Z.is_scalar());
            CHECK((Z * A).is_zero());
            CHECK((A * Z).is_zero());
            CHECK((Z * R).is_zero());
            CHECK((R * Z).is_zero());
        }
    }
}

TEST_CASE("corner witnesses commute with both inputs") {
    Field f = Field::finite(5, 1);
    Matrix A = Matrix::diagonal(f, {f.one(), f.one(), f.from_int(2)});
    Matrix R = Matrix::unit(f, 3, 0, 0);
    Matrix Z = lemma4_witness(A, R);
    CHECK_FALSE(Z.is_scalar());
    CHECK(Z * A == A * Z);
    CHECK(Z * R == R * Z);

    CornerWitnessContext ctx = corner_witness_context(A);
    CHECK(ctx.k1 >= 1);
    CHECK(lemma4_witness_exists(ctx, {f.one(), f.zero(), f.zero()},
                                {f.one(), f.zero(), f.zero()}));

    // minimal inputs have no equal-eigenvalue corner
    Matrix M = build_from_spec(f, {{{f.zero(), 3}}});
    try {
        corner_witness_context(M);
        FAIL("minimal input accepted");
    } catch (const Error& e) {
        CHECK(e.code == Err::MinimalInput);
    }

    // non-split non-minimal input: the pairing is out of scope
    Field f2 = Field::finite(2, 1);
    Poly q(f2, {f2.one(), f2.one(), f2.one()});
    Matrix NS = direct_sum(companion(q), companion(q));
    try {
        corner_witness_context(NS);
        FAIL("non-split input accepted");
    } catch (const Error& e) {
        CHECK(e.code == Err::NonSplitSpectrum);
    }
}

TEST_CASE("separation witnesses across the covered classes") {
    Field Q = Field::rationals();
    // square-zero of rank 2 in M_4
    Matrix A = build_from_spec(Q, {{{Q.zero(), 2}, {Q.zero(), 2}}});
    Matrix X = lemma7_witness(A);
    CHECK(A * X != X * A);
    CHECK_FALSE(is_minimal(X));
    CHECK(centralizer(A).space.intersect(centralizer(X).space).dim() == 1);

    // idempotent of rank 2 in M_5
    Matrix E = Matrix::diagonal(Q, {Q.one(), Q.one(), Q.zero(), Q.zero(), Q.zero()});
    Matrix XE = lemma7_witness(E);
    CHECK(centralizer(E).space.intersect(centralizer(XE).space).dim() == 1);

    // cube-zero with rank-one square in M_4
    Matrix N = build_from_spec(Q, {{{Q.zero(), 3}, {Q.zero(), 1}}});
    Matrix XN = lemma7_witness(N);
    CHECK(centralizer(N).space.intersect(centralizer(XN).space).dim() == 1);

    // rank-one square-zero is out of scope
    Matrix bad = build_from_spec(Q, {{{Q.zero(), 2}, {Q.zero(), 1}, {Q.zero(), 1}}});
    try {
        lemma7_witness(bad);
        FAIL("rank-one square-zero accepted");
    } catch (const Error& e) {
        CHECK(e.code == Err::WrongClass);
    }

    // small fields cannot host the distinct diagonal tail
    Field f2 = Field::finite(2, 1);
    Matrix sq = build_from_spec(f2, {{{f2.zero(), 2}, {f2.zero(), 2}, {f2.zero(), 1}}});
    try {
        lemma7_witness(sq);
        FAIL("field too small accepted");
    } catch (const Error& e) {
        CHECK(e.code == Err::FieldTooSmall);
    }
}

TEST_CASE("minimal interpolation through a commuting chain") {
    Field f = Field::finite(7, 1);
    Matrix B = Matrix::diagonal(f, {f.from_int(1), f.from_int(2), f.from_int(3)});
    Matrix X = Matrix::diagonal(f, {f.from_int(5), f.from_int(5), f.from_int(6)});
    Matrix Y = direct_sum(jordan_cell(f, 2, f.zero()), Matrix::scalar(f, 1, f.one()));
    InterpolationResult r = lemma10_interpolate(B, X, Y);
    CHECK_FALSE(r.lifted);
    CHECK(is_minimal(r.M));
    CHECK(r.M * r.X == r.X * r.M);
    CHECK(r.M * r.Y == r.Y * r.M);
    // nu_1 = 0 collides with Y itself, so the first admissible choice is (1, 2)
    REQUIRE(r.nus.size() == 2);
    CHECK(f.eq(r.nus[0], f.one()));
    CHECK(f.eq(r.nus[1], f.from_int(2)));
    CHECK(r.M == direct_sum(jordan_cell(f, 2, f.one()), Matrix::scalar(f, 1, f.from_int(2))));

    // GF(2) cannot host two distinct values plus two spares: lift to GF(4)
    Field f2 = Field::finite(2, 1);
    Matrix B2 = Matrix::diagonal(f2, {f2.zero(), f2.one()});
    Matrix X2 = Matrix::diagonal(f2, {f2.one(), f2.zero()});
    InterpolationResult r2 = lemma10_interpolate(B2, X2, B2);
    CHECK(r2.lifted);
    CHECK(r2.M.field().order() == 4);
    CHECK(is_minimal(r2.M));
    CHECK(r2.M * r2.X == r2.X * r2.M);

    // B must be minimal semisimple
    Matrix BJ = direct_sum(jordan_cell(f, 2, f.zero()), Matrix::scalar(f, 1, f.one()));
    try {
        lemma10_interpolate(BJ, X, X);
        FAIL("non-semisimple B accepted");
    } catch (const Error& e) {
        CHECK(e.code == Err::NotSemisimpleMinimal);
    }
}

TEST_CASE("the obstruction pair blocks every minimal companion") {
    Field f = Field::finite(2, 1);
    Matrix B = direct_sum(jordan_cell(f, 2, f.zero()), Matrix::scalar(f, 1, f.one()));
    ObstructionPair p = lemma11_witness(B);
    CHECK(p.X == Matrix::unit(f, 3, 0, 1));
    CHECK(p.Y == Matrix::unit(f, 3, 0, 2));
    CHECK(p.X * p.Y == p.Y * p.X);
    CHECK(p.X * B == B * p.X);
    REQUIRE(p.searched.has_value());
    CHECK(*p.searched > 0);

    Field Q = Field::rationals();
    ObstructionPair pq = lemma11_witness(jordan_cell(Q, 3, Q.zero()));
    CHECK_FALSE(pq.searched.has_value()); // no enumeration over infinite fields
    CHECK(pq.X == Matrix::unit(Q, 3, 0, 2));
    CHECK(pq.Y == Matrix::unit(Q, 3, 0, 1));

    try {
        lemma11_witness(Matrix::diagonal(f, {f.zero(), f.one(), f.one()}));
        FAIL("semisimple input accepted");
    } catch (const Error& e) {
        CHECK(e.code == Err::SemisimpleInput);
    }
    try {
        lemma11_witness(direct_sum(jordan_cell(f, 2, f.zero()),
                                   Matrix::scalar(f, 1, f.zero())));
        FAIL("non-minimal input accepted");
    } catch (const Error& e) {
        CHECK(e.code == Err::MinimalInput);
    }
}

TEST_CASE("field lifts are homomorphic embeddings") {
    FieldLift lift = lift_field(Field::finite(2, 2), 2);
    CHECK(lift.dst.order() == 16);
    const Field& src = lift.src;
    for (std::uint64_t i = 0; i < 4; ++i)
        for (std::uint64_t j = 0; j < 4; ++j) {
            Fe a = src.element_at(i), b = src.element_at(j);
            CHECK(lift.dst.eq(lift.map(src.add(a, b)),
                              lift.dst.add(lift.map(a), lift.map(b))));
            CHECK(lift.dst.eq(lift.map(src.mul(a, b)),
                              lift.dst.mul(lift.map(a), lift.map(b))));
        }
    CHECK(lift.dst.is_one(lift.map(src.one())));

    CHECK_THROWS_AS(lift_field(Field::rationals(), 2), Error);
}

TEST_CASE("the nine-dimensional separation pair survives every stage") {
    M9Certificate c = m9_certificate();
    CHECK(c.algebra_size == 512);
    CHECK(c.centralizer_dim == 9);
    CHECK(c.subfield_centralizer_dim == 27);
    CHECK(c.scalar_count == 2);
    CHECK(c.subfield_nonscalar_count == 6);
    CHECK(c.full_count == 504);
    CHECK(c.scalar_count + c.subfield_nonscalar_count + c.full_count == 512);
    CHECK(c.dim_CA_CB == 1);
    CHECK(c.dim_CV_CB == 1);
    CHECK(c.dim_CA_CVp == 1);
    CHECK(c.intersection_dim == 1);
    CHECK((c.N * c.N * c.N).is_zero());
    CHECK(c.A * c.V == c.V * c.A);
    Field f = c.A.field();
    Matrix IN = Matrix::identity(f, 9) + c.N;
    CHECK(c.B == IN * c.A * *IN.inverse());
    CHECK(c.Vp == IN * c.V * *IN.inverse());
}
