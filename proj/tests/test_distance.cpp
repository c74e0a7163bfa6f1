#include "doctest.h"

#include <cstdlib>

#include "commgraph/census.hpp"
#include "commgraph/distance.hpp"

#include "helpers.hpp"

using namespace cg;

namespace {

// All non-scalar members of M_3(F_2), fixed enumeration order.
std::vector<Matrix> all_nonscalar_3x3_gf2() {
    Field f = Field::finite(2, 1);
    std::vector<Matrix> out;
    for (std::uint64_t bits = 0; bits < 512; ++bits) {
        Matrix A = cgtest::gf2_matrix_from_bits(f, 3, bits);
        if (!A.is_scalar()) out.push_back(std::move(A));
    }
    return out;
}

// Reference predicate for d(A,B) <= 3 over a finite field: some non-scalar
// X in C(A) commutes with some non-scalar Y in C(B). Covers the shorter
// distances as degenerate cases (X = Y, X = B, ...).
bool brute_le3(const Matrix& A, const Matrix& B) {
    if (A == B) return true;
    const Field& f = A.field();
    auto members = [&](const Matrix& M) {
        auto basis = centralizer(M).space.basis_matrices();
        std::uint64_t q = f.order().convert_to<std::uint64_t>();
        std::vector<Matrix> out;
        std::vector<std::uint64_t> digits(basis.size(), 0);
        for (;;) {
            Matrix X = Matrix::zero(f, M.rows(), M.cols());
            for (std::size_t i = 0; i < basis.size(); ++i)
                if (digits[i]) X = X + basis[i].scale(f.element_at(digits[i]));
            if (!X.is_scalar()) out.push_back(std::move(X));
            std::size_t k = 0;
            while (k < digits.size() && ++digits[k] == q) digits[k++] = 0;
            if (k == digits.size()) break;
        }
        return out;
    };
    auto ca = members(A), cb = members(B);
    for (const auto& X : ca)
        for (const auto& Y : cb)
            if (X * Y == Y * X) return true;
    return false;
}

int le3_code(const DistanceResult& r) {
    switch (r.verdict) {
    case Verdict::d0: return 0;
    case Verdict::d1: return 1;
    case Verdict::d2: return 2;
    case Verdict::d3: return 3;
    default: return 4;
    }
}

} // namespace

TEST_CASE("two-step decisions match first principles") {
    for (const Field& f : {Field::finite(2, 1), Field::finite(5, 1), Field::rationals()}) {
        CAPTURE(f.spec_line());
        SplitMix64 rng(71);
        for (int t = 0; t < 80; ++t) {
            int n = 2 + static_cast<int>(rng.bounded(3));
            Matrix A = cgtest::random_split_matrix(f, n, rng);
            Matrix B = cgtest::random_split_matrix(f, n, rng);
            DistanceResult r = distance_le2(A, B);
            DistanceResult s = distance_le2(B, A);
            CHECK(r.verdict == s.verdict);
            if (A == B) CHECK(r.verdict == Verdict::d0);
            if (r.verdict == Verdict::d1) {
                CHECK(A * B == B * A);
                CHECK(A != B);
            }
            if (A != B && A * B == B * A) CHECK(r.verdict == Verdict::d1);
            if (r.verdict == Verdict::d2) {
                REQUIRE(r.witness_path.has_value());
                CHECK(r.witness_path->size() == 3);
                CHECK(validate_path(*r.witness_path, A, B));
            }
            if (r.verdict == Verdict::unknown) {
                CHECK(r.lower_bound >= 3);
                auto meet = centralizer(A).space.intersect(centralizer(B).space);
                CHECK_FALSE(contains_nonscalar(meet));
            }
            // conjugation invariance
            Matrix T = cgtest::random_invertible(f, n, rng);
            Matrix Ti = *T.inverse();
            CHECK(distance_le2(Ti * A * T, Ti * B * T).verdict == r.verdict);
        }
    }
}

TEST_CASE("affine-class exhaustion agrees with brute force over GF(2)") {
    auto mats = all_nonscalar_3x3_gf2();
    SplitMix64 rng(73);
    int checked = 0;
    while (checked < 40) {
        const Matrix& A = mats[rng.bounded(mats.size())];
        const Matrix& B = mats[rng.bounded(mats.size())];
        DistanceResult r = distance_le3_finite(A, B);
        bool le3 = le3_code(r) <= 3;
        CHECK(le3 == brute_le3(A, B));
        if (le3 && r.witness_path) CHECK(validate_path(*r.witness_path, A, B));
        if (!le3) CHECK(r.lower_bound >= 4);
        ++checked;
    }
}

TEST_CASE("affine-class exhaustion agrees with brute force over GF(3)") {
    Field f = Field::finite(3, 1);
    SplitMix64 rng(79);
    int checked = 0;
    while (checked < 8) {
        Matrix A = cgtest::random_split_matrix(f, 3, rng);
        Matrix B = cgtest::random_split_matrix(f, 3, rng);
        // keep the reference enumeration tractable
        if (centralizer(A).space.dim() > 4 || centralizer(B).space.dim() > 4) continue;
        DistanceResult r = distance_le3_finite(A, B);
        CHECK((le3_code(r) <= 3) == brute_le3(A, B));
        ++checked;
    }
}

TEST_CASE("distance is symmetric and conjugation-invariant at the le3 level") {
    Field f = Field::finite(2, 1);
    auto mats = all_nonscalar_3x3_gf2();
    SplitMix64 rng(83);
    for (int t = 0; t < 60; ++t) {
        const Matrix& A = mats[rng.bounded(mats.size())];
        const Matrix& B = mats[rng.bounded(mats.size())];
        int ab = le3_code(distance_le3_finite(A, B));
        int ba = le3_code(distance_le3_finite(B, A));
        CHECK(ab == ba);
        Matrix T = cgtest::random_invertible(f, 3, rng);
        Matrix Ti = *T.inverse();
        CHECK(le3_code(distance_le3_finite(Ti * A * T, Ti * B * T)) == ab);
    }
}

TEST_CASE("length-4 paths exist for every eligible pair in M_3(F_2)") {
    Field f = Field::finite(2, 1);
    CensusGraph g = census_build(f, 3);
    auto mats = all_nonscalar_3x3_gf2();
    long long built = 0, ineligible = 0;
    for (const auto& cls : g.classes()) {
        for (const auto& B : mats) {
            try {
                auto path = path_length4(cls.rep, B);
                CHECK(validate_path(path, cls.rep, B));
                CHECK(path.size() <= 5);
                ++built;
            } catch (const Error& e) {
                CHECK(e.code == Err::NoEigenvalueInField);
                ++ineligible;
            }
        }
    }
    CHECK(built > 0);
    // the GF(8)-type classes have no eigenvalue in the base field
    CHECK(ineligible > 0);
}

TEST_CASE("path endpoints without eigenvalues cannot be bridged") {
    Field f = Field::finite(2, 1);
    Poly q(f, {f.one(), f.one(), f.zero(), f.one()}); // x^3 + x + 1, irreducible
    REQUIRE(poly_is_irreducible(q));
    Matrix C = companion(q);
    CHECK_THROWS_AS(path_length4(C, Matrix::unit(f, 3, 0, 1)), Error);
    CHECK_THROWS_AS(find_commuting_rank_one(C), Error);
}

TEST_CASE("the budget gate raises instead of guessing") {
    Field f = Field::finite(2, 1);
    // J and J^tr meet only in scalars, so le2 cannot settle the pair and the
    // class enumeration (with its budget check) is reached.
    Matrix A = jordan_cell(f, 3, f.zero());
    Matrix B = A.transpose();
    REQUIRE(distance_le2(A, B).verdict == Verdict::unknown);
    try {
        distance_le3_finite(A, B, Int(1));
        FAIL("budget ignored");
    } catch (const Error& e) {
        CHECK(e.code == Err::BudgetExceeded);
    }
    // the environment override reaches the default-budget entry point
    setenv("CG_BUDGET", "1", 1);
    CHECK(enumeration_budget() == 1);
    CHECK_THROWS_AS(distance_le3_finite(A, B), Error);
    unsetenv("CG_BUDGET");
    CHECK(enumeration_budget() == Int(1000000));
}

TEST_CASE("the dispatcher stays exact over the rationals up to distance two") {
    Field Q = Field::rationals();
    Matrix A = Matrix::diagonal(Q, {Q.from_int(0), Q.from_int(1), Q.from_int(2)});
    Matrix B = Matrix::diagonal(Q, {Q.from_int(5), Q.from_int(5), Q.from_int(7)});
    DistanceResult r = distance(A, B);
    CHECK(r.verdict == Verdict::d1); // diagonal matrices commute
    // far pair over an infinite field: inconclusive with guidance
    Matrix X = Matrix::unit(Q, 3, 0, 1) + Matrix::unit(Q, 3, 1, 2);
    Matrix Y = X.transpose();
    DistanceResult far = distance(X, Y);
    if (far.verdict == Verdict::unknown) {
        CHECK(far.exhaustion.has_value());
        CHECK(far.lower_bound >= 3);
    }
}

TEST_CASE("distance_le3 refuses infinite fields") {
    Field Q = Field::rationals();
    Matrix A = Matrix::unit(Q, 3, 0, 1);
    Matrix B = Matrix::unit(Q, 3, 1, 0);
    try {
        distance_le3_finite(A, B);
        FAIL("infinite enumeration accepted");
    } catch (const Error& e) {
        CHECK(e.code == Err::InfiniteField);
    }
}
