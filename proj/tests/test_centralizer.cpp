#include "doctest.h"

#include "commgraph/canonical.hpp"
#include "commgraph/centralizer.hpp"

#include "helpers.hpp"

using namespace cg;
using cgtest::random_matrix;

TEST_CASE("subspace canonicalization ignores the generating set") {
    for (const Field& f : {Field::rationals(), Field::finite(2, 1), Field::finite(3, 2)}) {
        CAPTURE(f.spec_line());
        SplitMix64 rng(37);
        for (int t = 0; t < 100; ++t) {
            int n = 2 + static_cast<int>(rng.bounded(2));
            std::vector<Matrix> gens;
            for (int i = 0; i < 3; ++i) gens.push_back(random_matrix(f, n, n, rng));
            MatSubspace U = MatSubspace::from_matrices(f, n, gens);
            // shuffle and mix the generators linearly
            std::vector<Matrix> mixed;
            mixed.push_back(gens[2]);
            mixed.push_back(gens[1] + gens[2]);
            mixed.push_back(gens[0] + gens[1]);
            mixed.push_back(gens[0] + gens[0]); // dependent
            MatSubspace V = MatSubspace::from_matrices(f, n, mixed);
            CHECK(U == V);
            CHECK(U.signature() == V.signature());
            for (const auto& g : gens) CHECK(U.contains(g));
            for (const auto& b : U.basis_matrices()) {
                auto coords = U.coordinates(b);
                CHECK(coords.has_value());
            }
        }
    }
}

TEST_CASE("intersection dimension obeys the modular identity") {
    Field f = Field::finite(5, 1);
    SplitMix64 rng(41);
    for (int t = 0; t < 100; ++t) {
        int n = 2;
        std::vector<Matrix> ga, gb;
        for (int i = 0; i < 2; ++i) ga.push_back(random_matrix(f, n, n, rng));
        for (int i = 0; i < 2; ++i) gb.push_back(random_matrix(f, n, n, rng));
        MatSubspace U = MatSubspace::from_matrices(f, n, ga);
        MatSubspace V = MatSubspace::from_matrices(f, n, gb);
        std::vector<Matrix> all = ga;
        all.insert(all.end(), gb.begin(), gb.end());
        MatSubspace sum = MatSubspace::from_matrices(f, n, all);
        MatSubspace meet = U.intersect(V);
        CHECK(meet.dim() == U.dim() + V.dim() - sum.dim());
        for (const auto& b : meet.basis_matrices()) {
            CHECK(U.contains(b));
            CHECK(V.contains(b));
        }
        CHECK(meet == subspace_intersect(U, V));
    }
}

TEST_CASE("centralizer members commute and the space transforms by conjugation") {
    for (const Field& f : cgtest::suite_fields()) {
        CAPTURE(f.spec_line());
        SplitMix64 rng(43);
        for (int t = 0; t < 60; ++t) {
            int n = 2 + static_cast<int>(rng.bounded(3));
            Matrix A = random_matrix(f, n, n, rng);
            CentralizerBasis cb = centralizer(A);
            CHECK((cb.space.dim() >= n || A.is_scalar()));
            CHECK(cb.space.contains(Matrix::identity(f, n)));
            CHECK(cb.space.contains(A));
            for (const auto& M : cb.space.basis_matrices()) CHECK(A * M == M * A);

            Matrix T = cgtest::random_invertible(f, n, rng);
            Matrix Ti = *T.inverse();
            MatSubspace conj = cb.space.conjugated(Ti, T);
            CHECK(conj == centralizer(Ti * A * T).space);
        }
    }
}

TEST_CASE("minimality is exactly centralizer dimension n on M_3(F_2)") {
    Field f = Field::finite(2, 1);
    int minimal_count = 0;
    for (std::uint64_t bits = 0; bits < 512; ++bits) {
        Matrix A = cgtest::gf2_matrix_from_bits(f, 3, bits);
        int dim = centralizer(A).space.dim();
        if (A.is_scalar()) {
            CHECK(dim == 9);
            continue;
        }
        CHECK(dim >= 3);
        bool min = is_minimal(A);
        CHECK(min == (dim == 3));
        CHECK(min == (A.min_poly().degree() == 3));
        if (min) ++minimal_count;
    }
    CHECK(minimal_count > 0);
}

TEST_CASE("polynomial algebra sits inside the centralizer") {
    Field f = Field::finite(3, 1);
    SplitMix64 rng(47);
    for (int t = 0; t < 60; ++t) {
        int n = 2 + static_cast<int>(rng.bounded(3));
        Matrix A = random_matrix(f, n, n, rng);
        MatSubspace pa = poly_algebra(A);
        CHECK(pa.dim() == A.min_poly().degree());
        CentralizerBasis cb = centralizer(A);
        for (const auto& b : pa.basis_matrices()) CHECK(cb.space.contains(b));
    }
}

TEST_CASE("double centralizer identity, exhaustively on small algebras") {
    for (std::uint64_t q : {2ull, 3ull}) {
        Field f = Field::finite(q, 1);
        std::uint64_t total = 1;
        for (int i = 0; i < 4; ++i) total *= q;
        for (std::uint64_t code = 0; code < total; ++code) {
            std::uint64_t rem = code;
            Matrix A(f, 2, 2);
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) {
                    A.set(i, j, f.element_at(rem % q));
                    rem /= q;
                }
            if (A.is_scalar()) continue;
            CHECK(double_centralizer_check(A));
        }
    }
    // spot checks at larger sizes
    SplitMix64 rng(53);
    for (const Field& f : {Field::rationals(), Field::finite(5, 1)}) {
        for (int t = 0; t < 25; ++t) {
            Matrix A = random_matrix(f, 3 + static_cast<int>(rng.bounded(2)),
                                     3 + static_cast<int>(rng.bounded(2)), rng);
            if (!A.is_square() || A.is_scalar()) continue;
            CHECK(double_centralizer_check(A));
        }
    }
}

TEST_CASE("centralizer equality relations") {
    Field f = Field::finite(5, 1);
    SplitMix64 rng(59);
    for (int t = 0; t < 80; ++t) {
        int n = 2 + static_cast<int>(rng.bounded(2));
        Matrix A = cgtest::random_split_matrix(f, n, rng);
        // affine images share the centralizer
        Matrix B = A.scale(f.from_int(2)) + Matrix::scalar(f, n, f.from_int(3));
        if (!B.is_scalar() && B != A) {
            CHECK(equivalent(A, B));
            CHECK(precedes(A, B));
            CHECK(precedes(B, A));
        }
        Matrix C = cgtest::random_split_matrix(f, n, rng);
        CHECK(equivalent(A, C) == (centralizer(A).space == centralizer(C).space));
        CHECK(precedes(A, C) == [&] {
            for (const auto& M : centralizer(A).space.basis_matrices())
                if (M * C != C * M) return false;
            return true;
        }());
    }
    CHECK(centralizer_of_set({Matrix::unit(f, 3, 0, 1), Matrix::unit(f, 3, 1, 2)}).space ==
          centralizer(Matrix::unit(f, 3, 0, 1))
              .space.intersect(centralizer(Matrix::unit(f, 3, 1, 2)).space));
}
