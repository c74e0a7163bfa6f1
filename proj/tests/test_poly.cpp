#include "doctest.h"

#include "commgraph/canonical.hpp"
#include "commgraph/poly.hpp"

#include "helpers.hpp"

using namespace cg;

namespace {

Poly random_poly(const Field& f, int maxdeg, SplitMix64& rng) {
    int d = static_cast<int>(rng.bounded(static_cast<std::uint64_t>(maxdeg + 1)));
    std::vector<Fe> cs;
    for (int i = 0; i <= d; ++i) cs.push_back(cgtest::random_element(f, rng));
    return Poly(f, std::move(cs));
}

// p evaluated at a square matrix, Horner form.
Matrix poly_at(const Poly& p, const Matrix& A) {
    const Field& f = A.field();
    int n = A.rows();
    Matrix acc = Matrix::zero(f, n, n);
    for (int i = p.degree(); i >= 0; --i) {
        acc = acc * A;
        acc = acc + Matrix::scalar(f, n, p.coeff(i));
    }
    return acc;
}

} // namespace

TEST_CASE("polynomial ring identities") {
    for (const Field& f : cgtest::suite_fields()) {
        CAPTURE(f.spec_line());
        SplitMix64 rng(3);
        for (int t = 0; t < 1000; ++t) {
            Poly a = random_poly(f, 5, rng), b = random_poly(f, 5, rng),
                 c = random_poly(f, 4, rng);
            CHECK((a + b) * c == a * c + b * c);
            CHECK(a * b == b * a);
            CHECK(a - a == Poly::zero(f));
            if (!b.is_zero()) {
                auto [q, r] = a.divmod(b);
                CHECK(a == q * b + r);
                CHECK(r.degree() < b.degree());
            }
        }
    }
}

TEST_CASE("gcd divides both inputs and is monic") {
    for (const Field& f : {Field::rationals(), Field::finite(5, 1), Field::finite(2, 3)}) {
        CAPTURE(f.spec_line());
        SplitMix64 rng(5);
        for (int t = 0; t < 300; ++t) {
            Poly a = random_poly(f, 5, rng), b = random_poly(f, 5, rng);
            Poly g = poly_gcd(a, b);
            if (a.is_zero() && b.is_zero()) {
                CHECK(g.is_zero());
                continue;
            }
            CHECK(g.is_monic());
            if (!a.is_zero()) CHECK(a.divmod(g).second.is_zero());
            if (!b.is_zero()) CHECK(b.divmod(g).second.is_zero());
            Poly l = poly_lcm(a, b);
            if (!a.is_zero() && !b.is_zero()) {
                CHECK(l.divmod(a).second.is_zero());
                CHECK(l.divmod(b).second.is_zero());
            }
        }
    }
}

TEST_CASE("roots built in are roots found") {
    for (const Field& f : {Field::rationals(), Field::finite(7, 1), Field::finite(3, 2)}) {
        CAPTURE(f.spec_line());
        SplitMix64 rng(9);
        for (int t = 0; t < 200; ++t) {
            std::vector<Fe> roots;
            int k = 1 + static_cast<int>(rng.bounded(4));
            for (int i = 0; i < k; ++i) roots.push_back(cgtest::random_element(f, rng));
            Poly p = Poly::from_roots(f, roots);
            auto found = poly_roots_in_field(p);
            int total = 0;
            for (const auto& [r, m] : found) {
                CHECK(f.is_zero(p.eval(r)));
                total += m;
            }
            CHECK(total == k);
        }
    }
}

TEST_CASE("irreducibility over finite fields") {
    Field f2 = Field::finite(2, 1);
    Poly x2x1(f2, {f2.one(), f2.one(), f2.one()}); // x^2 + x + 1
    CHECK(poly_is_irreducible(x2x1));
    Poly x21(f2, {f2.one(), f2.zero(), f2.one()}); // x^2 + 1 = (x+1)^2
    CHECK_FALSE(poly_is_irreducible(x21));

    Field f5 = Field::finite(5, 1);
    Poly a(f5, {f5.from_int(1), f5.zero(), f5.one()}); // x^2 + 1, roots +-2
    CHECK_FALSE(poly_is_irreducible(a));
    Poly b(f5, {f5.from_int(2), f5.zero(), f5.one()}); // x^2 + 2, 3 is a non-residue
    CHECK(poly_is_irreducible(b));

    Field Q = Field::rationals();
    Poly c(Q, {Q.one(), Q.zero(), Q.one()});
    CHECK_THROWS_AS(poly_is_irreducible(c), Error);
}

TEST_CASE("factor degree lists are consistent") {
    Field f2 = Field::finite(2, 1);
    // x(x^2+x+1): degrees {1, 2}
    Poly p(f2, {f2.zero(), f2.one(), f2.one(), f2.one()});
    auto degs = poly_factor_degrees(p);
    std::vector<int> want = {1, 2};
    CHECK(degs == want);
}

TEST_CASE("cayley-hamilton and minimal polynomial divisibility") {
    for (const Field& f : cgtest::suite_fields()) {
        CAPTURE(f.spec_line());
        SplitMix64 rng(13);
        for (int t = 0; t < 120; ++t) {
            int n = 2 + static_cast<int>(rng.bounded(3));
            Matrix A = cgtest::random_matrix(f, n, n, rng);
            Poly cp = A.char_poly();
            CHECK(cp.degree() == n);
            CHECK(cp.is_monic());
            CHECK(poly_at(cp, A).is_zero());
            CHECK(f.eq(cp.eval(f.zero()), (-A).det()));
            Poly mp = A.min_poly();
            CHECK(mp.is_monic());
            CHECK(poly_at(mp, A).is_zero());
            CHECK(cp.divmod(mp).second.is_zero());
            // nothing of lower degree annihilates: recompute on a conjugate
            Matrix T = cgtest::random_invertible(f, n, rng);
            CHECK((T * A * *T.inverse()).min_poly() == mp);
        }
    }
}
