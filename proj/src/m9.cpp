#include "commgraph/m9.hpp"

namespace cg {

namespace {

// Every neighbour of a vertex with centralizer C(A_hat) or C(Y_hat) has its
// centralizer among those two subspaces; the stage (d) sweep proves this for
// the whole polynomial algebra, which is what makes stage (g) conclusive.

Matrix poly_in(const std::vector<Matrix>& powers, std::uint64_t bits) {
    const Matrix& id = powers.front();
    Matrix M = Matrix::zero(id.field(), id.rows(), id.cols());
    for (std::size_t i = 0; i < powers.size(); ++i)
        if ((bits >> i) & 1) M = M + powers[i];
    return M;
}

} // namespace

M9Certificate m9_certificate() {
    Field f = Field::finite(2, 1);
    const int n = 9;

    // (a) the modulus is irreducible
    std::vector<Fe> mc(n + 1, f.zero());
    for (int e : {0, 2, 4, 8, 9}) mc[e] = f.one();
    Poly m(f, mc);
    require(poly_is_irreducible(m), Err::Internal, "stage (a): modulus must be irreducible");

    // (b) the companion matrix has a 9-dimensional centralizer, so the
    // centralizer equals the 512-element polynomial algebra
    Matrix A_hat = companion(m);
    CentralizerBasis ca = centralizer(A_hat);
    require(ca.space.dim() == n, Err::Internal, "stage (b): dim C(A_hat) must be 9");
    require(A_hat.min_poly() == m, Err::Internal, "stage (b): A_hat must have modulus m");
    Int algebra_size = Int(1) << n;

    std::vector<Matrix> powers;
    powers.reserve(n);
    Matrix acc = Matrix::identity(f, n);
    for (int i = 0; i < n; ++i) {
        powers.push_back(acc);
        acc = acc * A_hat;
    }

    // (c) first polynomial generating the intermediate subfield
    std::optional<Matrix> Y_hat;
    std::vector<std::uint64_t> p_bits;
    for (std::uint64_t t = 0; t < 512 && !Y_hat; ++t) {
        Matrix M = poly_in(powers, t);
        if (M.is_scalar()) continue;
        if (M.min_poly().degree() == 3) {
            Y_hat = M;
            p_bits.assign(n, 0);
            for (int i = 0; i < n; ++i) p_bits[i] = (t >> i) & 1;
        }
    }
    require(Y_hat.has_value(), Err::Internal, "stage (c): subfield generator must exist");
    CentralizerBasis cy = centralizer(*Y_hat);
    require(cy.space.dim() == 27, Err::Internal, "stage (c): dim C(Y_hat) must be 27");

    // (d) partition of the polynomial algebra by minimal polynomial degree
    std::string sigA = ca.space.signature();
    std::string sigY = cy.space.signature();
    int scalars = 0, small = 0, full = 0;
    for (std::uint64_t t = 0; t < 512; ++t) {
        Matrix M = poly_in(powers, t);
        require(M * A_hat == A_hat * M, Err::Internal, "stage (d): algebra must commute");
        if (M.is_scalar()) {
            ++scalars;
            continue;
        }
        int d = M.min_poly().degree();
        if (d == 3) {
            ++small;
            require(centralizer(M).space.signature() == sigY, Err::Internal,
                    "stage (d): subfield elements must share the subfield centralizer");
        } else if (d == n) {
            ++full;
            require(centralizer(M).space.signature() == sigA, Err::Internal,
                    "stage (d): degree-9 elements must have the same neighbours as A_hat");
        } else {
            fail(Err::Internal, "stage (d): no intermediate degrees can appear");
        }
    }
    require(scalars == 2 && small == 6 && full == 504, Err::Internal,
            "stage (d): partition counts must be 2 / 6 / 504");

    // (e) greedy GF(8)-module basis: chains (v, Yv, Y^2 v) from standard
    // basis vectors independent of everything accepted so far
    std::vector<std::vector<Fe>> chain_vecs;
    auto rank_of = [&](const std::vector<std::vector<Fe>>& rows) {
        if (rows.empty()) return 0;
        Matrix R(f, static_cast<int>(rows.size()), n);
        for (int i = 0; i < static_cast<int>(rows.size()); ++i)
            for (int j = 0; j < n; ++j) R.set(i, j, rows[i][j]);
        return R.rank();
    };
    for (int e = 0; e < n && chain_vecs.size() < 9; ++e) {
        std::vector<Fe> v(n, f.zero());
        v[e] = f.one();
        auto probe = chain_vecs;
        probe.push_back(v);
        if (rank_of(probe) == rank_of(chain_vecs)) continue;
        std::vector<Fe> v1 = Y_hat->apply(v);
        std::vector<Fe> v2 = Y_hat->apply(v1);
        chain_vecs.push_back(v);
        chain_vecs.push_back(v1);
        chain_vecs.push_back(v2);
        require(rank_of(chain_vecs) == static_cast<int>(chain_vecs.size()), Err::Internal,
                "stage (e): each accepted chain must extend the span by three");
    }
    require(chain_vecs.size() == 9, Err::Internal, "stage (e): three chains must fill the space");
    Matrix P(f, n, n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) P.set(i, j, chain_vecs[j][i]);
    auto Pinv = P.inverse();
    require(Pinv.has_value(), Err::Internal, "stage (e): chain matrix must be invertible");
    Matrix S1 = *Pinv;
    Matrix C3 = companion(Y_hat->min_poly());
    Matrix V = direct_sum(direct_sum(C3, C3), C3);
    require(S1 * *Y_hat * P == V, Err::Internal,
            "stage (e): the module basis must triple the companion block");

    // (f) transported matrices and the cube-zero perturbation
    Matrix A = S1 * A_hat * P;
    std::vector<Matrix> apowers;
    apowers.reserve(n);
    Matrix aacc = Matrix::identity(f, n);
    for (int i = 0; i < n; ++i) {
        apowers.push_back(aacc);
        aacc = aacc * A;
    }
    std::uint64_t tbits = 0;
    for (int i = 0; i < n; ++i) tbits |= p_bits[i] << i;
    require(poly_in(apowers, tbits) == V, Err::Internal, "stage (f): V must equal p(A)");
    Matrix N(f, n, n);
    N.set(0, 2, f.one());
    N.set(3, 8, f.one());
    N.set(8, 1, f.one());
    require((N * N * N).is_zero(), Err::Internal, "stage (f): N^3 must vanish");
    Matrix IN = Matrix::identity(f, n) + N;
    auto INinv = IN.inverse();
    require(INinv.has_value(), Err::Internal, "stage (f): I + N must be invertible");
    Matrix B = IN * A * *INinv;
    Matrix Vp = IN * V * *INinv;

    // (g) all four cross intersections are scalar-only, so no path of length
    // four or less joins A and B
    MatSubspace CA = centralizer(A).space;
    MatSubspace CV = centralizer(V).space;
    MatSubspace CB = centralizer(B).space;
    MatSubspace CVp = centralizer(Vp).space;
    int d_ab = CA.intersect(CB).dim();
    int d_vb = CV.intersect(CB).dim();
    int d_avp = CA.intersect(CVp).dim();
    int d_vvp = CV.intersect(CVp).dim();
    require(d_ab == 1, Err::Internal, "stage (g): C(A) meet C(B) must be scalars");
    require(d_vb == 1, Err::Internal, "stage (g): C(V) meet C(B) must be scalars");
    require(d_avp == 1, Err::Internal, "stage (g): C(A) meet C(Vp) must be scalars");
    require(d_vvp == 1, Err::Internal, "stage (g): C(V) meet C(Vp) must be scalars");

    return M9Certificate{std::move(m), std::move(A_hat),  std::move(*Y_hat),
                         std::move(p_bits), std::move(S1), std::move(A),
                         std::move(V), std::move(N), std::move(B),
                         std::move(Vp), algebra_size, n,
                         27, scalars, small,
                         full, d_ab, d_vb,
                         d_avp, d_vvp};
}

} // namespace cg
