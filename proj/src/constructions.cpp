#include "commgraph/constructions.hpp"

#include <algorithm>
#include <numeric>

namespace cg {

namespace {

Fe dot(const Field& f, const std::vector<Fe>& a, const std::vector<Fe>& b) {
    Fe s = f.zero();
    for (std::size_t i = 0; i < a.size(); ++i) s = f.add(s, f.mul(a[i], b[i]));
    return s;
}

// u, v with R = u v^tr. Requires rank(R) = 1.
std::pair<std::vector<Fe>, std::vector<Fe>> rank_one_factors(const Matrix& R) {
    const Field& f = R.field();
    require(R.rank() == 1, Err::BadParameters, "matrix must have rank one");
    int i0 = -1, j0 = -1;
    for (int i = 0; i < R.rows() && i0 < 0; ++i)
        for (int j = 0; j < R.cols(); ++j)
            if (!f.is_zero(R.at(i, j))) {
                i0 = i;
                j0 = j;
                break;
            }
    std::vector<Fe> u(R.rows()), v(R.cols());
    for (int i = 0; i < R.rows(); ++i) u[i] = R.at(i, j0);
    Fe inv = f.inv(R.at(i0, j0));
    for (int j = 0; j < R.cols(); ++j) v[j] = f.mul(R.at(i0, j), inv);
    return {u, v};
}

bool is_diagonal(const Matrix& m) {
    const Field& f = m.field();
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (i != j && !f.is_zero(m.at(i, j))) return false;
    return true;
}

} // namespace

Matrix cauchy_matrix(const Field& f, const std::vector<Fe>& xs, const std::vector<Fe>& ys) {
    require(!xs.empty() && xs.size() == ys.size(), Err::ShapeMismatch,
            "parameter lists must be nonempty and equally long");
    int n = static_cast<int>(xs.size());
    for (int i = 0; i < n; ++i) {
        f.check(xs[i]);
        f.check(ys[i]);
        for (int j = i + 1; j < n; ++j) {
            require(!f.eq(xs[i], xs[j]), Err::DegenerateParameters,
                    "x parameters must be pairwise distinct");
            require(!f.eq(ys[i], ys[j]), Err::DegenerateParameters,
                    "y parameters must be pairwise distinct");
        }
    }
    Matrix C(f, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Fe d = f.sub(xs[i], ys[j]);
            require(!f.is_zero(d), Err::DegenerateParameters,
                    "x and y parameters must not collide");
            C.set(i, j, f.inv(d));
        }
    return C;
}

namespace {

void require_minimal_spec(const Field& f, const JordanSpec& s, const char* which) {
    require(!s.blocks.empty(), Err::NotMinimalSpec, std::string(which) + " is empty");
    for (std::size_t i = 0; i < s.blocks.size(); ++i) {
        require(s.blocks[i].size >= 1, Err::NotMinimalSpec,
                std::string(which) + " has a non-positive cell size");
        for (std::size_t j = i + 1; j < s.blocks.size(); ++j)
            require(!f.eq(s.blocks[i].eigenvalue, s.blocks[j].eigenvalue), Err::NotMinimalSpec,
                    std::string(which) + " repeats an eigenvalue; minimality needs them distinct");
    }
}

// Minor validation is exhaustive up to the all_minors_nonzero size cap;
// larger matrices fall back to the determinant.
bool conjugator_ok(const Matrix& S) {
    if (S.rows() <= 8) return S.all_minors_nonzero();
    return !S.field().is_zero(S.det());
}

Matrix default_cauchy(const Field& f, int n) {
    if (f.is_rational()) {
        // x_i = i, y_j = -(j-1): all denominators i+j-1 positive, and the
        // minor product formula keeps every minor nonzero.
        std::vector<Fe> xs(n), ys(n);
        for (int i = 0; i < n; ++i) {
            xs[i] = f.from_int(i + 1);
            ys[i] = f.from_int(-i);
        }
        Matrix S = cauchy_matrix(f, xs, ys);
        require(conjugator_ok(S), Err::Internal, "rational Cauchy minors vanished unexpectedly");
        return S;
    }
    Int q = f.order();
    require(q > 2 * n, Err::DegenerateParameters,
            "the default Cauchy conjugator needs a field with more than 2n elements");
    std::uint64_t qu = q.convert_to<std::uint64_t>();
    std::vector<Fe> xs(n);
    for (int i = 0; i < n; ++i) xs[i] = f.from_int(i + 1);
    // Genericity can fail modulo q; advance the y offset until every minor
    // is nonzero. The scan is deterministic, so retries are reproducible.
    for (std::uint64_t t = 0; t < qu; ++t) {
        std::vector<Fe> ys(n);
        for (int j = 0; j < n; ++j) ys[j] = f.from_int(-(long long)(j + t));
        bool distinct = true;
        for (int i = 0; i < n && distinct; ++i) {
            for (int j = i + 1; j < n && distinct; ++j)
                if (f.eq(ys[i], ys[j])) distinct = false;
            for (int j = 0; j < n && distinct; ++j)
                if (f.eq(xs[i], ys[j])) distinct = false;
        }
        if (!distinct) continue;
        Matrix S = cauchy_matrix(f, xs, ys);
        if (conjugator_ok(S)) return S;
    }
    fail(Err::DegenerateParameters, "no Cauchy parameter offset yields nonzero minors");
}

} // namespace

Theorem5Instance theorem5_instance(const Field& f, JordanSpec specA, JordanSpec specB,
                                   std::optional<Matrix> S) {
    require_minimal_spec(f, specA, "specA");
    require_minimal_spec(f, specB, "specB");
    int n = specA.total_size();
    require(n == specB.total_size(), Err::ShapeMismatch, "specs must have equal total size");
    require(n >= 2, Err::BadDimension, "need n >= 2");
    Matrix A = build_from_spec(f, specA);
    Matrix B = build_from_spec(f, specB);
    Matrix conj = S ? std::move(*S) : default_cauchy(f, n);
    if (S) {
        require(conj.field().same(f), Err::FieldMismatch, "conjugator lives in the wrong field");
        require(conj.is_square() && conj.rows() == n, Err::ShapeMismatch,
                "conjugator must be n x n");
        require(conjugator_ok(conj), Err::BadConjugator, "conjugator has a vanishing minor");
    }
    auto inv = conj.inverse();
    require(inv.has_value(), Err::Internal, "minor-validated conjugator must be invertible");
    Matrix Bprime = *inv * B * conj;
    require(is_minimal(A), Err::Internal, "distinct-eigenvalue spec must be minimal");
    require(is_minimal(Bprime), Err::Internal, "conjugated spec must stay minimal");
    return Theorem5Instance{std::move(A), std::move(Bprime), std::move(conj),
                            std::move(specA), std::move(specB)};
}

FamilyInstance family_n3(const Field& f, const Fe& alpha) {
    f.check(alpha);
    const int n = 3;
    std::vector<Fe> x = {f.zero(), f.one(), alpha};
    std::vector<Fe> y = {f.zero(), alpha, f.neg(f.one())};
    Matrix R = Matrix::outer(f, x, y);
    require(f.is_zero(dot(f, y, x)), Err::Internal, "y^tr x must cancel");
    require((R * R).is_zero(), Err::Internal, "R_alpha must be square-zero");

    // T with T^-1 R T = E_13: columns t1 = x (the image), t2 completing the
    // kernel of y^tr, t3 a preimage of x. Then X = T J_3 T^-1 squares to R.
    int j0 = -1;
    for (int j = 0; j < n; ++j)
        if (!f.is_zero(y[j])) {
            j0 = j;
            break;
        }
    std::vector<Fe> t3(n, f.zero());
    t3[j0] = f.inv(y[j0]);
    Matrix yrow(f, 1, n);
    for (int j = 0; j < n; ++j) yrow.set(0, j, y[j]);
    auto ker = yrow.nullspace();
    Matrix T(f, n, n);
    for (int i = 0; i < n; ++i) {
        T.set(i, 0, x[i]);
        T.set(i, 2, t3[i]);
    }
    bool built = false;
    for (const auto& cand : ker) {
        for (int i = 0; i < n; ++i) T.set(i, 1, cand[i]);
        if (!f.is_zero(T.det())) {
            built = true;
            break;
        }
    }
    require(built, Err::Internal, "no kernel vector completes the basis");
    Matrix Tinv = *T.inverse();
    Matrix E13 = Matrix::unit(f, n, 0, 2);
    require(Tinv * R * T == E13, Err::Internal, "conjugation must send R_alpha to E_13");
    Matrix X = T * jordan_cell(f, n, f.zero()) * Tinv;
    require(X * X == R, Err::Internal, "X_alpha^2 must equal R_alpha");
    require(is_minimal(X), Err::Internal, "family member must be minimal");
    Matrix Z = Matrix::unit(f, n, 0, 0);

    FamilyInstance inst{n, alpha, std::nullopt, X, {}, {}, {}};
    inst.aux.emplace("R_alpha", R);
    inst.aux.emplace("T", T);
    inst.aux.emplace("Z", Z);
    inst.aux.emplace("hub", R);
    inst.vectors.emplace("x", x);
    inst.vectors.emplace("y", y);
    inst.short_path = {X, R, Z};
    require(validate_path(inst.short_path, X, Z), Err::Internal, "short path must validate");
    return inst;
}

FamilyInstance family_n4(const Field& f, const Fe& alpha, const Fe& lambda) {
    f.check(alpha);
    f.check(lambda);
    require(!f.is_zero(alpha), Err::BadParameters, "alpha must be nonzero");
    require(!f.is_zero(lambda) && !f.is_one(lambda), Err::BadParameters,
            "lambda must avoid 0 and 1");
    const int n = 4;
    Fe one = f.one(), zero = f.zero();
    Matrix N = Matrix::outer(f, {zero, lambda, f.mul(lambda, alpha), lambda},
                             {zero, f.neg(alpha), one, zero});
    Matrix P = Matrix::outer(f, {zero, one, alpha, zero}, {zero, one, zero, f.neg(one)});
    Matrix S(f, n, n);
    S.set(0, 1, one);
    S.set(1, 0, lambda);
    S.set(1, 3, f.neg(one));
    S.set(2, 0, f.mul(alpha, lambda));
    S.set(2, 2, one);
    S.set(2, 3, f.neg(alpha));
    S.set(3, 0, lambda);
    auto Sinv = S.inverse();
    require(Sinv.has_value(), Err::Internal, "S_alpha must be invertible");
    require(*Sinv * N * S == Matrix::unit(f, n, 0, 2), Err::Internal,
            "S_alpha^-1 N_alpha S_alpha must be E_13");
    require(*Sinv * P * S == Matrix::unit(f, n, 3, 3), Err::Internal,
            "S_alpha^-1 P_alpha S_alpha must be E_44");
    JordanSpec core{{JordanBlockSpec{zero, 3}, JordanBlockSpec{one, 1}}};
    Matrix X = S * build_from_spec(f, core) * *Sinv;
    require(precedes(X, N), Err::Internal, "X_alpha must precede N_alpha");
    require(precedes(X, P), Err::Internal, "X_alpha must precede P_alpha");
    require(is_minimal(X), Err::Internal, "family member must be minimal");
    Matrix Z = Matrix::unit(f, n, 0, 0);

    FamilyInstance inst{n, alpha, lambda, X, {}, {}, {}};
    inst.aux.emplace("N_alpha", N);
    inst.aux.emplace("P_alpha", P);
    inst.aux.emplace("S_alpha", S);
    inst.aux.emplace("Z", Z);
    inst.aux.emplace("hub", N);
    inst.short_path = {X, N, Z};
    require(validate_path(inst.short_path, X, Z), Err::Internal, "short path must validate");
    return inst;
}

FamilyInstance family_n5plus(const Field& f, int n, const Fe& alpha,
                             const std::vector<Fe>& eigs) {
    require(n >= 5, Err::BadDimension, "this family needs n >= 5");
    require(static_cast<int>(eigs.size()) == n, Err::ShapeMismatch, "need exactly n eigenvalues");
    f.check(alpha);
    for (int i = 0; i < n; ++i) {
        f.check(eigs[i]);
        for (int j = i + 1; j < n; ++j)
            require(!f.eq(eigs[i], eigs[j]), Err::RepeatedEigenvalues,
                    "eigenvalues must be pairwise distinct");
    }
    Matrix A = Matrix::diagonal(f, eigs);
    std::vector<Fe> x(n, f.one());
    std::vector<Fe> fv(n, f.one());
    fv[0] = f.from_int(2 - n);
    fv[n - 1] = f.zero();
    std::vector<Fe> gv(n, f.one());
    gv[0] = f.from_int(1 - n);
    require(f.is_zero(dot(f, fv, x)) && f.is_zero(dot(f, gv, x)), Err::Internal,
            "f and g must annihilate the all-ones vector");
    Matrix R = Matrix::outer(f, x, fv);
    Matrix Rt = Matrix::outer(f, x, gv);
    Matrix Ra = R + Rt.scale(alpha);
    Matrix Id = Matrix::identity(f, n);
    Matrix S = Id + Ra;
    Matrix Si = Id - Ra;
    require(S * Si == Id, Err::Internal, "I - R_alpha must invert I + R_alpha");
    Matrix X = S * A * Si;
    require(is_minimal(X), Err::Internal, "family member must be minimal");
    Matrix Y = S * Matrix::unit(f, n, 0, 0) * Si;

    Matrix rows(f, 4, n);
    rows.set(0, 0, f.one());
    for (int j = 0; j < n; ++j) {
        rows.set(1, j, x[j]);
        rows.set(2, j, fv[j]);
        rows.set(3, j, gv[j]);
    }
    auto ker = rows.nullspace();
    require(!ker.empty(), Err::Internal, "w must exist for n >= 5");
    std::vector<Fe> w = ker.front();
    Matrix Z = Matrix::outer(f, w, w);
    require(!Z.is_scalar(), Err::Internal, "Z must be non-scalar");

    FamilyInstance inst{n, alpha, std::nullopt, X, {}, {}, {}};
    inst.aux.emplace("A_diag", A);
    inst.aux.emplace("R", R);
    inst.aux.emplace("R_tilde", Rt);
    inst.aux.emplace("R_alpha", Ra);
    inst.aux.emplace("S_alpha", S);
    inst.aux.emplace("Y_alpha", Y);
    inst.aux.emplace("Z", Z);
    inst.aux.emplace("hub", Y);
    inst.vectors.emplace("x", x);
    inst.vectors.emplace("f", fv);
    inst.vectors.emplace("g", gv);
    inst.vectors.emplace("w", w);
    inst.short_path = {X, Y, Z};
    require(validate_path(inst.short_path, X, Z), Err::Internal, "short path must validate");
    return inst;
}

void check_alpha_set(const Field& f, const std::vector<Fe>& alphas) {
    for (const auto& a : alphas) f.check(a);
    for (std::size_t i = 0; i < alphas.size(); ++i)
        for (std::size_t j = i + 1; j < alphas.size(); ++j)
            require(!f.eq(alphas[i], alphas[j]), Err::BadParameters,
                    "alpha values must be pairwise distinct");
    if (f.characteristic() == 2) {
        for (std::size_t i = 0; i < alphas.size(); ++i)
            for (std::size_t j = 0; j < alphas.size(); ++j)
                if (i != j)
                    require(!f.is_one(f.sub(alphas[j], alphas[i])), Err::Char2IndexClash,
                            "in characteristic two the alpha set must avoid differences "
                            "equal to one");
    }
}

std::vector<FamilyInstance> family_n5plus_set(const Field& f, int n,
                                              const std::vector<Fe>& alphas,
                                              const std::vector<Fe>& eigs) {
    check_alpha_set(f, alphas);
    std::vector<FamilyInstance> out;
    out.reserve(alphas.size());
    for (const auto& a : alphas) out.push_back(family_n5plus(f, n, a, eigs));
    return out;
}

Matrix lemma3_system(const Field& f, int k1, int k2, const std::vector<Fe>& a,
                     const std::vector<Fe>& b) {
    require(k1 >= 1 && k2 >= 1, Err::BadDimension, "cell sizes must be positive");
    int k = k1 + k2;
    require(static_cast<int>(a.size()) == k && static_cast<int>(b.size()) == k,
            Err::ShapeMismatch, "vectors must have length k1 + k2");
    for (const auto& e : a) f.check(e);
    for (const auto& e : b) f.check(e);
    Matrix M(f, 4, 4);
    M.set(0, 0, a[k1 - 1]);
    M.set(0, 1, a[k - 1]);
    M.set(1, 2, a[k1 - 1]);
    M.set(1, 3, a[k - 1]);
    M.set(2, 0, b[0]);
    M.set(2, 2, b[k1]);
    M.set(3, 1, b[0]);
    M.set(3, 3, b[k1]);
    return M;
}

namespace {

Matrix corner_from_solution(const Field& f, int k1, int k2, const std::vector<Fe>& x) {
    int k = k1 + k2;
    Matrix Z(f, k, k);
    Z.set(0, k1 - 1, x[0]);
    Z.set(0, k - 1, x[1]);
    Z.set(k1, k1 - 1, x[2]);
    Z.set(k1, k - 1, x[3]);
    return Z;
}

} // namespace

Matrix lemma3_solve(const Field& f, int k1, int k2, const std::vector<Fe>& a,
                    const std::vector<Fe>& b) {
    Matrix M = lemma3_system(f, k1, k2, a, b);
    require(f.is_zero(M.det()), Err::Internal, "corner system must be singular");
    auto ker = M.nullspace();
    require(!ker.empty(), Err::Internal, "singular system must have a kernel vector");
    int k = k1 + k2;
    for (const auto& xv : ker) {
        Matrix Z = corner_from_solution(f, k1, k2, xv);
        if (Z.is_scalar()) continue;
        Matrix A = direct_sum(jordan_cell(f, k1, f.zero()), jordan_cell(f, k2, f.zero()));
        Matrix R = Matrix::outer(f, a, b);
        require((Z * A).is_zero() && (A * Z).is_zero(), Err::Internal,
                "corner witness must annihilate the cells");
        require((Z * R).is_zero() && (R * Z).is_zero(), Err::Internal,
                "corner witness must annihilate the rank-one part");
        return Z;
    }
    fail(Err::Internal, "no non-scalar corner solution found");
}

CornerWitnessContext corner_witness_context(const Matrix& A) {
    const Field& f = A.field();
    require(A.is_square(), Err::ShapeMismatch, "A must be square");
    require(!A.is_scalar(), Err::ScalarInput, "A must be non-scalar");
    require(!is_minimal(A), Err::MinimalInput, "A must be non-minimal");
    JordanResult jr = jordan_form(A);
    const auto& bl = jr.spec.blocks;
    int which = -1;
    for (std::size_t i = 0; i + 1 < bl.size(); ++i)
        if (f.eq(bl[i].eigenvalue, bl[i + 1].eigenvalue)) {
            which = static_cast<int>(i);
            break;
        }
    require(which >= 0, Err::Internal, "non-minimal split matrix must repeat an eigenvalue");
    int n = A.rows();
    std::vector<int> offs(bl.size() + 1, 0);
    for (std::size_t i = 0; i < bl.size(); ++i) offs[i + 1] = offs[i] + bl[i].size;
    // Relabeling permutation: the two chosen cells first, the rest in order.
    std::vector<int> order;
    order.reserve(n);
    for (int t = offs[which]; t < offs[which + 2]; ++t) order.push_back(t);
    for (int t = 0; t < n; ++t)
        if (t < offs[which] || t >= offs[which + 2]) order.push_back(t);
    Matrix Pm(f, n, n);
    for (int t = 0; t < n; ++t) Pm.set(order[t], t, f.one());
    Matrix U = jr.T * Pm;
    auto Uinv = U.inverse();
    require(Uinv.has_value(), Err::Internal, "conjugation must stay invertible");
    return CornerWitnessContext{A, U, *Uinv, bl[which].eigenvalue, bl[which].size,
                                bl[which + 1].size};
}

Matrix lemma4_witness(const CornerWitnessContext& ctx, const Matrix& R) {
    const Field& f = ctx.A.field();
    require(R.field().same(f), Err::FieldMismatch, "R lives in the wrong field");
    require(R.rows() == ctx.A.rows() && R.cols() == ctx.A.cols(), Err::ShapeMismatch,
            "R must match A's shape");
    auto [u, v] = rank_one_factors(R);
    std::vector<Fe> up = ctx.Uinv.apply(u);
    std::vector<Fe> vp = ctx.U.apply_transposed(v);
    int k = ctx.k1 + ctx.k2, n = ctx.A.rows();
    std::vector<Fe> a(up.begin(), up.begin() + k), b(vp.begin(), vp.begin() + k);
    Matrix Zhat = lemma3_solve(f, ctx.k1, ctx.k2, a, b);
    Matrix Zp = (n == k) ? Zhat : direct_sum(Zhat, Matrix::zero(f, n - k, n - k));
    Matrix Z = ctx.U * Zp * ctx.Uinv;
    require(!Z.is_scalar(), Err::Internal, "witness must be non-scalar");
    require(Z * ctx.A == ctx.A * Z, Err::Internal, "witness must commute with A");
    require(Z * R == R * Z, Err::Internal, "witness must commute with R");
    return Z;
}

Matrix lemma4_witness(const Matrix& A, const Matrix& R) {
    return lemma4_witness(corner_witness_context(A), R);
}

bool lemma4_witness_exists(const CornerWitnessContext& ctx, const std::vector<Fe>& u,
                           const std::vector<Fe>& v) {
    const Field& f = ctx.A.field();
    int k = ctx.k1 + ctx.k2, n = ctx.A.rows();
    std::vector<Fe> up = ctx.Uinv.apply(u);
    std::vector<Fe> vp = ctx.U.apply_transposed(v);
    std::vector<Fe> a(up.begin(), up.begin() + k), b(vp.begin(), vp.begin() + k);
    Matrix M = lemma3_system(f, ctx.k1, ctx.k2, a, b);
    if (!f.is_zero(M.det())) return false;
    auto ker = M.nullspace();
    if (n > k) return !ker.empty();
    for (const auto& xv : ker)
        if (!corner_from_solution(f, ctx.k1, ctx.k2, xv).is_scalar()) return true;
    return false;
}

namespace {

// The square-zero normal form of rank k: transposed 2-cells, the alternating
// column z glued to them, and the all-ones column s on the middle block.
Matrix square_zero_normal(const Field& f, int n, int k) {
    Matrix A(f, n, n);
    for (int i = 0; i < k - 1; ++i) {
        A.set(2 * i + 1, 2 * i, f.one());
        A.set(2 * i + 1, n - 1, f.one());
    }
    for (int r = 2 * k - 2; r <= n - 2; ++r) A.set(r, n - 1, f.one());
    return A;
}

// [[Id_k, W],[0, 0]] with W carrying an anti-diagonal and the row-k corners.
Matrix idempotent_normal(const Field& f, int n, int k) {
    Matrix A(f, n, n);
    for (int i = 0; i < k; ++i) A.set(i, i, f.one());
    int m = n - k;
    for (int i = 1; i <= m; ++i) A.set(i - 1, k + m - i, f.one());
    A.set(k - 1, k, f.one());
    A.set(k - 1, k + m - 1, f.one());
    return A;
}

// Conjugator Q with src = Q dst Q^-1, through their shared Jordan form.
Matrix align_by_jordan(const Matrix& src, const Matrix& dst) {
    JordanResult js = jordan_form(src), jd = jordan_form(dst);
    require(js.J == jd.J, Err::Internal, "normal form mismatch");
    Matrix Q = js.T * *jd.T.inverse();
    require(Q * dst == src * Q, Err::Internal, "alignment conjugation failed");
    return Q;
}

Matrix witness_square_zero(const Matrix& N) {
    const Field& f = N.field();
    int n = N.rows(), k = N.rank();
    require(k >= 2, Err::WrongClass, "the square-zero branch needs rank at least 2");
    if (f.is_finite())
        require(f.order() >= n - 2, Err::FieldTooSmall,
                "need n - 3 distinct nonzero diagonal entries");
    Matrix A0 = square_zero_normal(f, n, k);
    require((A0 * A0).is_zero() && A0.rank() == k, Err::Internal,
            "normal form must be square-zero of rank k");
    Matrix Q = align_by_jordan(N, A0);
    Matrix X0(f, n, n);
    X0.set(0, 1, f.one());
    for (int i = 3; i < n; ++i) X0.set(i, i, f.element_at(i - 2));
    return Q * X0 * *Q.inverse();
}

Matrix witness_idempotent(const Matrix& E) {
    const Field& f = E.field();
    int n = E.rows(), k = E.rank();
    require(k >= 2 && k <= n - 2, Err::WrongClass, "idempotent rank must lie in [2, n-2]");
    Matrix Ew = E;
    if (2 * k < n) {
        // Id - E has the same centralizer and the mirrored rank.
        Ew = Matrix::identity(f, n) - E;
        k = n - k;
    }
    Matrix A0 = idempotent_normal(f, n, k);
    require(A0 * A0 == A0 && A0.rank() == k, Err::Internal,
            "normal form must be an idempotent of rank k");
    Matrix Q = align_by_jordan(Ew, A0);
    Matrix X0(f, n, n);
    for (int i = 0; i + 1 < k; ++i) X0.set(i, i + 1, f.one());
    for (int i = k + 1; i < n; ++i) X0.set(i, i, f.one());
    return Q * X0 * *Q.inverse();
}

Matrix witness_cube_zero(const Matrix& A) {
    const Field& f = A.field();
    int n = A.rows();
    JordanResult jr = jordan_form(A);
    Matrix X0(f, n, n);
    X0.set(0, 0, f.one());
    for (int i = 2; i + 1 < n; ++i) X0.set(i, i + 1, f.one());
    return jr.T * X0 * *jr.T.inverse();
}

} // namespace

Matrix lemma7_witness(const Matrix& A) {
    const Field& f = A.field();
    require(A.is_square(), Err::ShapeMismatch, "A must be square");
    int n = A.rows();
    require(n >= 4, Err::BadDimension, "the obstruction needs n >= 4");
    require(!A.is_scalar(), Err::ScalarInput, "A must be non-scalar");

    Matrix A2 = A * A;
    std::optional<Matrix> X;
    if (A2.is_zero()) {
        X = witness_square_zero(A);
    } else if (A2 == A) {
        X = witness_idempotent(A);
    } else if ((A2 * A).is_zero() && A2.rank() == 1) {
        X = witness_cube_zero(A);
    } else {
        Poly mp = A.min_poly();
        require(mp.degree() == 2, Err::WrongClass,
                "A must be maximal (after affine normalization: square-zero or "
                "idempotent), or cube-zero with rank-one square");
        auto roots = poly_roots_in_field(mp);
        int mult = 0;
        for (const auto& r : roots) mult += r.second;
        require(mult == 2, Err::NonSplitSpectrum,
                "the degree-2 minimal polynomial does not split");
        if (roots.size() == 1) {
            X = witness_square_zero(A - Matrix::scalar(f, n, roots[0].first));
        } else {
            Fe lam = roots[0].first, mu = roots[1].first;
            Matrix E = (A - Matrix::scalar(f, n, lam)).scale(f.inv(f.sub(mu, lam)));
            require(E * E == E, Err::Internal, "affine normalization must be idempotent");
            X = witness_idempotent(E);
        }
    }
    require(A * *X != *X * A, Err::Internal, "witness must not commute with A");
    require(!is_minimal(*X), Err::Internal, "witness must be non-minimal");
    auto meet = centralizer(A).space.intersect(centralizer(*X).space);
    require(meet.dim() == 1, Err::Internal, "intersection must be scalars only");
    return *X;
}

Fe FieldLift::map(const Fe& a) const {
    src.check(a);
    if (src.k() == 1) return dst.from_int(static_cast<long long>(std::get<std::uint64_t>(a)));
    const auto& cs = std::get<std::vector<std::uint64_t>>(a);
    Fe acc = dst.zero();
    for (std::size_t i = cs.size(); i-- > 0;)
        acc = dst.add(dst.mul(acc, root), dst.from_int(static_cast<long long>(cs[i])));
    return acc;
}

Matrix FieldLift::map(const Matrix& m) const {
    Matrix out(dst, m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out.set(i, j, map(m.at(i, j)));
    return out;
}

FieldLift lift_field(const Field& f, unsigned m) {
    require(f.is_finite(), Err::InfiniteField, "only finite fields can be lifted");
    require(m >= 1, Err::BadParameters, "extension degree must be positive");
    std::uint64_t p = f.p();
    unsigned k = f.k();
    long double size = 1;
    for (unsigned i = 0; i < k * m; ++i) {
        size *= static_cast<long double>(p);
        require(size <= static_cast<long double>(1 << 20), Err::TooLarge,
                "extension exceeds the desk-scale bound");
    }
    Field dst = Field::finite(p, k * m);
    FieldLift lift{f, dst, dst.zero()};
    if (k == 1) return lift;
    // The source generator maps to a root of the source modulus; the first
    // root in canonical order keeps the embedding deterministic.
    std::vector<Fe> mod_coeffs;
    mod_coeffs.reserve(f.modulus().size());
    for (std::uint64_t c : f.modulus()) mod_coeffs.push_back(dst.from_int(static_cast<long long>(c)));
    Poly mod(dst, std::move(mod_coeffs));
    std::uint64_t q = dst.order().convert_to<std::uint64_t>();
    for (std::uint64_t i = 0; i < q; ++i) {
        Fe cand = dst.element_at(i);
        if (dst.is_zero(mod.eval(cand))) {
            lift.root = cand;
            return lift;
        }
    }
    fail(Err::Internal, "subfield modulus must have a root in the extension");
}

InterpolationResult lemma10_interpolate(const Matrix& B, const Matrix& X, const Matrix& Y) {
    const Field& f = B.field();
    int n = B.rows();
    require(B.is_square() && X.is_square() && Y.is_square(), Err::ShapeMismatch,
            "inputs must be square");
    require(X.rows() == n && Y.rows() == n, Err::ShapeMismatch, "inputs must share the shape");
    require(X.field().same(f) && Y.field().same(f), Err::FieldMismatch,
            "inputs must share the field");
    require(!X.is_scalar() && !Y.is_scalar(), Err::ScalarInput, "X and Y must be non-scalar");
    require(!B.is_scalar() && is_minimal(B) && is_semisimple(B), Err::NotSemisimpleMinimal,
            "B must be minimal and semisimple");
    require(B * X == X * B, Err::BadParameters, "X must commute with B");
    require(X * Y == Y * X, Err::BadParameters, "Y must commute with X");

    JordanResult jb = jordan_form(B);
    Matrix T = jb.T;
    Matrix Xd = *T.inverse() * X * T;
    require(is_diagonal(Xd), Err::Internal, "X must diagonalize together with B");
    // Group equal diagonal values of X; the grouping permutation keeps B
    // diagonal and turns X into a block-scalar matrix.
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](int i, int j) {
        return f.cmp(Xd.at(i, i), Xd.at(j, j)) < 0;
    });
    Matrix Pm(f, n, n);
    for (int t = 0; t < n; ++t) Pm.set(idx[t], t, f.one());
    Matrix U = T * Pm;
    Matrix Uinv = *U.inverse();
    Matrix Xg = Uinv * X * U;
    Matrix Yg = Uinv * Y * U;
    require(is_diagonal(Xg), Err::Internal, "grouped X must stay diagonal");

    std::vector<std::pair<int, int>> blocks; // offset, size
    int start = 0;
    for (int i = 1; i <= n; ++i)
        if (i == n || !f.eq(Xg.at(i, i), Xg.at(start, start))) {
            blocks.emplace_back(start, i - start);
            start = i;
        }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            bool same_block = false;
            for (const auto& [off, sz] : blocks)
                if (i >= off && i < off + sz && j >= off && j < off + sz) same_block = true;
            if (!same_block)
                require(f.is_zero(Yg.at(i, j)), Err::Internal,
                        "Y must split along the eigenspaces of X");
        }

    // Jordanize Y block by block; the block-diagonal S fixes X.
    std::optional<Matrix> S;
    std::vector<std::pair<int, Fe>> cells; // size, mu (unused beyond count)
    for (const auto& [off, sz] : blocks) {
        std::vector<int> range(sz);
        std::iota(range.begin(), range.end(), off);
        JordanResult jy = jordan_form(Yg.submatrix(range, range));
        for (const auto& cell : jy.spec.blocks) cells.emplace_back(cell.size, cell.eigenvalue);
        S = S ? direct_sum(*S, jy.T) : jy.T;
    }
    int s = static_cast<int>(cells.size());

    if (f.is_finite() && f.order() < s + 2) {
        // Not enough room for s distinct cell values plus the re-picks;
        // lift everything into an extension and redo the computation there.
        unsigned m = 2;
        while (true) {
            Int cap = 1;
            for (unsigned i = 0; i < f.k() * m; ++i) cap *= f.p();
            if (cap >= s + 2) break;
            ++m;
        }
        FieldLift lift = lift_field(f, m);
        InterpolationResult out =
            lemma10_interpolate(lift.map(B), lift.map(X), lift.map(Y));
        out.lifted = true;
        return out;
    }

    Matrix W = U * *S;
    Matrix Winv = *W.inverse();
    for (std::uint64_t t = 0;; ++t) {
        require(t < 3, Err::Internal, "three shifted assignments must include a valid one");
        std::vector<Fe> nus(s);
        for (int i = 0; i < s; ++i) nus[i] = f.element_at(t + i);
        std::optional<Matrix> Jm;
        for (int i = 0; i < s; ++i) {
            Matrix cell = jordan_cell(f, cells[i].first, nus[i]);
            Jm = Jm ? direct_sum(*Jm, cell) : cell;
        }
        Matrix M = W * *Jm * Winv;
        if (M == X || M == Y) continue;
        require(is_minimal(M), Err::Internal, "distinct cell values must give a minimal M");
        require(M * X == X * M, Err::Internal, "M must commute with X");
        require(M * Y == Y * M, Err::Internal, "M must commute with Y");
        return InterpolationResult{std::move(M), B, X, Y, false, std::move(nus)};
    }
}

ObstructionPair lemma11_witness(const Matrix& B) {
    const Field& f = B.field();
    require(B.is_square(), Err::ShapeMismatch, "B must be square");
    int n = B.rows();
    require(n >= 3, Err::BadDimension, "the obstruction needs n >= 3");
    require(!B.is_scalar(), Err::ScalarInput, "B must be non-scalar");

    // Read off the Jordan layout; anything off-pattern is rejected.
    std::vector<int> sizes;
    int run = 1;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (j == i || j == i + 1) continue;
            require(f.is_zero(B.at(i, j)), Err::NotJordan,
                    "off-diagonal entries break the Jordan layout");
        }
    for (int i = 0; i + 1 < n; ++i) {
        const Fe& sup = B.at(i, i + 1);
        if (f.is_one(sup)) {
            require(f.eq(B.at(i, i), B.at(i + 1, i + 1)), Err::NotJordan,
                    "a Jordan cell must repeat its diagonal value");
            ++run;
        } else {
            require(f.is_zero(sup), Err::NotJordan, "superdiagonal entries must be 0 or 1");
            sizes.push_back(run);
            run = 1;
        }
    }
    sizes.push_back(run);

    bool has_big_cell = false;
    for (int s : sizes) has_big_cell = has_big_cell || s >= 2;
    require(has_big_cell, Err::SemisimpleInput,
            "B is diagonal; the construction needs a nontrivial Jordan cell");
    require(is_minimal(B), Err::MinimalInput, "B must be minimal");
    int n1 = sizes.front();
    require(n1 >= 2, Err::NotJordan,
            "the first Jordan cell must have size >= 2; conjugate it to the front first");

    int kk = (n1 == 2) ? 3 : 2; // least index outside {1, n1}
    Matrix X = Matrix::unit(f, n, 0, n1 - 1);
    Matrix Y = Matrix::unit(f, n, 0, kk - 1);
    require(X * Y == Y * X, Err::Internal, "X and Y must commute");
    require(X * B == B * X, Err::Internal, "X must commute with B");

    ObstructionPair out{X, Y, std::nullopt};
    if (!f.is_finite()) return out;

    auto meet = centralizer(X).space.intersect(centralizer(Y).space);
    Int space = 1;
    for (int i = 0; i < meet.dim(); ++i) {
        space *= f.order();
        if (space > enumeration_budget()) return out;
    }
    auto basis = meet.basis_matrices();
    std::uint64_t q = f.order().convert_to<std::uint64_t>();
    std::vector<std::uint64_t> digits(basis.size(), 0);
    Int checked = 0;
    bool done = basis.empty();
    while (!done) {
        Matrix M = Matrix::zero(f, n, n);
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (digits[i] != 0) M = M + basis[i].scale(f.element_at(digits[i]));
        if (!M.is_scalar()) {
            ++checked;
            require(!is_minimal(M), Err::Internal,
                    "a minimal matrix appeared in the obstruction intersection");
        }
        done = true;
        for (std::size_t i = basis.size(); i-- > 0;) {
            if (++digits[i] < q) {
                done = false;
                break;
            }
            digits[i] = 0;
        }
    }
    out.searched = checked;
    return out;
}

} // namespace cg
