#include "commgraph/centralizer.hpp"

namespace cg {

namespace {

MatSubspace kernel_as_subspace(const Field& f, int n, const Matrix& op) {
    auto ns = op.nullspace();
    Matrix rows(f, (int)ns.size(), n * n);
    for (std::size_t i = 0; i < ns.size(); ++i) {
        for (int j = 0; j < n * n; ++j) rows.set((int)i, j, ns[i][j]);
    }
    return MatSubspace::from_vec_rows(f, n, rows);
}

} // namespace

CentralizerBasis centralizer(const Matrix& A) {
    require(A.is_square(), Err::ShapeMismatch, "centralizer of non-square matrix");
    return CentralizerBasis{{A}, kernel_as_subspace(A.field(), A.rows(), A.sylvester_operator())};
}

CentralizerBasis centralizer_of_set(const std::vector<Matrix>& As) {
    require(!As.empty(), Err::BadParameters, "empty subject set");
    const Field& f = As[0].field();
    int n = As[0].rows();
    for (const Matrix& A : As) {
        require(A.is_square(), Err::ShapeMismatch, "centralizer of non-square matrix");
        require(A.rows() == n, Err::ShapeMismatch, "subjects of different sizes");
        require(A.field().same(f), Err::FieldMismatch, "subjects over different fields");
    }
    // Stack the commutation operators; the kernel is the joint centralizer.
    Matrix stacked(f, (int)As.size() * n * n, n * n);
    for (std::size_t t = 0; t < As.size(); ++t) {
        Matrix L = As[t].sylvester_operator();
        for (int i = 0; i < n * n; ++i) {
            for (int j = 0; j < n * n; ++j) stacked.set((int)t * n * n + i, j, L.at(i, j));
        }
    }
    return CentralizerBasis{As, kernel_as_subspace(f, n, stacked)};
}

bool contains_nonscalar(const MatSubspace& S) {
    require(S.contains(Matrix::identity(S.field(), S.n())), Err::IdentityMissing,
            "space does not contain the identity");
    return S.dim() >= 2;
}

std::optional<Matrix> first_nonscalar(const MatSubspace& S) {
    for (const Matrix& m : S.basis_matrices()) {
        if (!m.is_scalar()) return m;
    }
    return std::nullopt;
}

MatSubspace poly_algebra(const Matrix& A) {
    require(A.is_square(), Err::ShapeMismatch, "polynomial algebra of non-square matrix");
    int d = A.min_poly().degree();
    std::vector<Matrix> powers;
    Matrix p = Matrix::identity(A.field(), A.rows());
    for (int i = 0; i < d; ++i) {
        powers.push_back(p);
        p = p * A;
    }
    return MatSubspace::from_matrices(A.field(), A.rows(), powers);
}

bool equivalent(const Matrix& A, const Matrix& B) {
    require(!A.is_scalar() && !B.is_scalar(), Err::ScalarInput, "equivalence needs non-scalar inputs");
    return centralizer(A).space == centralizer(B).space;
}

bool precedes(const Matrix& A, const Matrix& B) {
    require(!A.is_scalar() && !B.is_scalar(), Err::ScalarInput, "preorder needs non-scalar inputs");
    require(A.rows() == B.rows() && A.field().same(B.field()), Err::ShapeMismatch,
            "preorder needs same-size matrices over one field");
    for (const Matrix& X : centralizer(A).space.basis_matrices()) {
        if (X * B != B * X) return false;
    }
    return true;
}

bool double_centralizer_check(const Matrix& A) {
    CentralizerBasis c = centralizer(A);
    MatSubspace cc = centralizer_of_set(c.space.basis_matrices()).space;
    return cc == poly_algebra(A);
}

} // namespace cg
