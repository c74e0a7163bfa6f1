#include "commgraph/subspace.hpp"

namespace cg {

MatSubspace MatSubspace::from_matrices(const Field& f, int n, const std::vector<Matrix>& mats) {
    Matrix rows(f, (int)mats.size(), n * n);
    for (std::size_t i = 0; i < mats.size(); ++i) {
        require(mats[i].field().same(f), Err::FieldMismatch, "basis matrix over wrong field");
        require(mats[i].rows() == n && mats[i].cols() == n, Err::ShapeMismatch,
                "basis matrix has wrong shape");
        const std::vector<Fe>& v = mats[i].entries();
        for (int j = 0; j < n * n; ++j) rows.set((int)i, j, v[j]);
    }
    return from_vec_rows(f, n, rows);
}

MatSubspace MatSubspace::from_vec_rows(const Field& f, int n, const Matrix& vecs) {
    require(vecs.cols() == n * n, Err::AmbientMismatch, "vector length must be n^2");
    Matrix::Rref rr = vecs.rref_with_transform();
    Matrix basis(f, rr.rank, n * n);
    for (int i = 0; i < rr.rank; ++i) {
        for (int j = 0; j < n * n; ++j) basis.set(i, j, rr.R.at(i, j));
    }
    return MatSubspace(f, n, std::move(basis));
}

std::vector<Matrix> MatSubspace::basis_matrices() const {
    std::vector<Matrix> out;
    out.reserve(dim());
    for (int i = 0; i < dim(); ++i) {
        std::vector<Fe> v(n_ * n_);
        for (int j = 0; j < n_ * n_; ++j) v[j] = basis_.at(i, j);
        out.push_back(Matrix::from_vec(f_, n_, n_, v));
    }
    return out;
}

std::optional<std::vector<Fe>> MatSubspace::coordinates(const Matrix& m) const {
    require(m.rows() == n_ && m.cols() == n_, Err::AmbientMismatch, "matrix has wrong shape");
    require(m.field().same(f_), Err::FieldMismatch, "matrix over wrong field");
    // Reduce vec(m) against the RREF basis; leftover nonzero -> not contained.
    std::vector<Fe> v = m.vectorize();
    std::vector<Fe> coords(dim(), f_.zero());
    for (int i = 0; i < dim(); ++i) {
        // Pivot column of row i is its first nonzero entry.
        int pc = -1;
        for (int j = 0; j < n_ * n_; ++j) {
            if (!f_.is_zero(basis_.at(i, j))) { pc = j; break; }
        }
        if (pc < 0) continue;
        Fe c = v[pc];
        if (f_.is_zero(c)) continue;
        coords[i] = c;
        for (int j = pc; j < n_ * n_; ++j) v[j] = f_.sub(v[j], f_.mul(c, basis_.at(i, j)));
    }
    for (const Fe& x : v) {
        if (!f_.is_zero(x)) return std::nullopt;
    }
    return coords;
}

bool MatSubspace::contains(const Matrix& m) const { return coordinates(m).has_value(); }

MatSubspace MatSubspace::intersect(const MatSubspace& other) const {
    require(n_ == other.n_, Err::AmbientMismatch, "subspaces of different ambient spaces");
    require(f_.same(other.f_), Err::FieldMismatch, "subspaces over different fields");
    int du = dim(), dv = other.dim();
    if (du == 0 || dv == 0) return MatSubspace(f_, n_, Matrix(f_, 0, n_ * n_));
    // Kernel method: (c, d) with c^tr U + d^tr V = 0 gives c^tr U in U cap V.
    Matrix stacked(f_, du + dv, n_ * n_);
    for (int i = 0; i < du; ++i) {
        for (int j = 0; j < n_ * n_; ++j) stacked.set(i, j, basis_.at(i, j));
    }
    for (int i = 0; i < dv; ++i) {
        for (int j = 0; j < n_ * n_; ++j) stacked.set(du + i, j, other.basis_.at(i, j));
    }
    auto kernel = stacked.transpose().nullspace();
    Matrix rows(f_, (int)kernel.size(), n_ * n_);
    for (std::size_t t = 0; t < kernel.size(); ++t) {
        for (int j = 0; j < n_ * n_; ++j) {
            Fe acc = f_.zero();
            for (int i = 0; i < du; ++i) acc = f_.add(acc, f_.mul(kernel[t][i], basis_.at(i, j)));
            rows.set((int)t, j, acc);
        }
    }
    return from_vec_rows(f_, n_, rows);
}

MatSubspace MatSubspace::conjugated(const Matrix& Sinv, const Matrix& S) const {
    std::vector<Matrix> mats = basis_matrices();
    for (Matrix& m : mats) m = Sinv * m * S;
    return from_matrices(f_, n_, mats);
}

bool operator==(const MatSubspace& a, const MatSubspace& b) {
    return a.n_ == b.n_ && a.f_.same(b.f_) && a.basis_ == b.basis_;
}

std::string MatSubspace::signature() const {
    std::string s = std::to_string(dim()) + ";";
    for (int i = 0; i < dim(); ++i) {
        for (int j = 0; j < n_ * n_; ++j) {
            s += f_.to_string(basis_.at(i, j));
            s += ",";
        }
        s += "|";
    }
    return s;
}

MatSubspace subspace_intersect(const MatSubspace& a, const MatSubspace& b) {
    return a.intersect(b);
}

} // namespace cg
