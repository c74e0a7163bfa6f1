#include "commgraph/matrix.hpp"

#include <algorithm>

namespace cg {

namespace {

void check_same_field(const Matrix& a, const Matrix& b) {
    require(a.field().same(b.field()), Err::FieldMismatch, "matrices over different fields");
}

} // namespace

Matrix::Matrix(Field f, int rows, int cols) : f_(std::move(f)), r_(rows), c_(cols) {
    require(rows >= 0 && cols >= 0, Err::ShapeMismatch, "negative dimensions");
    e_.assign((std::size_t)rows * cols, f_.zero());
}

Matrix Matrix::identity(const Field& f, int n) {
    Matrix m(f, n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, f.one());
    return m;
}

Matrix Matrix::zero(const Field& f, int rows, int cols) { return Matrix(f, rows, cols); }

Matrix Matrix::unit(const Field& f, int n, int i, int j) {
    Matrix m(f, n, n);
    m.set(i, j, f.one());
    return m;
}

Matrix Matrix::scalar(const Field& f, int n, const Fe& a) {
    Matrix m(f, n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, a);
    return m;
}

Matrix Matrix::from_entries(const Field& f, int rows, int cols, std::vector<Fe> entries) {
    require((std::size_t)rows * cols == entries.size(), Err::ShapeMismatch,
            "entry count does not match dimensions");
    Matrix m(f, rows, cols);
    for (const Fe& x : entries) f.check(x);
    m.e_ = std::move(entries);
    return m;
}

Matrix Matrix::diagonal(const Field& f, const std::vector<Fe>& diag) {
    Matrix m(f, (int)diag.size(), (int)diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m.set((int)i, (int)i, diag[i]);
    return m;
}

Matrix Matrix::outer(const Field& f, const std::vector<Fe>& col, const std::vector<Fe>& row) {
    Matrix m(f, (int)col.size(), (int)row.size());
    for (std::size_t i = 0; i < col.size(); ++i) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            m.set((int)i, (int)j, f.mul(col[i], row[j]));
        }
    }
    return m;
}

void Matrix::set(int i, int j, Fe v) {
    f_.check(v);
    e_[(std::size_t)i * c_ + j] = std::move(v);
}

bool Matrix::is_zero() const {
    for (const Fe& x : e_) {
        if (!f_.is_zero(x)) return false;
    }
    return true;
}

bool Matrix::is_identity() const {
    if (!is_square()) return false;
    return *this == identity(f_, r_);
}

bool Matrix::is_scalar() const {
    if (!is_square() || r_ == 0) return false;
    const Fe& d = at(0, 0);
    for (int i = 0; i < r_; ++i) {
        for (int j = 0; j < c_; ++j) {
            if (i == j ? !f_.eq(at(i, j), d) : !f_.is_zero(at(i, j))) return false;
        }
    }
    return true;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    check_same_field(a, b);
    require(a.r_ == b.r_ && a.c_ == b.c_, Err::ShapeMismatch, "addition shape mismatch");
    Matrix m(a.f_, a.r_, a.c_);
    for (std::size_t i = 0; i < a.e_.size(); ++i) m.e_[i] = a.f_.add(a.e_[i], b.e_[i]);
    return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    check_same_field(a, b);
    require(a.r_ == b.r_ && a.c_ == b.c_, Err::ShapeMismatch, "subtraction shape mismatch");
    Matrix m(a.f_, a.r_, a.c_);
    for (std::size_t i = 0; i < a.e_.size(); ++i) m.e_[i] = a.f_.sub(a.e_[i], b.e_[i]);
    return m;
}

Matrix Matrix::operator-() const {
    Matrix m(f_, r_, c_);
    for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] = f_.neg(e_[i]);
    return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    check_same_field(a, b);
    require(a.c_ == b.r_, Err::ShapeMismatch, "product shape mismatch");
    Matrix m(a.f_, a.r_, b.c_);
    for (int i = 0; i < a.r_; ++i) {
        for (int k = 0; k < a.c_; ++k) {
            const Fe& aik = a.at(i, k);
            if (a.f_.is_zero(aik)) continue;
            for (int j = 0; j < b.c_; ++j) {
                const Fe& bkj = b.at(k, j);
                if (a.f_.is_zero(bkj)) continue;
                m.e_[(std::size_t)i * m.c_ + j] =
                    a.f_.add(m.e_[(std::size_t)i * m.c_ + j], a.f_.mul(aik, bkj));
            }
        }
    }
    return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
    if (!a.f_.same(b.f_) || a.r_ != b.r_ || a.c_ != b.c_) return false;
    for (std::size_t i = 0; i < a.e_.size(); ++i) {
        if (!a.f_.eq(a.e_[i], b.e_[i])) return false;
    }
    return true;
}

Matrix Matrix::scale(const Fe& a) const {
    Matrix m(f_, r_, c_);
    for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] = f_.mul(e_[i], a);
    return m;
}

Matrix Matrix::transpose() const {
    Matrix m(f_, c_, r_);
    for (int i = 0; i < r_; ++i) {
        for (int j = 0; j < c_; ++j) m.set(j, i, at(i, j));
    }
    return m;
}

Matrix Matrix::pow(std::uint64_t e) const {
    require(is_square(), Err::ShapeMismatch, "power of non-square matrix");
    Matrix r = identity(f_, r_);
    Matrix base = *this;
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

Fe Matrix::trace() const {
    require(is_square(), Err::ShapeMismatch, "trace of non-square matrix");
    Fe t = f_.zero();
    for (int i = 0; i < r_; ++i) t = f_.add(t, at(i, i));
    return t;
}

std::vector<Fe> Matrix::apply(const std::vector<Fe>& v) const {
    require((int)v.size() == c_, Err::ShapeMismatch, "vector length mismatch");
    std::vector<Fe> out(r_, f_.zero());
    for (int i = 0; i < r_; ++i) {
        for (int j = 0; j < c_; ++j) {
            if (!f_.is_zero(at(i, j))) out[i] = f_.add(out[i], f_.mul(at(i, j), v[j]));
        }
    }
    return out;
}

std::vector<Fe> Matrix::apply_transposed(const std::vector<Fe>& v) const {
    require((int)v.size() == r_, Err::ShapeMismatch, "vector length mismatch");
    std::vector<Fe> out(c_, f_.zero());
    for (int i = 0; i < r_; ++i) {
        if (f_.is_zero(v[i])) continue;
        for (int j = 0; j < c_; ++j) {
            if (!f_.is_zero(at(i, j))) out[j] = f_.add(out[j], f_.mul(at(i, j), v[i]));
        }
    }
    return out;
}

std::vector<Fe> Matrix::vectorize() const { return e_; }

Matrix Matrix::from_vec(const Field& f, int rows, int cols, const std::vector<Fe>& v) {
    return from_entries(f, rows, cols, v);
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
    check_same_field(a, b);
    Matrix m(a.f_, a.r_ + b.r_, a.c_ + b.c_);
    for (int i = 0; i < a.r_; ++i) {
        for (int j = 0; j < a.c_; ++j) m.set(i, j, a.at(i, j));
    }
    for (int i = 0; i < b.r_; ++i) {
        for (int j = 0; j < b.c_; ++j) m.set(a.r_ + i, a.c_ + j, b.at(i, j));
    }
    return m;
}

Matrix Matrix::submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const {
    Matrix m(f_, (int)rows.size(), (int)cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < cols.size(); ++j) m.set((int)i, (int)j, at(rows[i], cols[j]));
    }
    return m;
}

std::string Matrix::to_text() const {
    std::string s;
    for (int i = 0; i < r_; ++i) {
        for (int j = 0; j < c_; ++j) {
            if (j) s += " ";
            s += f_.to_string(at(i, j));
        }
        s += "\n";
    }
    return s;
}

// ---- elimination ----

Matrix::Rref Matrix::rref_generic() const {
    Matrix R = *this;
    Matrix T = identity(f_, r_);
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < c_ && row < r_; ++col) {
        int pr = -1;
        for (int i = row; i < r_; ++i) {
            if (!f_.is_zero(R.at(i, col))) { pr = i; break; }
        }
        if (pr < 0) continue;
        if (pr != row) {
            for (int j = 0; j < c_; ++j) std::swap(R.e_[(std::size_t)pr * c_ + j], R.e_[(std::size_t)row * c_ + j]);
            for (int j = 0; j < r_; ++j) std::swap(T.e_[(std::size_t)pr * r_ + j], T.e_[(std::size_t)row * r_ + j]);
        }
        Fe inv = f_.inv(R.at(row, col));
        if (!f_.is_one(R.at(row, col))) {
            for (int j = col; j < c_; ++j) R.set(row, j, f_.mul(R.at(row, j), inv));
            for (int j = 0; j < r_; ++j) T.set(row, j, f_.mul(T.at(row, j), inv));
        }
        for (int i = 0; i < r_; ++i) {
            if (i == row || f_.is_zero(R.at(i, col))) continue;
            Fe c = R.at(i, col);
            for (int j = col; j < c_; ++j) {
                R.set(i, j, f_.sub(R.at(i, j), f_.mul(c, R.at(row, j))));
            }
            for (int j = 0; j < r_; ++j) {
                T.set(i, j, f_.sub(T.at(i, j), f_.mul(c, T.at(row, j))));
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return Rref{std::move(R), row, std::move(pivots), std::move(T)};
}

// Bit-packed GF(2) elimination; same pivot rule, same outputs.
Matrix::Rref Matrix::rref_gf2() const {
    const int words = (c_ + 63) / 64;
    const int twords = (r_ + 63) / 64;
    std::vector<std::uint64_t> rows((std::size_t)r_ * words, 0);
    std::vector<std::uint64_t> trans((std::size_t)r_ * twords, 0);
    for (int i = 0; i < r_; ++i) {
        for (int j = 0; j < c_; ++j) {
            if (std::get<std::uint64_t>(at(i, j))) {
                rows[(std::size_t)i * words + j / 64] |= 1ULL << (j % 64);
            }
        }
        trans[(std::size_t)i * twords + i / 64] |= 1ULL << (i % 64);
    }
    auto bit = [&](int i, int j) {
        return (rows[(std::size_t)i * words + j / 64] >> (j % 64)) & 1;
    };
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < c_ && row < r_; ++col) {
        int pr = -1;
        for (int i = row; i < r_; ++i) {
            if (bit(i, col)) { pr = i; break; }
        }
        if (pr < 0) continue;
        if (pr != row) {
            for (int w = 0; w < words; ++w)
                std::swap(rows[(std::size_t)pr * words + w], rows[(std::size_t)row * words + w]);
            for (int w = 0; w < twords; ++w)
                std::swap(trans[(std::size_t)pr * twords + w], trans[(std::size_t)row * twords + w]);
        }
        for (int i = 0; i < r_; ++i) {
            if (i == row || !bit(i, col)) continue;
            for (int w = 0; w < words; ++w)
                rows[(std::size_t)i * words + w] ^= rows[(std::size_t)row * words + w];
            for (int w = 0; w < twords; ++w)
                trans[(std::size_t)i * twords + w] ^= trans[(std::size_t)row * twords + w];
        }
        pivots.push_back(col);
        ++row;
    }
    Matrix R(f_, r_, c_);
    Matrix T(f_, r_, r_);
    for (int i = 0; i < r_; ++i) {
        for (int j = 0; j < c_; ++j) {
            if ((rows[(std::size_t)i * words + j / 64] >> (j % 64)) & 1) R.set(i, j, f_.one());
        }
        for (int j = 0; j < r_; ++j) {
            if ((trans[(std::size_t)i * twords + j / 64] >> (j % 64)) & 1) T.set(i, j, f_.one());
        }
    }
    return Rref{std::move(R), row, std::move(pivots), std::move(T)};
}

Matrix::Rref Matrix::rref_with_transform() const {
    if (f_.is_finite() && f_.characteristic() == 2 && f_.k() == 1) return rref_gf2();
    return rref_generic();
}

Matrix Matrix::rref() const { return rref_with_transform().R; }

int Matrix::rank() const { return rref_with_transform().rank; }

std::vector<std::vector<Fe>> Matrix::nullspace() const {
    Rref rr = rref_with_transform();
    std::vector<bool> is_pivot(c_, false);
    for (int p : rr.pivots) is_pivot[p] = true;
    std::vector<std::vector<Fe>> basis;
    for (int fc = 0; fc < c_; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<Fe> v(c_, f_.zero());
        v[fc] = f_.one();
        for (int t = 0; t < rr.rank; ++t) {
            v[rr.pivots[t]] = f_.neg(rr.R.at(t, fc));
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::pair<Fe, std::optional<Matrix>> Matrix::det_and_inverse() const {
    require(is_square(), Err::ShapeMismatch, "determinant of non-square matrix");
    int n = r_;
    Matrix R = *this;
    Matrix T = identity(f_, n);
    Fe det = f_.one();
    for (int col = 0; col < n; ++col) {
        int pr = -1;
        for (int i = col; i < n; ++i) {
            if (!f_.is_zero(R.at(i, col))) { pr = i; break; }
        }
        if (pr < 0) return {f_.zero(), std::nullopt};
        if (pr != col) {
            for (int j = 0; j < n; ++j) {
                std::swap(R.e_[(std::size_t)pr * n + j], R.e_[(std::size_t)col * n + j]);
                std::swap(T.e_[(std::size_t)pr * n + j], T.e_[(std::size_t)col * n + j]);
            }
            det = f_.neg(det);
        }
        Fe piv = R.at(col, col);
        det = f_.mul(det, piv);
        Fe inv = f_.inv(piv);
        for (int j = 0; j < n; ++j) {
            R.set(col, j, f_.mul(R.at(col, j), inv));
            T.set(col, j, f_.mul(T.at(col, j), inv));
        }
        for (int i = 0; i < n; ++i) {
            if (i == col || f_.is_zero(R.at(i, col))) continue;
            Fe c = R.at(i, col);
            for (int j = 0; j < n; ++j) {
                R.set(i, j, f_.sub(R.at(i, j), f_.mul(c, R.at(col, j))));
                T.set(i, j, f_.sub(T.at(i, j), f_.mul(c, T.at(col, j))));
            }
        }
    }
    return {det, std::move(T)};
}

Fe Matrix::det() const { return det_and_inverse().first; }

std::optional<Matrix> Matrix::inverse() const { return det_and_inverse().second; }

bool Matrix::all_minors_nonzero() const {
    require(is_square(), Err::ShapeMismatch, "minors of non-square matrix");
    require(r_ <= 8, Err::TooLarge, "all-minors check limited to n <= 8");
    int n = r_;
    for (int k = 1; k <= n; ++k) {
        std::vector<int> ri(k), ci(k);
        for (int i = 0; i < k; ++i) ri[i] = i;
        auto next_comb = [&](std::vector<int>& idx) {
            int i = k - 1;
            while (i >= 0 && idx[i] == n - k + i) --i;
            if (i < 0) return false;
            ++idx[i];
            for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        };
        do {
            for (int i = 0; i < k; ++i) ci[i] = i;
            do {
                if (f_.is_zero(submatrix(ri, ci).det())) return false;
            } while (next_comb(ci));
        } while (next_comb(ri));
    }
    return true;
}

Poly Matrix::char_poly() const {
    require(is_square(), Err::ShapeMismatch, "char poly of non-square matrix");
    int n = r_;
    // Similarity reduction to upper Hessenberg with field divisions only.
    Matrix H = *this;
    for (int col = 0; col + 2 < n; ++col) {
        int pr = -1;
        for (int i = col + 1; i < n; ++i) {
            if (!f_.is_zero(H.at(i, col))) { pr = i; break; }
        }
        if (pr < 0) continue;
        if (pr != col + 1) {
            for (int j = 0; j < n; ++j)
                std::swap(H.e_[(std::size_t)pr * n + j], H.e_[(std::size_t)(col + 1) * n + j]);
            for (int i = 0; i < n; ++i)
                std::swap(H.e_[(std::size_t)i * n + pr], H.e_[(std::size_t)i * n + col + 1]);
        }
        Fe inv = f_.inv(H.at(col + 1, col));
        for (int i = col + 2; i < n; ++i) {
            if (f_.is_zero(H.at(i, col))) continue;
            Fe m = f_.mul(H.at(i, col), inv);
            // row_i -= m * row_{col+1}; col_{col+1} += m * col_i
            for (int j = 0; j < n; ++j) H.set(i, j, f_.sub(H.at(i, j), f_.mul(m, H.at(col + 1, j))));
            for (int j = 0; j < n; ++j) H.set(j, col + 1, f_.add(H.at(j, col + 1), f_.mul(m, H.at(j, i))));
        }
    }
    // p_m = (x - H[m-1][m-1]) p_{m-1}
    //       - sum_{i>=1} H[m-1-i][m-1] (prod_{j=1}^{i} H[m-j][m-j-1]) p_{m-1-i}
    std::vector<Poly> p;
    p.reserve(n + 1);
    p.push_back(Poly::constant(f_, f_.one()));
    for (int m = 1; m <= n; ++m) {
        Poly lin(f_, {f_.neg(H.at(m - 1, m - 1)), f_.one()});
        Poly acc = lin * p[m - 1];
        Fe prod = f_.one();
        for (int i = 1; i <= m - 1; ++i) {
            prod = f_.mul(prod, H.at(m - i, m - i - 1));
            if (f_.is_zero(prod)) break;
            Fe coef = f_.mul(H.at(m - 1 - i, m - 1), prod);
            if (!f_.is_zero(coef)) acc = acc - p[m - 1 - i].scale(coef);
        }
        p.push_back(std::move(acc));
    }
    return p[n];
}

Poly Matrix::min_poly() const {
    require(is_square(), Err::ShapeMismatch, "min poly of non-square matrix");
    int n = r_;
    Poly m = Poly::constant(f_, f_.one());
    for (int i = 0; i < n && m.degree() < n; ++i) {
        // Krylov sequence from e_i until first linear dependence.
        std::vector<std::vector<Fe>> kry;
        std::vector<Fe> v(n, f_.zero());
        v[i] = f_.one();
        kry.push_back(v);
        while (true) {
            v = apply(v);
            kry.push_back(v);
            // Solve [kry_0 ... kry_{j-1}] c = kry_j; dependence is guaranteed
            // by j = n. Columns of K are the Krylov vectors.
            int j = (int)kry.size() - 1;
            Matrix K(f_, n, j + 1);
            for (int col = 0; col <= j; ++col) {
                for (int row = 0; row < n; ++row) K.set(row, col, kry[col][row]);
            }
            if (K.rank() <= j) {
                auto ns = K.nullspace();
                // Canonical kernel vector with the highest nonzero index j,
                // normalized there: the annihilator of the sequence.
                const std::vector<Fe>& c = ns.back();
                Fe lead_inv = f_.inv(c[j]);
                std::vector<Fe> coeffs(j + 1, f_.zero());
                for (int t = 0; t < j; ++t) coeffs[t] = f_.mul(c[t], lead_inv);
                coeffs[j] = f_.one();
                Poly g(f_, std::move(coeffs));
                m = poly_lcm(m, g);
                break;
            }
        }
    }
    return m;
}

Matrix Matrix::sylvester_operator() const {
    require(is_square(), Err::ShapeMismatch, "commutation operator of non-square matrix");
    int n = r_;
    Matrix L(f_, n * n, n * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            int row = i * n + j;
            for (int k = 0; k < n; ++k) {
                // A X term: A[i][k] X[k][j]
                if (!f_.is_zero(at(i, k))) {
                    int col = k * n + j;
                    L.set(row, col, f_.add(L.at(row, col), at(i, k)));
                }
                // - X A term: -X[i][k] A[k][j]
                if (!f_.is_zero(at(k, j))) {
                    int col = i * n + k;
                    L.set(row, col, f_.sub(L.at(row, col), at(k, j)));
                }
            }
        }
    }
    return L;
}

} // namespace cg
