#include "commgraph/canonical.hpp"

#include <algorithm>
#include <sstream>

namespace cg {

int JordanSpec::total_size() const {
    int n = 0;
    for (const auto& b : blocks) n += b.size;
    return n;
}

void JordanSpec::canonicalize(const Field& f) {
    std::stable_sort(blocks.begin(), blocks.end(), [&](const JordanBlockSpec& a, const JordanBlockSpec& b) {
        int c = f.cmp(a.eigenvalue, b.eigenvalue);
        if (c != 0) return c < 0;
        return a.size > b.size;
    });
}

Matrix jordan_cell(const Field& f, int k, const Fe& lambda) {
    require(k >= 1, Err::BadParameters, "cell size must be >= 1");
    Matrix m(f, k, k);
    for (int i = 0; i < k; ++i) {
        m.set(i, i, lambda);
        if (i + 1 < k) m.set(i, i + 1, f.one());
    }
    return m;
}

Matrix build_from_spec(const Field& f, const JordanSpec& spec) {
    require(!spec.blocks.empty(), Err::BadParameters, "empty block list");
    Matrix m(f, 0, 0);
    for (const auto& b : spec.blocks) m = direct_sum(m, jordan_cell(f, b.size, b.eigenvalue));
    return m;
}

Matrix companion(const Poly& f) {
    require(f.is_monic(), Err::NotMonic, "companion matrix needs a monic polynomial");
    int n = f.degree();
    require(n >= 1, Err::DegreeMismatch, "companion matrix needs degree >= 1");
    const Field& F = f.field();
    Matrix m(F, n, n);
    for (int i = 0; i + 1 < n; ++i) m.set(i + 1, i, F.one());
    for (int i = 0; i < n; ++i) m.set(i, n - 1, F.neg(f.coeff(i)));
    return m;
}

namespace {

// Incremental row space with independence test over F^n.
class SpanTracker {
  public:
    SpanTracker(const Field& f, int n) : f_(f), n_(n) {}

    bool contains(const std::vector<Fe>& v) const {
        std::vector<Fe> w = reduce(v);
        for (const Fe& x : w) {
            if (!f_.is_zero(x)) return false;
        }
        return true;
    }

    // Returns false if v was already in the span, true after adding it.
    bool add(const std::vector<Fe>& v) {
        std::vector<Fe> w = reduce(v);
        int p = -1;
        for (int j = 0; j < n_; ++j) {
            if (!f_.is_zero(w[j])) { p = j; break; }
        }
        if (p < 0) return false;
        Fe inv = f_.inv(w[p]);
        for (int j = p; j < n_; ++j) w[j] = f_.mul(w[j], inv);
        rows_.push_back(std::move(w));
        pivots_.push_back(p);
        return true;
    }

    int dim() const { return (int)rows_.size(); }

  private:
    const Field& f_;
    int n_;
    std::vector<std::vector<Fe>> rows_;
    std::vector<int> pivots_;

    std::vector<Fe> reduce(std::vector<Fe> v) const {
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            Fe c = v[pivots_[i]];
            if (f_.is_zero(c)) continue;
            for (int j = pivots_[i]; j < n_; ++j) v[j] = f_.sub(v[j], f_.mul(c, rows_[i][j]));
        }
        return v;
    }
};

} // namespace

JordanResult jordan_form(const Matrix& A) {
    require(A.is_square(), Err::ShapeMismatch, "Jordan form of non-square matrix");
    const Field& F = A.field();
    int n = A.rows();
    require(n >= 1, Err::BadDimension, "Jordan form needs n >= 1");
    Poly cp = A.char_poly();
    auto roots = poly_roots_in_field(cp);
    int mult_sum = 0;
    for (auto& [r, m] : roots) mult_sum += m;
    if (mult_sum != n) {
        std::ostringstream os;
        os << "characteristic polynomial does not split; factor degrees:";
        for (int d : poly_factor_degrees(cp)) os << " " << d;
        fail(Err::NonSplitSpectrum, os.str());
    }

    JordanSpec spec;
    std::vector<std::pair<std::vector<Fe>, int>> chains; // (top vector, length)
    for (auto& [lambda, mult] : roots) {
        Matrix N = A - Matrix::scalar(F, n, lambda);
        // Kernel filtration K_1 subset K_2 subset ... until dimensions settle.
        std::vector<std::vector<std::vector<Fe>>> kernels; // kernels[j-1] = basis of ker N^(j)
        Matrix Npow = N;
        std::vector<int> dims;
        while (true) {
            auto ns = Npow.nullspace();
            kernels.push_back(ns);
            dims.push_back((int)ns.size());
            if ((int)ns.size() == mult) break;
            require((int)kernels.size() <= n, Err::Internal, "kernel filtration failed to settle");
            Npow = Npow * N;
        }
        int s = (int)kernels.size();
        auto dim_at = [&](int j) { // dim ker N^j with j possibly out of range
            if (j <= 0) return 0;
            if (j > s) return dims[s - 1];
            return dims[j - 1];
        };
        // Column space of N, once: chain tops at level j are kernel vectors
        // independent modulo im(N) + K_{j-1} and previously chosen tops.
        std::vector<std::vector<Fe>> ncols;
        for (int j = 0; j < n; ++j) {
            std::vector<Fe> col(n);
            for (int i = 0; i < n; ++i) col[i] = N.at(i, j);
            ncols.push_back(std::move(col));
        }
        std::vector<std::pair<std::vector<Fe>, int>> local;
        for (int j = s; j >= 1; --j) {
            int want = 2 * dim_at(j) - dim_at(j - 1) - dim_at(j + 1);
            if (want == 0) continue;
            // Tops at this level must be independent modulo im(N) + ker N^(j-1).
            // Level-j vectors of longer chains already lie in im(N), and
            // accepted same-level tops enter the span as they are chosen.
            SpanTracker span(F, n);
            for (const auto& c : ncols) span.add(c);
            if (j >= 2) {
                for (const auto& v : kernels[j - 2]) span.add(v);
            }
            int got = 0;
            for (const auto& v : kernels[j - 1]) {
                if (got == want) break;
                if (span.add(v)) {
                    local.emplace_back(v, j);
                    ++got;
                }
            }
            require(got == want, Err::Internal, "chain top selection failed");
        }
        // Canonical block order within the eigenvalue: sizes descending,
        // selection order breaking ties (levels were processed descending).
        for (const auto& [top, len] : local) {
            chains.emplace_back(top, len);
            spec.blocks.push_back(JordanBlockSpec{lambda, len});
        }
    }

    Matrix T(F, n, n);
    int col = 0;
    int chain_idx = 0;
    for (auto& [lambda, mult] : roots) {
        (void)mult;
        Matrix N = A - Matrix::scalar(F, n, lambda);
        // Chains for this eigenvalue are contiguous in `chains`.
        while (chain_idx < (int)chains.size()) {
            // Stop at the first chain belonging to the next eigenvalue.
            if (!F.eq(spec.blocks[chain_idx].eigenvalue, lambda)) break;
            const auto& [top, len] = chains[chain_idx];
            std::vector<std::vector<Fe>> chain{top};
            for (int t = 1; t < len; ++t) chain.push_back(N.apply(chain.back()));
            // Columns ordered [N^(len-1) top, ..., N top, top].
            for (int t = len - 1; t >= 0; --t) {
                for (int i = 0; i < n; ++i) T.set(i, col, chain[t][i]);
                ++col;
            }
            ++chain_idx;
        }
    }
    require(col == n, Err::Internal, "transition matrix incomplete");

    Matrix J = build_from_spec(F, spec);
    auto [det, inv] = T.det_and_inverse();
    require(!F.is_zero(det) && inv.has_value(), Err::Internal, "transition matrix not invertible");
    require((*inv) * A * T == J, Err::Internal, "Jordan decomposition failed validation");
    return JordanResult{std::move(J), std::move(T), std::move(spec)};
}

bool is_minimal(const Matrix& A) {
    require(A.is_square(), Err::ShapeMismatch, "structure test on non-square matrix");
    require(!A.is_scalar(), Err::ScalarInput, "structure test on scalar matrix");
    return A.min_poly().degree() == A.rows();
}

bool is_maximal(const Matrix& A) {
    require(A.is_square(), Err::ShapeMismatch, "structure test on non-square matrix");
    require(!A.is_scalar(), Err::ScalarInput, "structure test on scalar matrix");
    Poly mp = A.min_poly();
    if (mp.degree() != 2) return false;
    auto roots = poly_roots_in_field(mp);
    int mult = 0;
    for (auto& [r, m] : roots) mult += m;
    return mult == 2;
}

bool is_semisimple(const Matrix& A) {
    require(A.is_square(), Err::ShapeMismatch, "structure test on non-square matrix");
    Poly mp = A.min_poly();
    auto roots = poly_roots_in_field(mp);
    int count = 0;
    for (auto& [r, m] : roots) {
        if (m > 1) return false;
        ++count;
    }
    return count == mp.degree();
}

std::optional<std::pair<Fe, Matrix>> rank_one_form(const Matrix& A) {
    require(A.is_square(), Err::ShapeMismatch, "structure test on non-square matrix");
    require(!A.is_scalar(), Err::ScalarInput, "structure test on scalar matrix");
    const Field& F = A.field();
    // rank(A - lambda I) = 1 forces det(A - lambda I) = 0, so it is enough
    // to scan eigenvalues in the field.
    for (auto& [lambda, m] : poly_roots_in_field(A.char_poly())) {
        Matrix R = A - Matrix::scalar(F, A.rows(), lambda);
        if (R.rank() == 1) return std::make_pair(lambda, std::move(R));
    }
    return std::nullopt;
}

bool is_rank_one_equivalent(const Matrix& A) { return rank_one_form(A).has_value(); }

StructureReport structure_report(const Matrix& A) {
    require(A.is_square(), Err::ShapeMismatch, "structure report of non-square matrix");
    require(!A.is_scalar(), Err::ScalarInput, "structure report of scalar matrix");
    StructureReport r;
    Poly mp = A.min_poly();
    r.min_poly_degree = mp.degree();
    r.minimal = r.min_poly_degree == A.rows();
    auto roots = poly_roots_in_field(mp);
    int mult = 0, distinct = 0;
    bool squarefree = true;
    for (auto& [root, m] : roots) {
        mult += m;
        ++distinct;
        if (m > 1) squarefree = false;
    }
    bool split = mult == mp.degree();
    r.maximal = r.min_poly_degree == 2 && split;
    r.semisimple = split && squarefree;
    r.rank_one_equiv = is_rank_one_equivalent(A);
    if (r.min_poly_degree == 2 && !split) {
        r.notes.push_back("minimal polynomial has degree 2 but is irreducible over the base "
                          "field; not classified maximal");
    }
    if (!split) {
        r.notes.push_back("minimal polynomial does not split over the base field");
    }
    return r;
}

} // namespace cg
