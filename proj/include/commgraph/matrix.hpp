#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "commgraph/poly.hpp"

namespace cg {

// Dense exact matrix, row-major storage. All entries live in one field;
// binary ops require identical field specs (FieldMismatch otherwise).
class Matrix {
  public:
    Matrix(Field f, int rows, int cols); // zero-filled
    static Matrix identity(const Field& f, int n);
    static Matrix zero(const Field& f, int rows, int cols);
    static Matrix unit(const Field& f, int n, int i, int j); // E_ij, 0-based
    static Matrix scalar(const Field& f, int n, const Fe& a);
    static Matrix from_entries(const Field& f, int rows, int cols, std::vector<Fe> entries);
    static Matrix diagonal(const Field& f, const std::vector<Fe>& diag);
    // Rank-one outer product: col * row^tr.
    static Matrix outer(const Field& f, const std::vector<Fe>& col, const std::vector<Fe>& row);

    const Field& field() const { return f_; }
    int rows() const { return r_; }
    int cols() const { return c_; }
    bool is_square() const { return r_ == c_; }

    const Fe& at(int i, int j) const { return e_[(std::size_t)i * c_ + j]; }
    void set(int i, int j, Fe v);
    const std::vector<Fe>& entries() const { return e_; }

    bool is_zero() const;
    bool is_identity() const;
    bool is_scalar() const; // square, equal diagonal, zero elsewhere

    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b);
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }
    Matrix operator-() const;
    Matrix scale(const Fe& a) const;
    Matrix transpose() const;
    Matrix pow(std::uint64_t e) const;
    Fe trace() const;

    std::vector<Fe> apply(const std::vector<Fe>& v) const;        // A v
    std::vector<Fe> apply_transposed(const std::vector<Fe>& v) const; // A^tr v

    // Row-major vectorization and its inverse.
    std::vector<Fe> vectorize() const;
    static Matrix from_vec(const Field& f, int rows, int cols, const std::vector<Fe>& v);

    struct Rref; // defined after the class; carries Matrix members
    // Deterministic: leftmost nonzero column, topmost eligible row, pivot
    // scaled to 1, eliminated above and below. GF(2) uses a bit-packed
    // elimination with the identical pivot rule.
    Rref rref_with_transform() const;
    Matrix rref() const;
    int rank() const;

    // Canonical kernel basis: one vector per free column in increasing
    // column order, normalized with 1 in its free coordinate.
    std::vector<std::vector<Fe>> nullspace() const;

    std::pair<Fe, std::optional<Matrix>> det_and_inverse() const; // square
    Fe det() const;
    std::optional<Matrix> inverse() const;

    // Every minor of every size nonzero; square, n <= 8 (TooLarge above).
    bool all_minors_nonzero() const;

    Poly char_poly() const; // square; Hessenberg reduction + recurrence
    Poly min_poly() const;  // square; lcm of Krylov annihilators

    // L with L vec(X) = vec(AX - XA) under row-major vec:
    // L = A (x) I - I (x) A^tr.
    Matrix sylvester_operator() const;

    friend Matrix direct_sum(const Matrix& a, const Matrix& b);
    Matrix submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const;

    std::string to_text() const; // entry grid only, no header

  private:
    Field f_;
    int r_, c_;
    std::vector<Fe> e_;

    Rref rref_generic() const;
    Rref rref_gf2() const;
    friend struct MatrixTestHook;
};

struct Matrix::Rref {
    Matrix R;                // the reduced row-echelon form
    int rank;
    std::vector<int> pivots; // pivot column of each of the first `rank` rows
    Matrix transform;        // T with T * A = R
};

// Test hook: forces the generic elimination path (agreement checks).
struct MatrixTestHook {
    static Matrix::Rref rref_generic(const Matrix& m) { return m.rref_generic(); }
};

} // namespace cg
