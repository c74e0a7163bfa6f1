#pragma once

#include <vector>

#include "commgraph/matrix.hpp"

namespace cg {

// Linear subspace of M_n(F), canonicalized as the RREF of the row-major
// vectorizations in F^(n^2). Two objects compare equal iff they are the
// same subspace.
class MatSubspace {
  public:
    static MatSubspace from_matrices(const Field& f, int n, const std::vector<Matrix>& mats);
    // Rows of `vecs` span the space (not necessarily reduced).
    static MatSubspace from_vec_rows(const Field& f, int n, const Matrix& vecs);

    const Field& field() const { return f_; }
    int n() const { return n_; }
    int ambient_dim() const { return n_ * n_; }
    int dim() const { return basis_.rows(); }

    const Matrix& basis_rows() const { return basis_; } // dim x n^2, RREF
    std::vector<Matrix> basis_matrices() const;

    bool contains(const Matrix& m) const;
    // Coordinates of m in the RREF basis; nullopt if not contained.
    std::optional<std::vector<Fe>> coordinates(const Matrix& m) const;

    MatSubspace intersect(const MatSubspace& other) const; // AmbientMismatch
    // Image under X -> S^-1 X S; pass both factors to avoid re-inversion.
    MatSubspace conjugated(const Matrix& Sinv, const Matrix& S) const;

    friend bool operator==(const MatSubspace& a, const MatSubspace& b);
    friend bool operator!=(const MatSubspace& a, const MatSubspace& b) { return !(a == b); }

    // Stable serialization of the canonical basis, for class signatures.
    std::string signature() const;

  private:
    Field f_;
    int n_;
    Matrix basis_;
    MatSubspace(Field f, int n, Matrix basis)
        : f_(std::move(f)), n_(n), basis_(std::move(basis)) {}
};

MatSubspace subspace_intersect(const MatSubspace& a, const MatSubspace& b);

} // namespace cg
