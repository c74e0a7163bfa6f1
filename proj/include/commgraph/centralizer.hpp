#pragma once

#include "commgraph/subspace.hpp"

namespace cg {

// C(A) or C(A_1, ..., A_m) as a canonical subspace of M_n(F).
struct CentralizerBasis {
    std::vector<Matrix> subjects;
    MatSubspace space;
};

CentralizerBasis centralizer(const Matrix& A);
CentralizerBasis centralizer_of_set(const std::vector<Matrix>& As);

// True iff the space contains a non-scalar matrix. Pre: I is in the space
// (IdentityMissing otherwise); then the test is just dim >= 2.
bool contains_nonscalar(const MatSubspace& S);

// First non-scalar basis matrix of the canonical basis; nullopt if none.
std::optional<Matrix> first_nonscalar(const MatSubspace& S);

// span{I, A, ..., A^(d-1)}, d = deg min_poly(A).
MatSubspace poly_algebra(const Matrix& A);

// Equivalence A ~ B: C(A) = C(B); preorder A < B: C(A) subset of C(B),
// tested by commuting each basis matrix of C(A) with B. Non-scalar inputs.
bool equivalent(const Matrix& A, const Matrix& B);
bool precedes(const Matrix& A, const Matrix& B);

// Verifies the bicommutant identity C(C(A)) = span{I, A, A^2, ...}.
bool double_centralizer_check(const Matrix& A);

} // namespace cg
