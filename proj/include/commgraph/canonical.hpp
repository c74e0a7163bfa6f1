#pragma once

#include "commgraph/centralizer.hpp"

namespace cg {

// Jordan block layout in canonical order: eigenvalues ascending in the
// field's element order, block sizes descending within an eigenvalue.
struct JordanBlockSpec {
    Fe eigenvalue;
    int size;
};

struct JordanSpec {
    std::vector<JordanBlockSpec> blocks;
    int total_size() const;
    void canonicalize(const Field& f);
};

struct JordanResult {
    Matrix J; // canonical Jordan matrix
    Matrix T; // invertible, T^-1 A T = J (validated before return)
    JordanSpec spec;
};

// Requires the characteristic polynomial to split over the base field;
// otherwise NonSplitSpectrum (message carries irreducible factor degrees).
JordanResult jordan_form(const Matrix& A);

// Companion matrix of a monic polynomial: ones on the subdiagonal, negated
// coefficients in the last column.
Matrix companion(const Poly& f);

Matrix jordan_cell(const Field& f, int k, const Fe& lambda);
Matrix build_from_spec(const Field& f, const JordanSpec& spec);

// Nonderogatory: deg min_poly = n. Non-scalar input required.
bool is_minimal(const Matrix& A);
// Farthest-from-minimal among non-scalars: min_poly has degree 2 and splits.
// A degree-2 irreducible min_poly is NOT classified maximal (see report note).
bool is_maximal(const Matrix& A);
// Diagonalizable over the base field: min_poly squarefree and split.
bool is_semisimple(const Matrix& A);
// Some lambda in F has rank(A - lambda I) = 1.
bool is_rank_one_equivalent(const Matrix& A);
// The witnessing (lambda, A - lambda I) when rank-one equivalent.
std::optional<std::pair<Fe, Matrix>> rank_one_form(const Matrix& A);

struct StructureReport {
    bool minimal = false;
    bool maximal = false;
    bool semisimple = false;
    bool rank_one_equiv = false;
    int min_poly_degree = 0;
    std::vector<std::string> notes;
};

StructureReport structure_report(const Matrix& A); // ScalarInput on scalars

} // namespace cg
