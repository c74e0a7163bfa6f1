#pragma once

#include <map>
#include <optional>

#include "commgraph/canonical.hpp"
#include "commgraph/distance.hpp"

namespace cg {

// One member of a distance-four family, carrying the main matrix plus every
// auxiliary the construction produced. Each builder validates its defining
// identities before returning, so a FamilyInstance is a proof-carrying value.
struct FamilyInstance {
    int n = 0;
    Fe alpha;
    std::optional<Fe> lambda; // n = 4 family only
    Matrix X;                 // the family member; always minimal
    std::map<std::string, Matrix> aux;              // R_alpha, S_alpha, Z, ...
    std::map<std::string, std::vector<Fe>> vectors; // x, f, g, w as applicable
    // X -- hub -- Z with hub = aux["hub"]; both edges validated.
    std::vector<Matrix> short_path;
};

// Entries 1/(x_i - y_j). Requires xs pairwise distinct, ys pairwise
// distinct and x_i != y_j throughout (DegenerateParameters otherwise).
Matrix cauchy_matrix(const Field& f, const std::vector<Fe>& xs, const std::vector<Fe>& ys);

struct Theorem5Instance {
    Matrix A;      // build_from_spec(specA)
    Matrix Bprime; // S^-1 * build_from_spec(specB) * S
    Matrix S;      // conjugator, every minor nonzero
    JordanSpec specA, specB;
};

// Both specs need pairwise-distinct eigenvalues (NotMinimalSpec). A supplied
// S must pass all_minors_nonzero (BadConjugator). Without S a Cauchy matrix
// with x_i = i, y_j = -(j-1) is generated; over GF(q) this needs q > 2n and
// the minors are re-validated, advancing the y offset until a valid choice
// appears (DegenerateParameters when none exists).
Theorem5Instance theorem5_instance(const Field& f, JordanSpec specA, JordanSpec specB,
                                   std::optional<Matrix> S = std::nullopt);

// n = 3: R_alpha = (0,1,a)^tr (0,a,-1), X with X^2 = R_alpha built by
// conjugating J_3, hub R_alpha, Z = E_11.
FamilyInstance family_n3(const Field& f, const Fe& alpha);

// n = 4: N_alpha, P_alpha and the explicit conjugator S_alpha; requires
// lambda not in {0,1} and alpha != 0 (BadParameters). X = S(J_3+1)S^-1,
// hub N_alpha, Z = E_11.
FamilyInstance family_n4(const Field& f, const Fe& alpha, const Fe& lambda);

// n >= 5: A = diag(eigs) with pairwise-distinct entries, X = S A S^-1 for
// S = I + x(f + alpha g)^tr, hub S E_11 S^-1, Z = w w^tr with w orthogonal
// to e_1, x, f, g. Errors: BadDimension, RepeatedEigenvalues.
FamilyInstance family_n5plus(const Field& f, int n, const Fe& alpha, const std::vector<Fe>& eigs);

// Whole-set precondition for the n >= 5 family in characteristic two:
// any pair with beta - alpha = 1 breaks the pairwise distance-4 claim
// (Char2IndexClash). No-op in other characteristics.
void check_alpha_set(const Field& f, const std::vector<Fe>& alphas);
std::vector<FamilyInstance> family_n5plus_set(const Field& f, int n,
                                              const std::vector<Fe>& alphas,
                                              const std::vector<Fe>& eigs);

// The 4x4 coefficient matrix of the corner-pattern linear system for
// A = J_k1 + J_k2 and R = a b^tr. Always singular.
Matrix lemma3_system(const Field& f, int k1, int k2,
                     const std::vector<Fe>& a, const std::vector<Fe>& b);

// First canonical kernel vector of lemma3_system, materialized as
// Z = x1 E_{1,k1} + x2 E_{1,k} + x3 E_{k1+1,k1} + x4 E_{k1+1,k}.
// Z is non-scalar and ZA = AZ = 0, ZR = RZ = 0.
Matrix lemma3_solve(const Field& f, int k1, int k2,
                    const std::vector<Fe>& a, const std::vector<Fe>& b);

// Precomputed Jordan data of a non-minimal A, reusable across many R.
struct CornerWitnessContext {
    Matrix A, U, Uinv; // U^-1 A U = J_k1(lam) + J_k2(lam) + rest
    Fe lam;
    int k1 = 0, k2 = 0;
};
CornerWitnessContext corner_witness_context(const Matrix& A);

// Non-scalar Z commuting with both A (non-minimal, split spectrum) and the
// rank-one R. May coincide with A or R when the pair is already adjacent.
// Errors: MinimalInput, NonSplitSpectrum, ScalarInput, BadParameters.
Matrix lemma4_witness(const Matrix& A, const Matrix& R);
Matrix lemma4_witness(const CornerWitnessContext& ctx, const Matrix& R);
// Exhaustive-sweep variant: same algebra in the conjugated coordinates,
// skipping materialization of Z. True iff the witness exists and is valid.
bool lemma4_witness_exists(const CornerWitnessContext& ctx,
                           const std::vector<Fe>& u, const std::vector<Fe>& v);

// Non-minimal X with d(A,X) >= 3, certified by dim(C(A) cap C(X)) = 1.
// Accepts square-zero A (rank 2..n/2), idempotent A (rank 2..n-2, flipping
// to I-A when rank < n/2), any maximal A normalizing via its degree-2
// minimal polynomial, and the A^3 = 0, rk(A^2) = 1 class.
// Errors: WrongClass, NonSplitSpectrum, BadDimension, ScalarInput, FieldTooSmall.
Matrix lemma7_witness(const Matrix& A);

struct InterpolationResult {
    Matrix M, B, X, Y; // all in the (possibly lifted) field
    bool lifted = false;
    std::vector<Fe> nus; // the distinct cell eigenvalues of M
};

// Minimal M commuting with both X and Y, where B is minimal semisimple,
// X in C(B) and Y in C(X), both non-scalar. Finite fields too small to
// host the required distinct cell values are lifted to an extension
// automatically. Errors: NotSemisimpleMinimal, NonSplitSpectrum,
// FieldTooSmall, BadParameters, ScalarInput.
InterpolationResult lemma10_interpolate(const Matrix& B, const Matrix& X, const Matrix& Y);

struct ObstructionPair {
    Matrix X, Y;              // commuting; X commutes with B
    std::optional<Int> searched; // finite fields: non-scalar elements of
                                 // C(X) cap C(Y) checked for minimality
};

// For B minimal, not semisimple, given in Jordan form with first block of
// size >= 2: X = E_{1,n1}, Y = E_{1,k} for the least k outside {1, n1}.
// No minimal matrix commutes with both; over finite fields within budget
// this is certified by enumeration. Errors: SemisimpleInput, NotJordan,
// MinimalInput (B not minimal), BadDimension.
ObstructionPair lemma11_witness(const Matrix& B);

// Embedding of a finite field into GF(p^(k*m)), canonical modulus. The
// images are computed by sending the generator to the first root of the
// source modulus in the extension. TooLarge when the extension exceeds
// the desk-scale bound.
struct FieldLift {
    Field src, dst;
    Fe root; // image of the source generator in dst
    Fe map(const Fe& a) const;
    Matrix map(const Matrix& m) const;
};
FieldLift lift_field(const Field& f, unsigned m);

} // namespace cg
