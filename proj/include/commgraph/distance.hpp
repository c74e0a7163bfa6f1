#pragma once

#include <optional>
#include <string>
#include <vector>

#include "commgraph/centralizer.hpp"
#include "commgraph/matrix.hpp"

namespace cg {

enum class Verdict { d0, d1, d2, d3, d4, ge5, unreachable, unknown };

const char* verdict_name(Verdict v);

// Record of a completed search: what was enumerated and how far it went.
struct Exhaustion {
    std::string method; // "le2" | "le3" | "census" | "path4"
    std::string field;  // field spec line
    Int examined{0};    // classes or matrices actually examined
    Int total{0};       // full search-space size when known
    std::string note;
};

struct DistanceResult {
    Verdict verdict = Verdict::unknown;
    // Best proven lower bound on the distance (0 when nothing is known).
    int lower_bound = 0;
    // Path including both endpoints; length = entries - 1. Consecutive
    // entries are distinct, non-scalar and commute.
    std::optional<std::vector<Matrix>> witness_path;
    std::optional<Exhaustion> exhaustion;
};

// True iff path is a valid walk from A to B: endpoints match, every entry
// non-scalar, consecutive entries distinct and commuting.
bool validate_path(const std::vector<Matrix>& path, const Matrix& A, const Matrix& B);

// Decides d in {0,1,2} exactly over any supported field. When the verdict
// is unknown the centralizer intersection was scalar-only, so d >= 3.
DistanceResult distance_le2(const Matrix& A, const Matrix& B);

// Default enumeration budget for distance_le3_finite (elements of C(A)).
// Overridden by the CG_BUDGET environment variable when set.
Int enumeration_budget();

// Decides d <= 3 versus d >= 4 over a finite field by enumerating C(A) up
// to the affine classes {alpha X + beta I}, which share a centralizer.
// Verdicts d0/d1/d2/d3 carry witness paths; unknown with lower_bound 4
// means the exhaustion proved no path of length <= 3 exists.
DistanceResult distance_le3_finite(const Matrix& A, const Matrix& B);
DistanceResult distance_le3_finite(const Matrix& A, const Matrix& B, const Int& budget);

// R = x y^tr with x a canonical kernel vector of A - lambda I and y one of
// its transpose; AR = RA. Fails with NoEigenvalueInField when A has no
// eigenvalue in the base field.
Matrix find_commuting_rank_one(const Matrix& A);

// Builds A -- x f^tr -- z h^tr -- y g^tr -- B with f^tr z = g^tr z = 0 and
// h^tr x = h^tr y = 0, so consecutive rank-one products vanish. Returns a
// validated path of length <= 4 (shorter when the rank-one witnesses for
// both endpoints coincide). Requires n >= 3 and an eigenvalue in the base
// field for each endpoint.
std::vector<Matrix> path_length4(const Matrix& A, const Matrix& B);

// Combined dispatcher: le2 everywhere, then le3 + path_length4 over finite
// fields. Infinite fields with d > 2 come back unknown with guidance.
DistanceResult distance(const Matrix& A, const Matrix& B);

} // namespace cg
