#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "commgraph/io.hpp"

namespace cg {

// Knobs for the claim suites. Defaults reproduce the pinned acceptance
// parameters; everything is deterministic for a fixed option set.
struct VerifyOptions {
    std::uint64_t seed = 0;
    std::optional<int> trials;     // per-field random trial count
    std::optional<Int> budget;     // affine-class enumeration budget
    std::optional<Int> census_budget;
    bool deep = false;             // lemma4: include the exhaustive 4x4 sweep
    bool tamper = false;           // thm5: identity conjugator, a claim that must fail

    // Single-cell thm5 run (n and q select the grid cell; specs as text).
    std::optional<int> n;
    std::optional<std::uint64_t> q;
    std::optional<std::string> specA, specB;
};

// The claims verify_all covers, in report order.
const std::vector<std::string>& claim_ids();

// One certificate: claim_id, field, n, inputs, method, witnesses, verdict,
// counters, elapsed_ms (always 0 so output is byte-stable), seed.
json verify_claim(const std::string& claim_id, const VerifyOptions& opts = {});

// All twelve claims in order plus an "all_verified" summary flag.
json verify_all(const VerifyOptions& opts = {});

// Quotient-graph coherence: census BFS distances against le2/le3 for every
// pair of inequivalent classes of M_3(F_2). Claim id "census".
json verify_census(const VerifyOptions& opts = {});

} // namespace cg
