#pragma once

#include <vector>

#include "commgraph/canonical.hpp"
#include "commgraph/rng.hpp"

namespace cgtest {

using namespace cg;

inline Fe random_element(const Field& f, SplitMix64& rng) {
    if (f.is_finite()) {
        std::uint64_t q = f.order().convert_to<std::uint64_t>();
        return f.element_at(rng.bounded(q));
    }
    return f.from_int(static_cast<long long>(rng.bounded(9)) - 4);
}

inline Fe random_nonzero(const Field& f, SplitMix64& rng) {
    for (;;) {
        Fe a = random_element(f, rng);
        if (!f.is_zero(a)) return a;
    }
}

inline Matrix random_matrix(const Field& f, int r, int c, SplitMix64& rng) {
    Matrix m(f, r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m.set(i, j, random_element(f, rng));
    return m;
}

inline Matrix random_invertible(const Field& f, int n, SplitMix64& rng) {
    for (;;) {
        Matrix m = random_matrix(f, n, n, rng);
        if (!f.is_zero(m.det())) return m;
    }
}

inline Fe random_eigenvalue(const Field& f, SplitMix64& rng) {
    if (f.is_finite()) {
        std::uint64_t q = f.order().convert_to<std::uint64_t>();
        return f.element_at(rng.bounded(std::min<std::uint64_t>(q, 8)));
    }
    return f.from_int(static_cast<long long>(rng.bounded(7)) - 3);
}

inline JordanSpec random_spec(const Field& f, int n, SplitMix64& rng) {
    JordanSpec spec;
    int rem = n;
    while (rem > 0) {
        int s = 1 + static_cast<int>(rng.bounded(static_cast<std::uint64_t>(rem)));
        spec.blocks.push_back(JordanBlockSpec{random_eigenvalue(f, rng), s});
        rem -= s;
    }
    return spec;
}

// Conjugated split matrix: every eigenvalue lies in the base field.
inline Matrix random_split_matrix(const Field& f, int n, SplitMix64& rng) {
    for (;;) {
        Matrix J = build_from_spec(f, random_spec(f, n, rng));
        if (J.is_scalar()) continue;
        Matrix T = random_invertible(f, n, rng);
        return T * J * *T.inverse();
    }
}

inline std::vector<Field> suite_fields() {
    return {Field::rationals(), Field::finite(2, 1), Field::finite(5, 1),
            Field::finite(2, 3), Field::finite(3, 2)};
}

// All n x n matrices over GF(2), indexed by entry bits.
inline Matrix gf2_matrix_from_bits(const Field& f, int n, std::uint64_t bits) {
    Matrix m(f, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if ((bits >> (i * n + j)) & 1) m.set(i, j, f.one());
    return m;
}

} // namespace cgtest
