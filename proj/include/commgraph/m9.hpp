#pragma once

#include <cstdint>
#include <vector>

#include "commgraph/canonical.hpp"
#include "commgraph/centralizer.hpp"

namespace cg {

// Exhaustive certificate that the commuting graph of M_9(Z_2) is connected
// with diameter at least 5. Every field below is validated during
// construction; a returned value is a checked proof object.
struct M9Certificate {
    Poly m;                            // irreducible modulus of the degree-9 field
    Matrix A_hat;                      // companion(m)
    Matrix Y_hat;                      // first p(A_hat) generating the subfield
    std::vector<std::uint64_t> p_bits; // coefficients of p, ascending degree
    Matrix S1;                         // S1 Y_hat S1^-1 = C + C + C
    Matrix A;                          // S1 A_hat S1^-1
    Matrix V;                          // p(A), the block companion
    Matrix N;                          // cube-zero perturbation
    Matrix B;                          // (I+N) A (I+N)^-1
    Matrix Vp;                         // (I+N) V (I+N)^-1
    Int algebra_size = 0;              // |Z_2[A_hat]|
    int centralizer_dim = 0;           // dim C(A_hat)
    int subfield_centralizer_dim = 0;  // dim C(Y_hat)
    int scalar_count = 0;
    int subfield_nonscalar_count = 0;
    int full_count = 0;                // elements with C(W) = C(A_hat)
    int dim_CA_CB = 0;
    int dim_CV_CB = 0;
    int dim_CA_CVp = 0;
    int intersection_dim = 0; // dim(C(V) meet C(Vp)), the headline value
};

M9Certificate m9_certificate();

} // namespace cg
