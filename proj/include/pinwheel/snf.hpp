#pragma once

// Smith normal form over Z with unimodular transforms: U * A * V = D,
// D diagonal with d1 | d2 | ... Deterministic pivot rule: smallest nonzero
// |entry|, ties broken row-major.

#include <vector>

#include "pinwheel/intmatrix.hpp"

namespace pin {

struct SNFResult {
    IntMatrix d;  // rows(A) x cols(A), diagonal
    IntMatrix u;  // rows x rows, unimodular
    IntMatrix v;  // cols x cols, unimodular
    Int det_u, det_v;  // tracked through the elementary operations, always +-1
    size_t rank = 0;
    std::vector<Int> invariant_factors;  // the nonzero diagonal, d1 | d2 | ...
};

SNFResult snf(const IntMatrix& a);

struct SNFVerification {
    bool product_ok = false;        // U A V == D re-multiplied
    bool diagonal_ok = false;       // divisibility chain
    bool tracked_dets_ok = false;   // tracked det values are +-1
    bool independent_dets_ok = false;  // fraction-free det of U and V (when run)
    bool independent_dets_run = false;
    bool ok() const {
        return product_ok && diagonal_ok && tracked_dets_ok &&
               (!independent_dets_run || independent_dets_ok);
    }
};

// Re-multiplies U A V and checks |det| = 1. Fraction-free determinants are
// recomputed independently when the transform size is at most
// independent_det_limit (0 disables).
SNFVerification verify_snf(const IntMatrix& a, const SNFResult& s,
                           size_t independent_det_limit = 1200);

}  // namespace pin
