#pragma once

// Integer cohomology of the 3-term cochain complex of an approximant:
// 0 -> C^0 -> C^1 -> C^2 -> 0 with deltas the transposed boundaries.

#include <vector>

#include "pinwheel/cellcomplex.hpp"
#include "pinwheel/snf.hpp"

namespace pin {

struct CohomologyGroup {
    size_t rank = 0;
    std::vector<Int> torsion;  // invariant factors > 1
};

struct CohomologyResult {
    CohomologyGroup h0, h1, h2;
    size_t n_vertices = 0, n_edges = 0, n_faces = 0;
    long euler_cells = 0;   // V - E + F
    long euler_betti = 0;   // b0 - b1 + b2
    SNFResult snf_delta1;   // of delta^1 : C^0 -> C^1
    SNFResult snf_delta2;   // of delta^2 : C^1 -> C^2
};

// H^2 is coker(delta^2); its presentation (rank + torsion) comes straight
// from the Smith form of delta^2, H^1 from both.
CohomologyResult cohomology(const CellComplex& c);

}  // namespace pin
