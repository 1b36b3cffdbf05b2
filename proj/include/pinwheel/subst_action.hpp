#pragma once

// The cellular substitution maps between supertile spaces: each level-(l+1)
// simplex maps isometrically onto the equal-shape simplex of its containing
// tile's class. Chain maps commute with boundaries; the induced maps on
// cohomology drive the direct-limit rank report.

#include <array>

#include "pinwheel/cellcomplex.hpp"
#include "pinwheel/cohomology.hpp"

namespace pin {

struct DegreeRankReport {
    size_t rank_k0 = 0;                  // rank of H^i(B^c_0; Q)
    std::vector<size_t> composite_ranks; // rank of H^i(K0;Q) -> H^i(K_k;Q), k = 1, 2, ...
    bool stabilized = false;             // last two composite ranks equal
    size_t eventual_rank = 0;            // valid when stabilized
};

struct SubstAction {
    CellComplex k1;           // level-1 supertile space
    SparseIntMatrix f0, f1, f2;  // C_n(K1) -> C_n(K0); one nonzero per column
    bool boundary_commutes = false;
    bool h0_identity = false;  // both connected and the unit cochain pulls back to itself
    std::array<DegreeRankReport, 3> degree;  // H^0, H^1, H^2
};

// children = collared child-class table (slot order). max_power 1 computes
// only the K1 step; 2 additionally builds the level-2 space for the
// stabilization check.
SubstAction substitution_on_cells(const Enumeration& e, const SubstitutionRule& r,
                                  const std::vector<std::array<int, 5>>& children,
                                  const CellComplex& k0, const CohomologyResult& coh0,
                                  int max_power = 2, bool parallel = true);

// The simplex-level refinement matrix on Z^(classes*8):
// entry[(i,k'),(j,k)] = delta_{k'k} * A[i][j]. Summing it over the 8 simplex
// slots per tile reproduces the collared matrix A.
IntMatrix simplex_refinement_matrix(const IntMatrix& a);

}  // namespace pin
