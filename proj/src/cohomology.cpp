#include "pinwheel/cohomology.hpp"

namespace pin {

CohomologyResult cohomology(const CellComplex& c) {
    CohomologyResult out;
    out.n_vertices = c.n_vertices;
    out.n_edges = c.n_edges;
    out.n_faces = c.n_faces;

    IntMatrix delta1 = c.boundary1.to_dense().transpose();  // E x V
    IntMatrix delta2 = c.boundary2.to_dense().transpose();  // F x E
    out.snf_delta1 = snf(delta1);
    out.snf_delta2 = snf(delta2);

    const size_t r1 = out.snf_delta1.rank;
    const size_t r2 = out.snf_delta2.rank;

    out.h0.rank = c.n_vertices - r1;  // ker delta^1; always free

    out.h1.rank = c.n_edges - r2 - r1;
    for (const auto& d : out.snf_delta1.invariant_factors)
        if (d > 1) out.h1.torsion.push_back(d);

    out.h2.rank = c.n_faces - r2;
    for (const auto& d : out.snf_delta2.invariant_factors)
        if (d > 1) out.h2.torsion.push_back(d);

    out.euler_cells = static_cast<long>(c.n_vertices) - static_cast<long>(c.n_edges) +
                      static_cast<long>(c.n_faces);
    out.euler_betti = static_cast<long>(out.h0.rank) - static_cast<long>(out.h1.rank) +
                      static_cast<long>(out.h2.rank);
    return out;
}

}  // namespace pin
