#pragma once

#include <vector>

#include "golod/complex.hpp"
#include "golod/int_matrix.hpp"
#include "golod/simplex.hpp"

namespace golod {

// Simplicial chain complex with integer boundary matrices.  Faces are listed
// in lexicographic order per degree; the boundary of [v0 < ... < vd] is the
// alternating sum of its codimension-one faces.  The reduced complex carries
// the empty simplex in degree -1 and the augmentation as its boundary map.
struct ChainComplex {
    int dim = -1;
    bool reduced = true;
    // basis(d) = bases[d + 1]; degree -1 holds {∅} when reduced, else nothing.
    std::vector<std::vector<Simplex>> bases;

    const std::vector<Simplex>& basis(int d) const;
    int basis_size(int d) const;
    // ∂_d : C_d -> C_{d-1}; degrees outside [0, dim] give correctly shaped
    // zero-column matrices.
    IntMatrix boundary(int d) const;
    int face_index(int d, const Simplex& s) const;
};

ChainComplex chain_complex(const SimplicialComplex& K, bool reduced = true);

}  // namespace golod
