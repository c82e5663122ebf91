#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "golod/chain_complex.hpp"
#include "golod/coefficient.hpp"
#include "golod/complex.hpp"
#include "golod/homology.hpp"

namespace golod {

// A simplicial map given by a vertex assignment, or the formal collapse to
// the basepoint.  Vertex maps are validated at construction: the image of
// every face must be a face of the target (repeated image vertices are fine;
// the induced chain map sends those faces to zero).
class SimplicialMap {
  public:
    static SimplicialMap from_vertices(SimplicialComplex source, SimplicialComplex target,
                                       std::vector<int> vmap);
    static SimplicialMap collapse_map(SimplicialComplex source, SimplicialComplex target);
    static SimplicialMap identity(const SimplicialComplex& K);

    const SimplicialComplex& source() const { return source_; }
    const SimplicialComplex& target() const { return target_; }
    bool is_collapse() const { return collapse_; }
    const std::vector<int>& vertex_map() const { return vmap_; }

    // Chain map C_d(source) -> C_d(target); degenerate faces map to zero, the
    // collapse marker induces zero in degrees >= 0 and identity in degree -1.
    IntMatrix chain_matrix(const ChainComplex& src_cc, const ChainComplex& dst_cc, int d) const;

    // g.after(f) = g ∘ f
    SimplicialMap after(const SimplicialMap& f) const;

  private:
    SimplicialMap() = default;
    SimplicialComplex source_, target_;
    std::vector<int> vmap_;
    bool collapse_ = false;
};

// Induced map between homology (or cohomology) presentations over one
// coefficient system.  `gen_images` holds codomain lattice coordinates of the
// images of all domain lattice generators.
struct InducedMap {
    Coefficient coeff = Coefficient::integers();
    std::shared_ptr<const HomologyPresentation> domain, codomain;
    IntMatrix gen_images;

    // Zero as a map of homology groups over `coeff` (torsion ignored for Q).
    bool is_zero() const;

    // Matrix against the canonical invariant-factor generators of both
    // sides; torsion rows are reduced modulo their invariant.
    IntMatrix matrix() const;
};

InducedMap induced_on_homology(const SimplicialMap& f, int n, Coefficient coeff,
                               HomologyCache* cache = nullptr);

// Induced map assembled from already computed presentations and a
// chain-level matrix sending domain chains into codomain chains.
InducedMap induced_between(std::shared_ptr<const HomologyPresentation> domain,
                           std::shared_ptr<const HomologyPresentation> codomain,
                           const IntMatrix& chain_level_map, Coefficient coeff);
InducedMap induced_on_cohomology(const SimplicialMap& f, int n, Coefficient coeff,
                                 HomologyCache* cache = nullptr);

// The simplicial map m_{I,J} : K_{I∪J} -> K_I * K_J, σ ↦ (σ∩I) ⊔ (σ∩J),
// or the collapse when I and J intersect.
struct ProductMapData {
    SimplicialComplex restriction;   // K_{I∪J}
    SimplicialComplex join_complex;  // K_I * K_J
    std::vector<int> union_labels;   // K-labels of the restriction's vertices
    std::unique_ptr<SimplicialMap> map;
};
ProductMapData product_map(const SimplicialComplex& K, const std::vector<int>& I,
                           const std::vector<int>& J);

// The assembled map  ⊕_v H_n(dl_K(v); A) -> H_n(K; A)  over the listed
// vertices (all of [m] when empty), with exact surjectivity and cokernel.
struct JointDeletionMap {
    Coefficient coeff = Coefficient::integers();
    std::shared_ptr<const HomologyPresentation> target_pres;
    IntMatrix assembled;  // target-lattice coordinates of all summand generators
    bool surjective = true;
    AbelianGroup coker;
    // A class outside the image, when not surjective: its lattice
    // coordinates and a representing chain (a cycle mod the modulus).
    std::optional<IntMatrix> unhit_coords;
    std::optional<IntMatrix> unhit_chain;
    std::vector<Simplex> chain_basis;
};

JointDeletionMap joint_deletion_map(const SimplicialComplex& K, int n, Coefficient coeff,
                                    const std::vector<int>& vertices = {},
                                    HomologyCache* cache = nullptr);

}  // namespace golod
