#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "golod/chain_complex.hpp"
#include "golod/coefficient.hpp"
#include "golod/complex.hpp"
#include "golod/snf.hpp"

namespace golod {

// Presentation of the degree-n homology of a two-step complex
//   C' --d_in--> C --d_out--> C''
// with coefficients Z/q (q = 0 means Z).  Everything is computed over Z:
// the chains x with d_out x ≡ 0 (mod q) form a full-rank sublattice of Z^b
// (they contain q Z^b), found as the projection of the integer kernel of
// [d_out | q I].  The homology group is Z^k / column-span(relations), where
// relations are the lattice coordinates of [d_in | q I].
struct HomologyPresentation {
    long modulus = 0;
    int chain_rank = 0;     // b
    IntMatrix lattice;      // b x k, columns a basis of the cycle lattice
    IntMatrix relations;    // k x t
    SmithForm lattice_snf;  // solver for lattice * y = c
    SmithForm relations_snf;
    AbelianGroup group;

    // Canonical decomposition data: one entry per surviving generator of the
    // group, in invariant-factor order (torsion first, then free = 0).
    std::vector<mpz_class> gen_invariants;
    IntMatrix gen_lattice_coords;  // k x gens
    IntMatrix gen_chains;          // b x gens

    int lattice_gens() const { return relations.rows(); }

    // Lattice coordinates of chains (columns); throws if not in the lattice.
    IntMatrix coords_of(const IntMatrix& chains) const;
    // Whether the classes of the given lattice-coordinate columns all vanish.
    bool classes_are_zero(const IntMatrix& coords) const;
};

HomologyPresentation homology_pair(const IntMatrix& d_out, const IntMatrix& d_in, long q);

// User-facing homology value: a group for Z / Z/n coefficients, a dimension
// for field coefficients, plus representative cycles for each generator.
struct HomologyResult {
    Coefficient coeff = Coefficient::integers();
    AbelianGroup group;   // integral or mod-n invariant factors
    long dimension = 0;   // field coefficients only
    std::vector<Simplex> chain_basis;
    std::shared_ptr<const HomologyPresentation> pres;

    // "Z/4", "Z + Z/2", "0" for group-valued results; "dim 2" for fields.
    std::string describe() const;
};

HomologyResult homology(const SimplicialComplex& K, int n, Coefficient coeff,
                        bool reduced = true);
HomologyResult cohomology(const SimplicialComplex& K, int n, Coefficient coeff,
                          bool reduced = true);

// Shared presentation cache; complexes are keyed by facet structure.  Safe
// for repeated queries within one checker run (single-owner use).
class HomologyCache {
  public:
    std::shared_ptr<const HomologyPresentation> homology(const SimplicialComplex& K, int n,
                                                         long q);
    std::shared_ptr<const HomologyPresentation> cohomology(const SimplicialComplex& K, int n,
                                                           long q);

  private:
    std::shared_ptr<const HomologyPresentation> get(const SimplicialComplex& K, int n, long q,
                                                    bool dual);
    std::map<std::string, std::shared_ptr<const HomologyPresentation>> table_;
    std::map<std::string, std::shared_ptr<const ChainComplex>> chains_;
};

}  // namespace golod
