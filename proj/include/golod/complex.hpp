#pragma once

#include <optional>
#include <string>
#include <vector>

#include "golod/simplex.hpp"

namespace golod {

// Finite simplicial complex on the vertex set [m] = {1,...,m}, stored by its
// facets (inclusion-maximal faces).  Every vertex of [m] must occur in some
// facet unless the complex is marked relative (links produce those).  The
// empty complex {∅} is m = 0 with no facets.
//
// Values are immutable after construction; all queries are pure.
class SimplicialComplex {
  public:
    SimplicialComplex() = default;

    // Canonicalizes facets (sorted, inclusion-maximal), validates labels
    // against [m] and the ghost-vertex rule.
    static SimplicialComplex from_facets(int m, std::vector<Simplex> facets,
                                         std::vector<std::string> names = {},
                                         bool relative = false);

    int vertex_count() const { return m_; }
    const std::vector<Simplex>& facets() const { return facets_; }
    bool relative() const { return relative_; }

    // -1 for the empty complex.
    int dim() const { return dim_; }

    bool has_face(const Simplex& s) const;

    // All d-faces in lexicographic order; d = -1 yields {∅}; out-of-range
    // degrees yield the empty list.
    std::vector<Simplex> faces(int d) const;

    // f[d] = number of d-faces, d = 0..dim.
    std::vector<long> f_vector() const;

    // Unreduced Euler characteristic: sum over d >= 0 of (-1)^d f_d.
    long euler_characteristic() const;

    // Full subcomplex over I (non-empty, sorted ascending): faces contained
    // in I, relabeled to [|I|] preserving order.  Display names carry the
    // original identity of each vertex.
    SimplicialComplex full_subcomplex(const std::vector<int>& I) const;

    // Full subcomplex on [m] - v.
    SimplicialComplex vertex_deletion(int v) const;

    // Link of u, as a relative complex on [m] - u (uncovered vertices allowed).
    SimplicialComplex link(int u) const;

    // Faces of dimension <= d.
    SimplicialComplex skeleton(int d) const;

    // All minimal non-faces in lexicographic order.  A minimal non-face has
    // every proper subset in K; its size is at most dim K + 2.
    std::vector<Simplex> minimal_nonfaces() const;

    // True iff every (k+1)-subset of [m] is a face.
    bool is_k_neighborly(int k) const;

    // Adjacency of the 1-skeleton, indexed by vertex label (1-based).
    std::vector<std::vector<int>> adjacency() const;

    bool has_edge(int u, int v) const;

    const std::vector<std::string>& vertex_names() const { return names_; }
    std::string vertex_name(int v) const;
    std::string simplex_name(const Simplex& s) const;

    bool operator==(const SimplicialComplex& other) const {
        return m_ == other.m_ && facets_ == other.facets_;
    }

  private:
    int m_ = 0;
    int dim_ = -1;
    std::vector<Simplex> facets_;
    std::vector<std::string> names_;
    bool relative_ = false;
};

// Join K * L on m_K + m_L vertices; L's labels are shifted by m_K.
SimplicialComplex join(const SimplicialComplex& K, const SimplicialComplex& L);

// One-point union identifying vertex v of K with vertex w of L.
SimplicialComplex wedge(const SimplicialComplex& K, const SimplicialComplex& L, int v, int w);

struct ChordalityResult {
    bool chordal = true;
    // On failure: an induced cycle of length >= 4, listed in cycle order.
    std::vector<int> witness_cycle;
};

// Chordality of the 1-skeleton: lexicographic BFS ordering checked for the
// perfect-elimination property; a shortest induced cycle is extracted as the
// witness when the check fails.
ChordalityResult is_chordal(const SimplicialComplex& K);

// Shortest induced cycle of length >= 4 in an adjacency structure, if any.
// Exposed for witness re-verification.
std::optional<std::vector<int>> shortest_hole(const std::vector<std::vector<int>>& adj);

// True iff `cycle` is an induced cycle of length >= 4 of the 1-skeleton.
bool is_induced_cycle(const SimplicialComplex& K, const std::vector<int>& cycle);

}  // namespace golod
