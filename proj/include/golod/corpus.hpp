#pragma once

#include <map>
#include <string>
#include <vector>

#include "golod/complex.hpp"

namespace golod {
namespace corpus {

// Standard building blocks.
SimplicialComplex simplex(int n);           // full n-simplex on n+1 vertices
SimplicialComplex boundary_simplex(int n);  // ∂Δ^n, an (n-1)-sphere
SimplicialComplex cycle(int m);             // the m-gon, m >= 3
SimplicialComplex path(int m);              // path graph on m vertices
SimplicialComplex two_points();

// Six-vertex Möbius band on {A,...,F}: the antipodally identified hexagon
// minus the open triangle DEF.  Its 1-skeleton is the complete graph K6 and
// its boundary circle is the triangle DEF.
SimplicialComplex k1_moebius();

// Minimal six-vertex triangulation of the real projective plane on
// {P,Q,R,d,e,f}: the Möbius band above plus the triangle def.
SimplicialComplex k2_rp2();

// Same triangulation of RP^2 with plain numeric labels.
SimplicialComplex rp2_6();

// Nine-vertex Moore-space triangulation M on {A,...,F,d,e,f}: the Möbius
// band glued to the projective plane along the triangles DEF and PQR.
// |M| ≃ S^1 ∪_4 e^2.
SimplicialComplex moore_M();

// Seven-vertex torus (complete 1-skeleton) and the 3x3 grid torus on nine
// vertices (not 1-neighborly).
SimplicialComplex torus_7();
SimplicialComplex torus_9();

// Combinatorial closed-surface test: pure 2-dimensional, every edge in
// exactly two facets, every vertex link a single cycle, connected.
bool is_closed_surface(const SimplicialComplex& K);

struct NamedComplex {
    std::string name;
    std::string description;
    SimplicialComplex complex;
    // Expected invariants, re-verified by the engine at test time.  Keys:
    //   "H<d>:<coeff>"     reduced homology, value as printed by describe()
    //   "chordal", "1-neighborly", "closed-surface"   "true"/"false"
    //   "euler"            integer
    //   "f-vector"         comma-separated counts
    //   "golod:integral", "golod:field:<spec>"        "Golod"/"NotGolod"
    std::map<std::string, std::string> expected;
};

const std::vector<NamedComplex>& all();
const NamedComplex* find(const std::string& name);

}  // namespace corpus
}  // namespace golod
