#include "golod/corpus.hpp"

#include <set>

#include "golod/errors.hpp"

namespace golod {
namespace corpus {

SimplicialComplex simplex(int n) {
    if (n < 0) throw OutOfRangeError("simplex dimension must be >= 0");
    Simplex top(n + 1);
    for (int i = 0; i <= n; ++i) top[i] = i + 1;
    return SimplicialComplex::from_facets(n + 1, {top});
}

SimplicialComplex boundary_simplex(int n) {
    if (n < 1) throw OutOfRangeError("boundary simplex needs dimension >= 1");
    std::vector<Simplex> fac;
    for (int skip = 1; skip <= n + 1; ++skip) {
        Simplex f;
        for (int v = 1; v <= n + 1; ++v)
            if (v != skip) f.push_back(v);
        fac.push_back(std::move(f));
    }
    return SimplicialComplex::from_facets(n + 1, std::move(fac));
}

SimplicialComplex cycle(int m) {
    if (m < 3) throw OutOfRangeError("cycle needs at least 3 vertices");
    std::vector<Simplex> fac;
    for (int v = 1; v < m; ++v) fac.push_back({v, v + 1});
    fac.push_back({1, m});
    return SimplicialComplex::from_facets(m, std::move(fac));
}

SimplicialComplex path(int m) {
    if (m < 1) throw OutOfRangeError("path needs at least 1 vertex");
    std::vector<Simplex> fac;
    if (m == 1) fac.push_back({1});
    for (int v = 1; v < m; ++v) fac.push_back({v, v + 1});
    return SimplicialComplex::from_facets(m, std::move(fac));
}

SimplicialComplex two_points() { return SimplicialComplex::from_facets(2, {{1}, {2}}); }

namespace {

// A=1 B=2 C=3 D=4 E=5 F=6
const std::vector<Simplex> kMoebiusFacets = {
    {1, 3, 5}, {1, 2, 5}, {2, 4, 5}, {2, 3, 4}, {1, 3, 4},
    {1, 4, 6}, {3, 5, 6}, {1, 2, 6}, {2, 3, 6},
};

}  // namespace

SimplicialComplex k1_moebius() {
    return SimplicialComplex::from_facets(6, kMoebiusFacets, {"A", "B", "C", "D", "E", "F"});
}

SimplicialComplex k2_rp2() {
    std::vector<Simplex> fac = kMoebiusFacets;
    fac.push_back({4, 5, 6});
    return SimplicialComplex::from_facets(6, std::move(fac), {"P", "Q", "R", "d", "e", "f"});
}

SimplicialComplex rp2_6() {
    std::vector<Simplex> fac = kMoebiusFacets;
    fac.push_back({4, 5, 6});
    return SimplicialComplex::from_facets(6, std::move(fac));
}

SimplicialComplex moore_M() {
    // A..F = 1..6 carry the Möbius band; the projective plane sits on
    // {D,E,F,d,e,f} = {4,5,6,7,8,9} with (P,Q,R) glued to (D,E,F).
    std::vector<Simplex> fac = kMoebiusFacets;
    const int P = 4, Q = 5, R = 6, d = 7, e = 8, f = 9;
    const std::vector<Simplex> rp2_part = {
        {P, R, e}, {P, Q, e}, {Q, d, e}, {Q, R, d}, {P, R, d},
        {P, d, f}, {R, e, f}, {P, Q, f}, {Q, R, f}, {d, e, f},
    };
    fac.insert(fac.end(), rp2_part.begin(), rp2_part.end());
    return SimplicialComplex::from_facets(
        9, std::move(fac), {"A", "B", "C", "D", "E", "F", "d", "e", "f"});
}

SimplicialComplex torus_7() {
    std::vector<Simplex> fac;
    auto mod7 = [](int x) { return (x - 1) % 7 + 1; };
    for (int i = 1; i <= 7; ++i) {
        fac.push_back(canonical_simplex({i, mod7(i + 1), mod7(i + 3)}));
        fac.push_back(canonical_simplex({i, mod7(i + 2), mod7(i + 3)}));
    }
    return SimplicialComplex::from_facets(7, std::move(fac));
}

SimplicialComplex torus_9() {
    // 3x3 grid with wraparound, each square split into two triangles
    auto label = [](int i, int j) { return 3 * ((i % 3 + 3) % 3) + ((j % 3 + 3) % 3) + 1; };
    std::vector<Simplex> fac;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            fac.push_back(canonical_simplex({label(i, j), label(i + 1, j), label(i, j + 1)}));
            fac.push_back(canonical_simplex({label(i + 1, j), label(i, j + 1), label(i + 1, j + 1)}));
        }
    }
    return SimplicialComplex::from_facets(9, std::move(fac));
}

bool is_closed_surface(const SimplicialComplex& K) {
    if (K.dim() != 2) return false;
    for (const auto& f : K.facets())
        if (f.size() != 3) return false;  // pure
    // every edge in exactly two triangles
    std::map<Simplex, int> edge_count;
    for (const auto& f : K.facets())
        for (size_t i = 0; i < 3; ++i)
            for (size_t j = i + 1; j < 3; ++j) edge_count[{f[i], f[j]}]++;
    for (const auto& [e, c] : edge_count)
        if (c != 2) return false;
    // vertex links are single cycles
    for (int v = 1; v <= K.vertex_count(); ++v) {
        SimplicialComplex lk = K.link(v);
        auto adj = lk.adjacency();
        std::vector<int> covered;
        for (const auto& f : lk.facets())
            for (int u : f) covered.push_back(u);
        std::set<int> verts(covered.begin(), covered.end());
        if (verts.empty()) return false;
        size_t edges = 0;
        for (int u : verts) {
            if (adj[u].size() != 2) return false;
            edges += adj[u].size();
        }
        edges /= 2;
        if (edges != verts.size()) return false;
        // connectivity of the link
        std::set<int> seen;
        std::vector<int> stack{*verts.begin()};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            if (!seen.insert(u).second) continue;
            for (int x : adj[u]) stack.push_back(x);
        }
        if (seen.size() != verts.size()) return false;
    }
    // connectivity of the surface
    auto adj = K.adjacency();
    std::set<int> seen;
    std::vector<int> stack{1};
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        if (!seen.insert(u).second) continue;
        for (int x : adj[u]) stack.push_back(x);
    }
    return static_cast<int>(seen.size()) == K.vertex_count();
}

namespace {

std::vector<NamedComplex> build_all() {
    std::vector<NamedComplex> out;

    out.push_back({"bd_simplex_3",
                   "boundary of the 3-simplex (a 2-sphere on 4 vertices)",
                   boundary_simplex(3),
                   {{"H2:int", "Z"},
                    {"H1:int", "0"},
                    {"chordal", "true"},
                    {"1-neighborly", "true"},
                    {"closed-surface", "true"},
                    {"euler", "2"},
                    {"f-vector", "4,6,4"},
                    {"golod:integral", "Golod"}}});

    out.push_back({"cycle_4",
                   "4-gon, the minimal non-chordal graph",
                   cycle(4),
                   {{"H1:int", "Z"},
                    {"chordal", "false"},
                    {"euler", "0"},
                    {"golod:integral", "NotGolod"},
                    {"golod:field:rat", "NotGolod"}}});

    out.push_back({"two_points",
                   "two isolated vertices",
                   two_points(),
                   {{"H0:int", "Z"}, {"chordal", "true"}, {"golod:integral", "Golod"}}});

    out.push_back({"path_3",
                   "path graph on three vertices",
                   path(3),
                   {{"H0:int", "0"},
                    {"H1:int", "0"},
                    {"chordal", "true"},
                    {"golod:integral", "Golod"}}});

    out.push_back({"wedge_bd3_bd3",
                   "wedge of two copies of the boundary of a 3-simplex",
                   wedge(boundary_simplex(3), boundary_simplex(3), 1, 1),
                   {{"H2:int", "Z^2"},
                    {"H1:int", "0"},
                    {"chordal", "true"},
                    {"1-neighborly", "false"},
                    {"euler", "3"},
                    {"f-vector", "7,12,8"},
                    {"golod:integral", "Golod"}}});

    out.push_back({"k1_moebius",
                   "six-vertex Moebius band, boundary circle DEF",
                   k1_moebius(),
                   {{"H1:int", "Z"},
                    {"H2:int", "0"},
                    {"1-neighborly", "true"},
                    {"chordal", "true"},
                    {"euler", "0"},
                    {"f-vector", "6,15,9"}}});

    out.push_back({"k2_rp2",
                   "minimal six-vertex projective plane",
                   k2_rp2(),
                   {{"H1:int", "Z/2"},
                    {"H2:int", "0"},
                    {"H2:f:2", "dim 1"},
                    {"H2:rat", "dim 0"},
                    {"H2:mod:2", "Z/2"},
                    {"1-neighborly", "true"},
                    {"closed-surface", "true"},
                    {"euler", "1"},
                    {"f-vector", "6,15,10"},
                    {"golod:integral", "Golod"}}});

    out.push_back({"rp2_6",
                   "minimal six-vertex projective plane (numeric labels)",
                   rp2_6(),
                   {{"H1:int", "Z/2"},
                    {"H2:int", "0"},
                    {"1-neighborly", "true"},
                    {"closed-surface", "true"},
                    {"golod:integral", "Golod"}}});

    out.push_back({"moore_M",
                   "nine-vertex Moore space: Moebius band glued to RP^2 along a triangle",
                   moore_M(),
                   {{"H1:int", "Z/4"},
                    {"H2:int", "0"},
                    {"H2:mod:4", "Z/4"},
                    {"H2:mod:2", "Z/2"},
                    {"H2:f:3", "dim 0"},
                    {"H2:rat", "dim 0"},
                    {"1-neighborly", "false"},
                    {"chordal", "true"},
                    {"euler", "1"},
                    {"f-vector", "9,27,19"},
                    {"golod:integral", "NotGolod"},
                    {"golod:field:2", "Golod"},
                    {"golod:field:3", "Golod"},
                    {"golod:field:rat", "Golod"}}});

    out.push_back({"torus_7",
                   "seven-vertex torus with complete 1-skeleton",
                   torus_7(),
                   {{"H1:int", "Z^2"},
                    {"H2:int", "Z"},
                    {"1-neighborly", "true"},
                    {"closed-surface", "true"},
                    {"euler", "0"},
                    {"f-vector", "7,21,14"},
                    {"golod:integral", "Golod"}}});

    out.push_back({"torus_9",
                   "nine-vertex grid torus",
                   torus_9(),
                   {{"H1:int", "Z^2"},
                    {"H2:int", "Z"},
                    {"1-neighborly", "false"},
                    {"closed-surface", "true"},
                    {"euler", "0"},
                    {"f-vector", "9,27,18"},
                    {"golod:integral", "NotGolod"}}});

    return out;
}

}  // namespace

const std::vector<NamedComplex>& all() {
    static const std::vector<NamedComplex> fixtures = build_all();
    return fixtures;
}

const NamedComplex* find(const std::string& name) {
    for (const auto& nc : all())
        if (nc.name == name) return &nc;
    return nullptr;
}

}  // namespace corpus
}  // namespace golod
