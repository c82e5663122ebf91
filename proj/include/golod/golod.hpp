#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "golod/complex.hpp"
#include "golod/homology.hpp"
#include "golod/maps.hpp"

namespace golod {

// Finite list of coefficient systems that decides vertex-breakability over
// arbitrary finitely generated abelian groups for the given degree: Z plus
// Z/p^r for every prime p dividing a torsion exponent of H_n or H_{n-1} of K
// or one of its vertex deletions, with r up to one past the p-part of the
// largest such exponent.  Always starts with Z; deterministic given (K, n).
std::vector<Coefficient> coefficient_schedule(const SimplicialComplex& K, int n,
                                              HomologyCache* cache = nullptr);

struct BreakabilityResult {
    bool breakable = false;
    std::optional<Coefficient> witness_coefficient;
    AbelianGroup coker;  // cokernel of the joint deletion map over the witness
    // A cycle (mod the witness modulus) whose class the joint map misses.
    std::optional<IntMatrix> unhit_cycle;
    std::vector<Simplex> chain_basis;
};

BreakabilityResult vertex_breakable(const SimplicialComplex& K, int n, Coefficient coeff,
                                    HomologyCache* cache = nullptr);

// Breakability over some finitely generated abelian group, decided by
// running the coefficient schedule.  With GOLOD_SCHEDULE_XCHECK=1 in the
// environment, additionally tests one prime power beyond each cap and fails
// loudly if that changes the verdict.
BreakabilityResult vertex_breakable_any(const SimplicialComplex& K, int n,
                                        HomologyCache* cache = nullptr);

// Whether (i_v)_* ⊕ (i_w)_* misses part of H_n(K; coeff).
bool pair_breakable(const SimplicialComplex& K, int v, int w, int n, Coefficient coeff,
                    HomologyCache* cache = nullptr);

struct EdgeProductResult {
    bool is_edge = false;
    bool product_trivial = false;
    InducedMap product;  // (m_{I,J})_* on H_n for I = {v,w}, J = [m] - {v,w}
};

// Requires pair_breakable(K, v, w, n, coeff); throws HypothesisNotMetError
// otherwise.  Under that hypothesis, is_edge == product_trivial.
EdgeProductResult edge_product_criterion(const SimplicialComplex& K, int v, int w, int n,
                                         Coefficient coeff, HomologyCache* cache = nullptr);

struct GolodWitness {
    enum class Kind { NonChordalCycle, BreakableNotNeighborly, NonvanishingProduct };
    Kind kind;

    std::vector<int> cycle;  // NonChordalCycle

    std::vector<int> subset;              // BreakableNotNeighborly: I
    std::pair<int, int> missing_pair{0, 0};  // a non-edge inside I
    std::optional<BreakabilityResult> breakability;

    std::vector<int> I1, I2;  // NonvanishingProduct
    int degree = 0;
    bool product_on_homology = false;  // ring search works in homology
    std::optional<Coefficient> coefficient;
    std::optional<IntMatrix> product_matrix;  // nonzero induced map, invariant coords
};

struct GolodReport {
    enum class Verdict { Golod, NotGolod, NoObstruction };
    Verdict verdict = Verdict::Golod;
    std::string scope;
    std::optional<GolodWitness> witness;
    long subsets_examined = 0;

    bool golod() const { return verdict == Verdict::Golod; }
    std::string verdict_string() const;
};

// Decision for 2-complexes over the integers (all coefficient rings of the
// schedule): chordal 1-skeleton plus "every full subcomplex with breakable
// second homology is 1-neighborly".  Witnesses are lexicographically
// smallest.  Throws DimensionTooHighError above dimension 2.
GolodReport check_golod_integral_2dim(const SimplicialComplex& K);

// Same shape of test with breakability over a single field.
GolodReport check_golod_field(const SimplicialComplex& K, Coefficient field);

// Direct product-vanishing oracle over a field: every induced map
// m_{I1,I2}^* on reduced cohomology must vanish; valid as a Golodness
// criterion for dim <= 3.  First nonvanishing product is the witness.
GolodReport product_scan(const SimplicialComplex& K, Coefficient field, int jobs = 1);

// Search for a nonvanishing product over Z/n among pair-breakable non-edges
// {v,w} (the conditional edge/product criterion).  Finds a NotGolod
// certificate or reports NoObstruction; it never certifies Golodness.
GolodReport ring_product_search(const SimplicialComplex& K, long n);

struct BettiTable {
    Coefficient field = Coefficient::rationals();
    // beta_{i,I} = dim_k reduced H^{i-|I|-1}(K_I; k), nonzero entries only.
    std::map<std::pair<int, std::vector<int>>, long> entries;
    // aggregated beta_{i,j} over |I| = j
    std::map<std::pair<int, int>, long> aggregated() const;
    long total_rank(int i) const;  // dim Tor_i
};

BettiTable bigraded_betti(const SimplicialComplex& K, Coefficient field);

// Lexicographic enumeration of non-empty subsets of [m] (or of a sorted
// universe); the callback returns false to stop.
void for_each_subset_lex(int m, const std::function<bool(const std::vector<int>&)>& fn);
void for_each_subset_lex_of(const std::vector<int>& universe,
                            const std::function<bool(const std::vector<int>&)>& fn);

}  // namespace golod
