#include "golod/golod.hpp"

#include <cstdint>
#include <cstdlib>
#include <functional>

#include "golod/errors.hpp"

namespace golod {

void for_each_subset_lex_of(const std::vector<int>& universe,
                            const std::function<bool(const std::vector<int>&)>& fn) {
    std::vector<int> cur;
    bool stop = false;
    std::function<void(size_t)> rec = [&](size_t next) {
        for (size_t i = next; i < universe.size() && !stop; ++i) {
            cur.push_back(universe[i]);
            if (!fn(cur)) stop = true;
            if (!stop) rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
}

void for_each_subset_lex(int m, const std::function<bool(const std::vector<int>&)>& fn) {
    std::vector<int> universe(m);
    for (int v = 1; v <= m; ++v) universe[v - 1] = v;
    for_each_subset_lex_of(universe, fn);
}

namespace {

std::map<long, int> factor_small(mpz_class x) {
    std::map<long, int> out;
    for (long p = 2; mpz_class(p) * p <= x; p += (p == 2 ? 1 : 2)) {
        int c = 0;
        while (mpz_divisible_ui_p(x.get_mpz_t(), static_cast<unsigned long>(p))) {
            mpz_divexact_ui(x.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(p));
            ++c;
        }
        if (c) out[p] = c;
    }
    if (x > 1) {
        if (!x.fits_slong_p()) throw Error("torsion exponent prime factor exceeds long range");
        out[x.get_si()] += 1;
    }
    return out;
}

// p -> largest e with p^e dividing a torsion exponent of H_n or H_{n-1} of K
// or a vertex deletion of K.
std::map<long, int> schedule_prime_caps(const SimplicialComplex& K, int n, HomologyCache* C) {
    std::map<long, int> caps;
    auto absorb = [&](const SimplicialComplex& X) {
        for (int d : {n, n - 1}) {
            mpz_class e = C->homology(X, d, 0)->group.exponent();
            if (e <= 1) continue;
            for (auto& [p, r] : factor_small(e)) caps[p] = std::max(caps[p], r);
        }
    };
    absorb(K);
    if (K.vertex_count() >= 2)
        for (int v = 1; v <= K.vertex_count(); ++v) absorb(K.vertex_deletion(v));
    return caps;
}

long checked_pow(long p, int r) {
    long x = 1;
    for (int i = 0; i < r; ++i) {
        if (x > (1L << 60) / p) throw Error("coefficient modulus overflow");
        x *= p;
    }
    return x;
}

}  // namespace

std::vector<Coefficient> coefficient_schedule(const SimplicialComplex& K, int n,
                                              HomologyCache* cache) {
    HomologyCache local;
    HomologyCache* C = cache ? cache : &local;
    std::vector<Coefficient> out{Coefficient::integers()};
    for (auto& [p, e] : schedule_prime_caps(K, n, C))
        for (int r = 1; r <= e + 1; ++r) out.push_back(Coefficient::cyclic(checked_pow(p, r)));
    return out;
}

BreakabilityResult vertex_breakable(const SimplicialComplex& K, int n, Coefficient coeff,
                                    HomologyCache* cache) {
    JointDeletionMap jd = joint_deletion_map(K, n, coeff, {}, cache);
    BreakabilityResult out;
    out.breakable = !jd.surjective;
    out.coker = jd.coker;
    if (out.breakable) {
        out.witness_coefficient = coeff;
        out.unhit_cycle = jd.unhit_chain;
        out.chain_basis = jd.chain_basis;
    }
    return out;
}

BreakabilityResult vertex_breakable_any(const SimplicialComplex& K, int n, HomologyCache* cache) {
    HomologyCache local;
    HomologyCache* C = cache ? cache : &local;
    BreakabilityResult found;
    for (const auto& coeff : coefficient_schedule(K, n, C)) {
        BreakabilityResult r = vertex_breakable(K, n, coeff, C);
        if (r.breakable) {
            found = std::move(r);
            break;
        }
    }
    const char* xcheck = std::getenv("GOLOD_SCHEDULE_XCHECK");
    if (!found.breakable && xcheck && *xcheck == '1') {
        // One prime power past each cap must not flip the verdict.
        for (auto& [p, e] : schedule_prime_caps(K, n, C)) {
            Coefficient extra = Coefficient::cyclic(checked_pow(p, e + 2));
            if (vertex_breakable(K, n, extra, C).breakable)
                throw Error("coefficient schedule cap violated at Z/" +
                            std::to_string(extra.modulus()));
        }
    }
    return found;
}

bool pair_breakable(const SimplicialComplex& K, int v, int w, int n, Coefficient coeff,
                    HomologyCache* cache) {
    if (v == w) throw OutOfRangeError("pair must consist of distinct vertices");
    JointDeletionMap jd = joint_deletion_map(K, n, coeff, {std::min(v, w), std::max(v, w)}, cache);
    return !jd.surjective;
}

EdgeProductResult edge_product_criterion(const SimplicialComplex& K, int v, int w, int n,
                                         Coefficient coeff, HomologyCache* cache) {
    HomologyCache local;
    HomologyCache* C = cache ? cache : &local;
    if (!pair_breakable(K, v, w, n, coeff, C))
        throw HypothesisNotMetError("pair {" + K.vertex_name(v) + "," + K.vertex_name(w) +
                                    "} is not breakable over " + coeff.to_string() +
                                    " in degree " + std::to_string(n));
    if (K.vertex_count() < 3) throw OutOfRangeError("edge/product criterion needs >= 3 vertices");
    std::vector<int> I{std::min(v, w), std::max(v, w)}, J;
    for (int u = 1; u <= K.vertex_count(); ++u)
        if (u != v && u != w) J.push_back(u);
    ProductMapData data = product_map(K, I, J);
    InducedMap ind = induced_on_homology(*data.map, n, coeff, C);
    EdgeProductResult out;
    out.is_edge = K.has_edge(v, w);
    out.product_trivial = ind.is_zero();
    out.product = std::move(ind);
    return out;
}

std::string GolodReport::verdict_string() const {
    switch (verdict) {
        case Verdict::Golod:
            return "Golod";
        case Verdict::NotGolod:
            return "NotGolod";
        case Verdict::NoObstruction:
            return "NoObstruction";
    }
    return "?";
}

namespace {

// Shared skeleton of the integral and single-field decision procedures:
// chordality, then breakable-but-not-1-neighborly full subcomplex search in
// lexicographic subset order.
GolodReport golod_breakability_check(const SimplicialComplex& K,
                                     const std::optional<Coefficient>& field, std::string scope) {
    if (K.dim() > 2)
        throw DimensionTooHighError("decision procedure applies to complexes of dimension <= 2");
    GolodReport rep;
    rep.scope = std::move(scope);

    ChordalityResult chord = is_chordal(K);
    if (!chord.chordal) {
        rep.verdict = GolodReport::Verdict::NotGolod;
        GolodWitness w;
        w.kind = GolodWitness::Kind::NonChordalCycle;
        w.cycle = chord.witness_cycle;
        rep.witness = std::move(w);
        return rep;
    }

    HomologyCache cache;
    long examined = 0;
    for_each_subset_lex(K.vertex_count(), [&](const std::vector<int>& I) -> bool {
        ++examined;
        // H_2 of a 2-complex over fewer than 4 vertices vanishes over every
        // coefficient system, as does H_2 of anything without 2-faces.
        if (I.size() < 4) return true;
        SimplicialComplex KI = K.full_subcomplex(I);
        if (KI.dim() < 2) return true;
        if (KI.is_k_neighborly(1)) return true;
        BreakabilityResult br = field ? vertex_breakable(KI, 2, *field, &cache)
                                      : vertex_breakable_any(KI, 2, &cache);
        if (!br.breakable) return true;

        GolodWitness w;
        w.kind = GolodWitness::Kind::BreakableNotNeighborly;
        w.subset = I;
        bool pair_found = false;
        for (size_t a = 0; a < I.size() && !pair_found; ++a)
            for (size_t b = a + 1; b < I.size() && !pair_found; ++b)
                if (!K.has_edge(I[a], I[b])) {
                    w.missing_pair = {I[a], I[b]};
                    pair_found = true;
                }
        // translate the witness chain basis back to K's labels
        for (auto& s : br.chain_basis)
            for (auto& vtx : s) vtx = I[vtx - 1];
        w.breakability = std::move(br);
        rep.verdict = GolodReport::Verdict::NotGolod;
        rep.witness = std::move(w);
        return false;
    });
    rep.subsets_examined = examined;
    return rep;
}

}  // namespace

GolodReport check_golod_integral_2dim(const SimplicialComplex& K) {
    return golod_breakability_check(K, std::nullopt, "integral (all rings)");
}

GolodReport check_golod_field(const SimplicialComplex& K, Coefficient field) {
    if (!field.is_field()) throw Error("check_golod_field requires field coefficients");
    return golod_breakability_check(K, field, "field " + field.to_string());
}

namespace {

std::vector<int> mask_to_subset(std::uint64_t mask) {
    std::vector<int> out;
    for (int v = 1; mask; ++v, mask >>= 1)
        if (mask & 1) out.push_back(v);
    return out;
}

struct SubsetInfo {
    SimplicialComplex complex;
    std::shared_ptr<const ChainComplex> cc;
    std::vector<long> cohdim;  // degree 0..dim
    std::vector<std::shared_ptr<const HomologyPresentation>> cohpres;
};

long pres_dim(const HomologyPresentation& p, const Coefficient& field) {
    return field.kind() == Coefficient::Kind::Rationals
               ? p.group.free_rank
               : static_cast<long>(p.group.torsion.size());
}

SubsetInfo make_subset_info(const SimplicialComplex& K, std::uint64_t mask,
                            const Coefficient& field) {
    SubsetInfo info;
    info.complex = K.full_subcomplex(mask_to_subset(mask));
    info.cc = std::make_shared<const ChainComplex>(chain_complex(info.complex, true));
    const long q = field.modulus();
    for (int d = 0; d <= info.complex.dim(); ++d) {
        auto pres = std::make_shared<const HomologyPresentation>(homology_pair(
            info.cc->boundary(d + 1).transpose(), info.cc->boundary(d).transpose(), q));
        info.cohdim.push_back(pres_dim(*pres, field));
        info.cohpres.push_back(pres);
    }
    return info;
}

}  // namespace

GolodReport product_scan(const SimplicialComplex& K, Coefficient field, int jobs) {
    if (!field.is_field()) throw Error("product_scan requires field coefficients");
    if (K.dim() > 3)
        throw DimensionTooHighError("product vanishing decides Golodness only up to dimension 3");
    const int m = K.vertex_count();
    if (m > 62) throw OutOfRangeError("product_scan supports at most 62 vertices");
    const long q = field.modulus();

    GolodReport rep;
    rep.scope = "products over " + field.to_string();

    std::map<std::uint64_t, SubsetInfo> infos;
    auto info = [&](std::uint64_t mask) -> const SubsetInfo& {
        auto it = infos.find(mask);
        if (it == infos.end()) it = infos.emplace(mask, make_subset_info(K, mask, field)).first;
        return it->second;
    };

    // Checks one disjoint pair; returns a witness when some m_{I1,I2}^* is
    // nonzero on reduced cohomology.
    auto check_pair = [&](std::uint64_t m1, std::uint64_t m2) -> std::optional<GolodWitness> {
        const SubsetInfo& u = info(m1 | m2);
        const SubsetInfo& a = info(m1);
        const SubsetInfo& b = info(m2);
        std::optional<ProductMapData> pm;
        std::shared_ptr<const ChainComplex> join_cc;
        for (int d = 1; d <= u.complex.dim(); ++d) {
            if (u.cohdim[d] == 0) continue;
            // Künneth over a field: the join has no reduced cohomology in
            // degree d unless some H^i ⊗ H^{d-1-i} of the factors survives.
            long source_dim = 0;
            for (int i = 0; i <= d - 1; ++i) {
                long da = i < static_cast<int>(a.cohdim.size()) ? a.cohdim[i] : 0;
                long db = d - 1 - i < static_cast<int>(b.cohdim.size()) ? b.cohdim[d - 1 - i] : 0;
                source_dim += da * db;
            }
            if (source_dim == 0) continue;
            if (!pm) {
                pm = product_map(K, mask_to_subset(m1), mask_to_subset(m2));
                join_cc = std::make_shared<const ChainComplex>(chain_complex(pm->join_complex, true));
            }
            auto dom = std::make_shared<const HomologyPresentation>(homology_pair(
                join_cc->boundary(d + 1).transpose(), join_cc->boundary(d).transpose(), q));
            IntMatrix Ft = pm->map->chain_matrix(*u.cc, *join_cc, d).transpose();
            InducedMap ind = induced_between(dom, u.cohpres[d], Ft, field);
            if (!ind.is_zero()) {
                GolodWitness w;
                w.kind = GolodWitness::Kind::NonvanishingProduct;
                w.I1 = mask_to_subset(m1);
                w.I2 = mask_to_subset(m2);
                w.degree = d;
                w.coefficient = field;
                w.product_matrix = ind.matrix();
                return w;
            }
        }
        return std::nullopt;
    };

    // Unordered disjoint pairs, streamed with I1 lexicographically first.
    (void)jobs;  // pair checks share lazily built subset data; kept serial
    long examined = 0;
    std::optional<GolodWitness> found;
    for_each_subset_lex(m, [&](const std::vector<int>& I1) -> bool {
        std::uint64_t m1 = 0;
        for (int v : I1) m1 |= std::uint64_t(1) << (v - 1);
        std::vector<int> comp;
        for (int u = 1; u <= m; ++u)
            if (!(m1 >> (u - 1) & 1)) comp.push_back(u);
        if (comp.empty()) return true;
        bool keep_going = true;
        for_each_subset_lex_of(comp, [&](const std::vector<int>& I2) -> bool {
            if (!(I1 < I2)) return true;  // counted once, with I1 first
            ++examined;
            std::uint64_t m2 = 0;
            for (int v : I2) m2 |= std::uint64_t(1) << (v - 1);
            if (auto w = check_pair(m1, m2)) {
                found = std::move(w);
                keep_going = false;
                return false;
            }
            return true;
        });
        return keep_going;
    });
    rep.subsets_examined = examined;
    if (found) {
        rep.verdict = GolodReport::Verdict::NotGolod;
        rep.witness = std::move(found);
    } else {
        rep.verdict = GolodReport::Verdict::Golod;
    }
    return rep;
}

GolodReport ring_product_search(const SimplicialComplex& K, long n) {
    Coefficient coeff = Coefficient::cyclic(n);
    GolodReport rep;
    rep.scope = "ring " + coeff.to_string();
    HomologyCache cache;
    const int m = K.vertex_count();
    for (int v = 1; v <= m; ++v) {
        for (int w = v + 1; w <= m; ++w) {
            if (K.has_edge(v, w)) continue;
            if (!pair_breakable(K, v, w, 2, coeff, &cache)) continue;
            EdgeProductResult epr = edge_product_criterion(K, v, w, 2, coeff, &cache);
            if (epr.product_trivial) continue;
            GolodWitness wit;
            wit.kind = GolodWitness::Kind::NonvanishingProduct;
            wit.I1 = {v, w};
            for (int u = 1; u <= m; ++u)
                if (u != v && u != w) wit.I2.push_back(u);
            wit.degree = 2;
            wit.product_on_homology = true;
            wit.coefficient = coeff;
            wit.product_matrix = epr.product.matrix();
            wit.missing_pair = {v, w};
            rep.verdict = GolodReport::Verdict::NotGolod;
            rep.witness = std::move(wit);
            return rep;
        }
    }
    rep.verdict = GolodReport::Verdict::NoObstruction;
    return rep;
}

std::map<std::pair<int, int>, long> BettiTable::aggregated() const {
    std::map<std::pair<int, int>, long> out;
    for (const auto& [key, rank] : entries)
        out[{key.first, static_cast<int>(key.second.size())}] += rank;
    return out;
}

long BettiTable::total_rank(int i) const {
    long total = 0;
    for (const auto& [key, rank] : entries)
        if (key.first == i) total += rank;
    return total;
}

BettiTable bigraded_betti(const SimplicialComplex& K, Coefficient field) {
    if (!field.is_field()) throw Error("bigraded Betti numbers require field coefficients");
    BettiTable table;
    table.field = field;
    const long q = field.modulus();
    HomologyCache cache;
    for_each_subset_lex(K.vertex_count(), [&](const std::vector<int>& I) {
        SimplicialComplex KI = K.full_subcomplex(I);
        for (int d = 0; d <= KI.dim(); ++d) {
            long dim = pres_dim(*cache.cohomology(KI, d, q), field);
            if (dim > 0) table.entries[{d + static_cast<int>(I.size()) + 1, I}] = dim;
        }
        return true;
    });
    return table;
}

}  // namespace golod
