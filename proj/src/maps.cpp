#include "golod/maps.hpp"

#include <algorithm>
#include <set>

#include "golod/errors.hpp"

namespace golod {

SimplicialMap SimplicialMap::from_vertices(SimplicialComplex source, SimplicialComplex target,
                                           std::vector<int> vmap) {
    if (static_cast<int>(vmap.size()) != source.vertex_count())
        throw NotSimplicialError("vertex assignment size does not match source");
    for (int w : vmap)
        if (w < 1 || w > target.vertex_count())
            throw NotSimplicialError("vertex image " + std::to_string(w) + " outside target");
    for (const auto& f : source.facets()) {
        Simplex image;
        for (int v : f) image.push_back(vmap[v - 1]);
        image = canonical_simplex(std::move(image));
        if (!target.has_face(image))
            throw NotSimplicialError("image of face " + simplex_to_string(f) + " is not a face");
    }
    SimplicialMap m;
    m.source_ = std::move(source);
    m.target_ = std::move(target);
    m.vmap_ = std::move(vmap);
    return m;
}

SimplicialMap SimplicialMap::collapse_map(SimplicialComplex source, SimplicialComplex target) {
    SimplicialMap m;
    m.source_ = std::move(source);
    m.target_ = std::move(target);
    m.collapse_ = true;
    return m;
}

SimplicialMap SimplicialMap::identity(const SimplicialComplex& K) {
    std::vector<int> vmap(K.vertex_count());
    for (int v = 1; v <= K.vertex_count(); ++v) vmap[v - 1] = v;
    return from_vertices(K, K, std::move(vmap));
}

IntMatrix SimplicialMap::chain_matrix(const ChainComplex& src_cc, const ChainComplex& dst_cc,
                                      int d) const {
    IntMatrix F(dst_cc.basis_size(d), src_cc.basis_size(d));
    if (d == -1) {
        if (F.rows() == 1 && F.cols() == 1) F.at(0, 0) = 1;
        return F;
    }
    if (collapse_) return F;
    const auto& basis = src_cc.basis(d);
    for (size_t j = 0; j < basis.size(); ++j) {
        std::vector<int> image;
        for (int v : basis[j]) image.push_back(vmap_[v - 1]);
        // degenerate image: repeated vertices kill the chain
        std::set<int> distinct(image.begin(), image.end());
        if (distinct.size() != image.size()) continue;
        int inversions = 0;
        for (size_t a = 0; a < image.size(); ++a)
            for (size_t b = a + 1; b < image.size(); ++b)
                if (image[a] > image[b]) ++inversions;
        Simplex sorted(distinct.begin(), distinct.end());
        int row = dst_cc.face_index(d, sorted);
        if (row < 0) throw NotSimplicialError("face image missing from target complex");
        F.at(row, static_cast<int>(j)) = (inversions % 2 == 0) ? 1 : -1;
    }
    return F;
}

SimplicialMap SimplicialMap::after(const SimplicialMap& f) const {
    if (!(f.target_ == source_)) throw NotSimplicialError("composition target/source mismatch");
    if (collapse_ || f.collapse_) return collapse_map(f.source_, target_);
    std::vector<int> vmap(f.vmap_.size());
    for (size_t i = 0; i < f.vmap_.size(); ++i) vmap[i] = vmap_[f.vmap_[i] - 1];
    return from_vertices(f.source_, target_, std::move(vmap));
}

InducedMap induced_between(std::shared_ptr<const HomologyPresentation> domain,
                           std::shared_ptr<const HomologyPresentation> codomain,
                           const IntMatrix& chain_level_map, Coefficient coeff) {
    InducedMap out;
    out.coeff = coeff;
    out.domain = std::move(domain);
    out.codomain = std::move(codomain);
    auto sol = solve(out.codomain->lattice_snf, chain_level_map * out.domain->lattice);
    if (!sol) throw Error("chain map does not preserve the cycle lattice");
    out.gen_images = std::move(*sol);
    return out;
}

bool InducedMap::is_zero() const {
    if (coeff.kind() == Coefficient::Kind::Rationals) {
        // zero on free parts: every image is torsion, i.e. a rational
        // combination of the relations
        const IntMatrix& R = codomain->relations;
        return rank(IntMatrix::hstack(R, gen_images)) == codomain->relations_snf.rank();
    }
    return codomain->classes_are_zero(gen_images);
}

IntMatrix InducedMap::matrix() const {
    // images of the domain's canonical generators, written against the
    // codomain's canonical generators
    IntMatrix W = codomain->relations_snf.U * (gen_images * domain->gen_lattice_coords);
    const int k = codomain->lattice_gens();
    const int r = codomain->relations_snf.rank();
    std::vector<int> rows;
    for (int i = 0; i < k; ++i) {
        mpz_class inv = i < r ? codomain->relations_snf.diag[i] : mpz_class(0);
        if (inv != 1) rows.push_back(i);
    }
    IntMatrix M(static_cast<int>(rows.size()), W.cols());
    for (size_t i = 0; i < rows.size(); ++i) {
        const mpz_class& inv = codomain->gen_invariants[i];
        for (int j = 0; j < W.cols(); ++j) {
            mpz_class e = W.at(rows[i], j);
            if (inv != 0) {
                mpz_mod(e.get_mpz_t(), e.get_mpz_t(), inv.get_mpz_t());
            }
            M.at(static_cast<int>(i), j) = e;
        }
    }
    return M;
}

InducedMap induced_on_homology(const SimplicialMap& f, int n, Coefficient coeff,
                               HomologyCache* cache) {
    const long q = coeff.modulus();
    ChainComplex src_cc = chain_complex(f.source(), true);
    ChainComplex dst_cc = chain_complex(f.target(), true);
    IntMatrix F = f.chain_matrix(src_cc, dst_cc, n);
    std::shared_ptr<const HomologyPresentation> dom, cod;
    if (cache) {
        dom = cache->homology(f.source(), n, q);
        cod = cache->homology(f.target(), n, q);
    } else {
        dom = std::make_shared<const HomologyPresentation>(
            homology_pair(src_cc.boundary(n), src_cc.boundary(n + 1), q));
        cod = std::make_shared<const HomologyPresentation>(
            homology_pair(dst_cc.boundary(n), dst_cc.boundary(n + 1), q));
    }
    return induced_between(std::move(dom), std::move(cod), F, coeff);
}

InducedMap induced_on_cohomology(const SimplicialMap& f, int n, Coefficient coeff,
                                 HomologyCache* cache) {
    const long q = coeff.modulus();
    ChainComplex src_cc = chain_complex(f.source(), true);
    ChainComplex dst_cc = chain_complex(f.target(), true);
    IntMatrix Ft = f.chain_matrix(src_cc, dst_cc, n).transpose();
    // f^* runs from the cohomology of the target to that of the source
    std::shared_ptr<const HomologyPresentation> dom, cod;
    if (cache) {
        dom = cache->cohomology(f.target(), n, q);
        cod = cache->cohomology(f.source(), n, q);
    } else {
        dom = std::make_shared<const HomologyPresentation>(
            homology_pair(dst_cc.boundary(n + 1).transpose(), dst_cc.boundary(n).transpose(), q));
        cod = std::make_shared<const HomologyPresentation>(
            homology_pair(src_cc.boundary(n + 1).transpose(), src_cc.boundary(n).transpose(), q));
    }
    return induced_between(std::move(dom), std::move(cod), Ft, coeff);
}

ProductMapData product_map(const SimplicialComplex& K, const std::vector<int>& I,
                           const std::vector<int>& J) {
    if (I.empty() || J.empty()) throw EmptySubsetError();
    std::vector<int> Is = I, Js = J;
    std::sort(Is.begin(), Is.end());
    std::sort(Js.begin(), Js.end());
    std::vector<int> U;
    std::set_union(Is.begin(), Is.end(), Js.begin(), Js.end(), std::back_inserter(U));
    std::vector<int> common;
    std::set_intersection(Is.begin(), Is.end(), Js.begin(), Js.end(), std::back_inserter(common));

    ProductMapData out;
    out.restriction = K.full_subcomplex(U);
    out.join_complex = join(K.full_subcomplex(Is), K.full_subcomplex(Js));
    out.union_labels = U;
    if (!common.empty()) {
        out.map = std::make_unique<SimplicialMap>(
            SimplicialMap::collapse_map(out.restriction, out.join_complex));
        return out;
    }
    std::vector<int> vmap(U.size());
    for (size_t idx = 0; idx < U.size(); ++idx) {
        int label = U[idx];
        auto it = std::lower_bound(Is.begin(), Is.end(), label);
        if (it != Is.end() && *it == label) {
            vmap[idx] = static_cast<int>(it - Is.begin()) + 1;
        } else {
            auto jt = std::lower_bound(Js.begin(), Js.end(), label);
            vmap[idx] = static_cast<int>(Is.size()) + static_cast<int>(jt - Js.begin()) + 1;
        }
    }
    out.map = std::make_unique<SimplicialMap>(
        SimplicialMap::from_vertices(out.restriction, out.join_complex, std::move(vmap)));
    return out;
}

JointDeletionMap joint_deletion_map(const SimplicialComplex& K, int n, Coefficient coeff,
                                    const std::vector<int>& vertices, HomologyCache* cache) {
    if (K.vertex_count() < 2) throw OutOfRangeError("joint deletion needs at least 2 vertices");
    const long q = coeff.modulus();
    HomologyCache local;
    HomologyCache* C = cache ? cache : &local;

    std::vector<int> vs = vertices;
    if (vs.empty())
        for (int v = 1; v <= K.vertex_count(); ++v) vs.push_back(v);

    JointDeletionMap out;
    out.coeff = coeff;
    out.target_pres = C->homology(K, n, q);
    ChainComplex K_cc = chain_complex(K, true);
    out.chain_basis = K_cc.basis(n);

    const int k = out.target_pres->lattice_gens();
    IntMatrix assembled(k, 0);
    for (int v : vs) {
        SimplicialComplex dl = K.vertex_deletion(v);
        std::vector<int> labels;
        for (int u = 1; u <= K.vertex_count(); ++u)
            if (u != v) labels.push_back(u);
        SimplicialMap inc = SimplicialMap::from_vertices(dl, K, labels);
        auto dl_pres = C->homology(dl, n, q);
        if (dl_pres->lattice.cols() == 0) continue;
        ChainComplex dl_cc = chain_complex(dl, true);
        IntMatrix F = inc.chain_matrix(dl_cc, K_cc, n);
        auto coords = solve(out.target_pres->lattice_snf, F * dl_pres->lattice);
        if (!coords) throw Error("inclusion chain map escapes the cycle lattice");
        assembled = IntMatrix::hstack(assembled, *coords);
    }
    out.assembled = std::move(assembled);

    IntMatrix full = IntMatrix::hstack(out.assembled, out.target_pres->relations);
    SmithForm s = smith_normal_form(full, /*want_uinv=*/true);
    AbelianGroup g;
    g.free_rank = k - s.rank();
    for (const auto& d : s.diag)
        if (d > 1) g.torsion.push_back(d);
    out.coker = g;
    out.surjective = g.is_trivial();
    if (!out.surjective) {
        int bad = -1;
        for (int i = 0; i < k; ++i) {
            mpz_class inv = i < s.rank() ? s.diag[i] : mpz_class(0);
            if (inv != 1) {
                bad = i;
                break;
            }
        }
        IntMatrix coords(k, 1);
        for (int i = 0; i < k; ++i) coords.at(i, 0) = s.Uinv.at(i, bad);
        out.unhit_chain = out.target_pres->lattice * coords;
        out.unhit_coords = std::move(coords);
    }
    return out;
}

}  // namespace golod
