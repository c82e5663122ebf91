#include "golod/homology.hpp"

#include <map>
#include <sstream>

#include "golod/errors.hpp"

namespace golod {

namespace {

IntMatrix scaled_identity(int n, long q) {
    IntMatrix M(n, n);
    for (int i = 0; i < n; ++i) M.at(i, i) = q;
    return M;
}

}  // namespace

IntMatrix HomologyPresentation::coords_of(const IntMatrix& chains) const {
    auto sol = solve(lattice_snf, chains);
    if (!sol) throw Error("chain is not a cycle for this presentation");
    return *sol;
}

bool HomologyPresentation::classes_are_zero(const IntMatrix& coords) const {
    return solve(relations_snf, coords).has_value();
}

HomologyPresentation homology_pair(const IntMatrix& d_out, const IntMatrix& d_in, long q) {
    if (d_out.cols() != d_in.rows()) throw Error("chain complex degree mismatch");
    if (q < 0) throw Error("modulus must be non-negative");
    const int b = d_out.cols();
    const int c = d_out.rows();

    HomologyPresentation P;
    P.modulus = q;
    P.chain_rank = b;

    if (q == 0) {
        P.lattice = kernel_basis(d_out);
    } else {
        // {x : d_out x ≡ 0 mod q} = projection of ker [d_out | q I] to the
        // first b coordinates; the projection of a kernel basis is a basis.
        IntMatrix ker = kernel_basis(IntMatrix::hstack(d_out, scaled_identity(c, q)));
        IntMatrix lat(b, ker.cols());
        for (int i = 0; i < b; ++i)
            for (int j = 0; j < ker.cols(); ++j) lat.at(i, j) = ker.at(i, j);
        P.lattice = std::move(lat);
    }
    P.lattice_snf = smith_normal_form(P.lattice);

    IntMatrix rhs = q == 0 ? d_in : IntMatrix::hstack(d_in, scaled_identity(b, q));
    auto rel = solve(P.lattice_snf, rhs);
    if (!rel) throw Error("boundaries escape the cycle lattice (is ∂∘∂ = 0?)");
    P.relations = std::move(*rel);
    P.relations_snf = smith_normal_form(P.relations, /*want_uinv=*/true);

    const int k = P.relations.rows();
    const int r = P.relations_snf.rank();
    P.group.free_rank = k - r;
    for (const auto& d : P.relations_snf.diag)
        if (d > 1) P.group.torsion.push_back(d);

    std::vector<int> surviving;
    for (int i = 0; i < k; ++i) {
        mpz_class inv = i < r ? P.relations_snf.diag[i] : mpz_class(0);
        if (inv != 1) {
            surviving.push_back(i);
            P.gen_invariants.push_back(inv);
        }
    }
    P.gen_lattice_coords = IntMatrix(k, static_cast<int>(surviving.size()));
    for (int i = 0; i < k; ++i)
        for (size_t j = 0; j < surviving.size(); ++j)
            P.gen_lattice_coords.at(i, static_cast<int>(j)) = P.relations_snf.Uinv.at(i, surviving[j]);
    P.gen_chains = P.lattice * P.gen_lattice_coords;
    return P;
}

std::string HomologyResult::describe() const {
    if (coeff.is_field()) return "dim " + std::to_string(dimension);
    return group.to_string();
}

namespace {

HomologyResult finish_result(Coefficient coeff, std::vector<Simplex> basis,
                             HomologyPresentation pres) {
    HomologyResult out;
    out.coeff = coeff;
    out.group = pres.group;
    switch (coeff.kind()) {
        case Coefficient::Kind::Rationals:
            out.dimension = pres.group.free_rank;
            break;
        case Coefficient::Kind::PrimeField:
            out.dimension = static_cast<long>(pres.group.torsion.size());
            break;
        default:
            out.dimension = 0;
    }
    out.chain_basis = std::move(basis);
    out.pres = std::make_shared<const HomologyPresentation>(std::move(pres));
    return out;
}

}  // namespace

HomologyResult homology(const SimplicialComplex& K, int n, Coefficient coeff, bool reduced) {
    ChainComplex C = chain_complex(K, reduced);
    return finish_result(coeff, C.basis(n),
                         homology_pair(C.boundary(n), C.boundary(n + 1), coeff.modulus()));
}

HomologyResult cohomology(const SimplicialComplex& K, int n, Coefficient coeff, bool reduced) {
    ChainComplex C = chain_complex(K, reduced);
    return finish_result(
        coeff, C.basis(n),
        homology_pair(C.boundary(n + 1).transpose(), C.boundary(n).transpose(), coeff.modulus()));
}

namespace {

std::string complex_key(const SimplicialComplex& K) {
    std::ostringstream os;
    os << K.vertex_count();
    for (const auto& f : K.facets()) {
        os << '|';
        for (int v : f) os << v << ',';
    }
    return os.str();
}

}  // namespace

std::shared_ptr<const HomologyPresentation> HomologyCache::get(const SimplicialComplex& K, int n,
                                                               long q, bool dual) {
    std::string ck = complex_key(K);
    std::ostringstream os;
    os << ck << '#' << n << '#' << q << '#' << dual;
    const std::string key = os.str();
    auto it = table_.find(key);
    if (it != table_.end()) return it->second;

    auto cit = chains_.find(ck);
    if (cit == chains_.end())
        cit = chains_.emplace(ck, std::make_shared<const ChainComplex>(chain_complex(K, true)))
                  .first;
    const ChainComplex& C = *cit->second;
    HomologyPresentation pres =
        dual ? homology_pair(C.boundary(n + 1).transpose(), C.boundary(n).transpose(), q)
             : homology_pair(C.boundary(n), C.boundary(n + 1), q);
    auto sp = std::make_shared<const HomologyPresentation>(std::move(pres));
    table_.emplace(key, sp);
    return sp;
}

std::shared_ptr<const HomologyPresentation> HomologyCache::homology(const SimplicialComplex& K,
                                                                    int n, long q) {
    return get(K, n, q, false);
}

std::shared_ptr<const HomologyPresentation> HomologyCache::cohomology(const SimplicialComplex& K,
                                                                      int n, long q) {
    return get(K, n, q, true);
}

}  // namespace golod
