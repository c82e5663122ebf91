#include "golod/report.hpp"

#include "golod/chain_complex.hpp"
#include "golod/errors.hpp"
#include "golod/homology.hpp"
#include "golod/maps.hpp"

namespace golod {

std::string fnv1a_digest(const std::string& content) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : content) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

namespace {

Json names_of(const SimplicialComplex& K, const std::vector<int>& labels) {
    Json out = Json::array();
    for (int v : labels) out.push_back(K.vertex_name(v));
    return out;
}

long to_long(const mpz_class& x) {
    if (!x.fits_slong_p()) throw Error("report entry exceeds 64-bit range");
    return x.get_si();
}

Json chain_to_json(const IntMatrix& chain, const std::vector<Simplex>& basis) {
    Json out = Json::array();
    for (int i = 0; i < chain.rows(); ++i) {
        if (chain.at(i, 0) == 0) continue;
        Json term;
        term["face"] = basis[i];
        term["c"] = to_long(chain.at(i, 0));
        out.push_back(std::move(term));
    }
    return out;
}

Json matrix_to_json(const IntMatrix& M) {
    Json rows = Json::array();
    for (int i = 0; i < M.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < M.cols(); ++j) row.push_back(to_long(M.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

Json witness_to_json(const GolodWitness& w, const SimplicialComplex& K) {
    Json j;
    switch (w.kind) {
        case GolodWitness::Kind::NonChordalCycle:
            j["kind"] = "non-chordal-cycle";
            j["cycle"] = w.cycle;
            j["cycle_names"] = names_of(K, w.cycle);
            break;
        case GolodWitness::Kind::BreakableNotNeighborly: {
            j["kind"] = "breakable-not-neighborly";
            j["subset"] = w.subset;
            j["subset_names"] = names_of(K, w.subset);
            j["missing_pair"] = {w.missing_pair.first, w.missing_pair.second};
            j["missing_pair_names"] =
                names_of(K, {w.missing_pair.first, w.missing_pair.second});
            const BreakabilityResult& br = *w.breakability;
            j["coefficient"] = br.witness_coefficient->to_string();
            j["cokernel"] = br.coker.to_string();
            if (br.unhit_cycle) j["unhit_cycle"] = chain_to_json(*br.unhit_cycle, br.chain_basis);
            break;
        }
        case GolodWitness::Kind::NonvanishingProduct:
            j["kind"] = "nonvanishing-product";
            j["I1"] = w.I1;
            j["I1_names"] = names_of(K, w.I1);
            j["I2"] = w.I2;
            j["I2_names"] = names_of(K, w.I2);
            j["degree"] = w.degree;
            j["side"] = w.product_on_homology ? "homology" : "cohomology";
            j["coefficient"] = w.coefficient->to_string();
            if (w.product_matrix) j["matrix"] = matrix_to_json(*w.product_matrix);
            break;
    }
    return j;
}

Json golod_report_to_json(const GolodReport& rep, const SimplicialComplex& K) {
    Json j;
    j["verdict"] = rep.verdict_string();
    j["scope"] = rep.scope;
    j["witness"] = rep.witness ? witness_to_json(*rep.witness, K) : Json(nullptr);
    j["subsets_examined"] = rep.subsets_examined;
    return j;
}

namespace {

bool fail(std::string* why, const std::string& msg) {
    if (why) *why = msg;
    return false;
}

bool verify_breakable_witness(const SimplicialComplex& K, const Json& w, std::string* why) {
    std::vector<int> subset = w.at("subset").get<std::vector<int>>();
    auto pair = w.at("missing_pair").get<std::vector<int>>();
    if (pair.size() != 2) return fail(why, "missing_pair must have two vertices");
    if (K.has_edge(pair[0], pair[1])) return fail(why, "named pair is an edge");
    for (int v : pair)
        if (std::find(subset.begin(), subset.end(), v) == subset.end())
            return fail(why, "pair not inside the subset");
    SimplicialComplex KI = K.full_subcomplex(subset);
    if (KI.is_k_neighborly(1)) return fail(why, "subcomplex is 1-neighborly after all");
    Coefficient coeff = Coefficient::parse(w.at("coefficient").get<std::string>());

    JointDeletionMap jd = joint_deletion_map(KI, 2, coeff);
    if (jd.surjective) return fail(why, "joint deletion map is surjective after all");
    if (jd.coker.to_string() != w.at("cokernel").get<std::string>())
        return fail(why, "cokernel mismatch: engine says " + jd.coker.to_string());

    if (w.contains("unhit_cycle")) {
        // rebuild the chain in the subcomplex's own labels
        std::map<int, int> relabel;
        for (size_t i = 0; i < subset.size(); ++i) relabel[subset[i]] = static_cast<int>(i) + 1;
        ChainComplex C = chain_complex(KI, true);
        const auto& basis = C.basis(2);
        IntMatrix chain(static_cast<int>(basis.size()), 1);
        for (const auto& term : w.at("unhit_cycle")) {
            Simplex face;
            for (int v : term.at("face").get<std::vector<int>>()) {
                auto it = relabel.find(v);
                if (it == relabel.end()) return fail(why, "cycle face outside the subset");
                face.push_back(it->second);
            }
            face = canonical_simplex(std::move(face));
            int idx = C.face_index(2, face);
            if (idx < 0) return fail(why, "cycle face is not a 2-face of the subcomplex");
            chain.at(idx, 0) = term.at("c").get<long>();
        }
        // a cycle modulo the coefficient ...
        IntMatrix bd = C.boundary(2) * chain;
        const long q = coeff.modulus();
        for (int i = 0; i < bd.rows(); ++i) {
            bool ok = q == 0 ? bd.at(i, 0) == 0 : mpz_class(bd.at(i, 0) % q) == 0;
            if (!ok) return fail(why, "witness chain is not a cycle");
        }
        // ... whose class the joint map misses
        IntMatrix coords = jd.target_pres->coords_of(chain);
        IntMatrix image = IntMatrix::hstack(jd.assembled, jd.target_pres->relations);
        if (in_column_span(image, coords))
            return fail(why, "witness class lies in the image after all");
    }
    return true;
}

bool verify_product_witness(const SimplicialComplex& K, const Json& w, std::string* why) {
    std::vector<int> I1 = w.at("I1").get<std::vector<int>>();
    std::vector<int> I2 = w.at("I2").get<std::vector<int>>();
    int degree = w.at("degree").get<int>();
    Coefficient coeff = Coefficient::parse(w.at("coefficient").get<std::string>());
    ProductMapData pm = product_map(K, I1, I2);
    bool on_homology = w.at("side").get<std::string>() == "homology";
    InducedMap ind = on_homology ? induced_on_homology(*pm.map, degree, coeff)
                                 : induced_on_cohomology(*pm.map, degree, coeff);
    if (ind.is_zero()) return fail(why, "product re-evaluates to zero");
    return true;
}

}  // namespace

bool verify_witness(const SimplicialComplex& K, const Json& witness, std::string* why) {
    try {
        std::string kind = witness.at("kind").get<std::string>();
        if (kind == "non-chordal-cycle") {
            std::vector<int> cycle = witness.at("cycle").get<std::vector<int>>();
            if (!is_induced_cycle(K, cycle))
                return fail(why, "cycle is not an induced cycle of length >= 4");
            return true;
        }
        if (kind == "breakable-not-neighborly") return verify_breakable_witness(K, witness, why);
        if (kind == "nonvanishing-product") return verify_product_witness(K, witness, why);
        return fail(why, "unknown witness kind: " + kind);
    } catch (const Json::exception& e) {
        return fail(why, std::string("malformed witness: ") + e.what());
    } catch (const Error& e) {
        return fail(why, std::string("verification error: ") + e.what());
    }
}

}  // namespace golod
