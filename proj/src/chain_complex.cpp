#include "golod/chain_complex.hpp"

#include <algorithm>

#include "golod/errors.hpp"

namespace golod {

const std::vector<Simplex>& ChainComplex::basis(int d) const {
    static const std::vector<Simplex> empty;
    int idx = d + 1;
    if (idx < 0 || idx >= static_cast<int>(bases.size())) return empty;
    return bases[idx];
}

int ChainComplex::basis_size(int d) const { return static_cast<int>(basis(d).size()); }

int ChainComplex::face_index(int d, const Simplex& s) const {
    const auto& b = basis(d);
    auto it = std::lower_bound(b.begin(), b.end(), s);
    if (it == b.end() || *it != s) return -1;
    return static_cast<int>(it - b.begin());
}

IntMatrix ChainComplex::boundary(int d) const {
    const auto& src = basis(d);
    const auto& dst = basis(d - 1);
    IntMatrix B(static_cast<int>(dst.size()), static_cast<int>(src.size()));
    for (size_t j = 0; j < src.size(); ++j) {
        const Simplex& s = src[j];
        int sign = 1;
        for (size_t i = 0; i < s.size(); ++i) {
            Simplex face;
            face.reserve(s.size() - 1);
            for (size_t k = 0; k < s.size(); ++k)
                if (k != i) face.push_back(s[k]);
            int row = face_index(d - 1, face);
            if (row >= 0) B.at(row, static_cast<int>(j)) += sign;
            sign = -sign;
        }
    }
    return B;
}

ChainComplex chain_complex(const SimplicialComplex& K, bool reduced) {
    ChainComplex C;
    C.dim = K.dim();
    C.reduced = reduced;
    C.bases.resize(C.dim + 2);
    C.bases[0] = reduced ? std::vector<Simplex>{Simplex{}} : std::vector<Simplex>{};
    for (int d = 0; d <= C.dim; ++d) C.bases[d + 1] = K.faces(d);
    return C;
}

}  // namespace golod
