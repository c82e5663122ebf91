#include "golod/snf.hpp"

#include <stdexcept>

namespace golod {

IntMatrix SmithForm::d_matrix(int rows, int cols) const {
    IntMatrix D(rows, cols);
    for (size_t i = 0; i < diag.size(); ++i) D.at(static_cast<int>(i), static_cast<int>(i)) = diag[i];
    return D;
}

namespace {

// abs-compare without copies
int cmp_abs(const mpz_class& a, const mpz_class& b) {
    return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t());
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& A, bool want_uinv) {
    const int m = A.rows(), n = A.cols();
    IntMatrix M = A;
    IntMatrix U = IntMatrix::identity(m);
    IntMatrix V = IntMatrix::identity(n);
    IntMatrix Uinv = want_uinv ? IntMatrix::identity(m) : IntMatrix();

    int t = 0;
    const int bound = std::min(m, n);
    mpz_class q, r;
    while (t < bound) {
        // smallest nonzero entry of the trailing submatrix becomes the pivot
        int pi = -1, pj = -1;
        for (int i = t; i < m; ++i)
            for (int j = t; j < n; ++j) {
                const mpz_class& x = M.at(i, j);
                if (x == 0) continue;
                if (pi < 0 || cmp_abs(x, M.at(pi, pj)) < 0) {
                    pi = i;
                    pj = j;
                }
            }
        if (pi < 0) break;
        M.swap_rows(t, pi);
        U.swap_rows(t, pi);
        if (want_uinv) Uinv.swap_cols(t, pi);
        M.swap_cols(t, pj);
        V.swap_cols(t, pj);

        for (;;) {
            bool clean = true;
            // clear the pivot column by Euclidean steps
            for (int i = t + 1; i < m; ++i) {
                if (M.at(i, t) == 0) continue;
                mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), M.at(i, t).get_mpz_t(),
                            M.at(t, t).get_mpz_t());
                mpz_class neg_q = -q;
                M.add_row_multiple(i, t, neg_q);
                U.add_row_multiple(i, t, neg_q);
                if (want_uinv) Uinv.add_col_multiple(t, i, q);
                if (M.at(i, t) != 0) {
                    M.swap_rows(t, i);
                    U.swap_rows(t, i);
                    if (want_uinv) Uinv.swap_cols(t, i);
                    clean = false;
                }
            }
            // clear the pivot row
            for (int j = t + 1; j < n; ++j) {
                if (M.at(t, j) == 0) continue;
                mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), M.at(t, j).get_mpz_t(),
                            M.at(t, t).get_mpz_t());
                mpz_class neg_q = -q;
                M.add_col_multiple(j, t, neg_q);
                V.add_col_multiple(j, t, neg_q);
                if (M.at(t, j) != 0) {
                    M.swap_cols(t, j);
                    V.swap_cols(t, j);
                    clean = false;
                }
            }
            if (!clean) continue;

            // enforce divisibility of the trailing block by the pivot
            bool fixed = false;
            for (int i = t + 1; i < m && !fixed; ++i)
                for (int j = t + 1; j < n && !fixed; ++j) {
                    if (mpz_divisible_p(M.at(i, j).get_mpz_t(), M.at(t, t).get_mpz_t())) continue;
                    M.add_row_multiple(t, i, 1);
                    U.add_row_multiple(t, i, 1);
                    if (want_uinv) Uinv.add_col_multiple(i, t, -1);
                    fixed = true;
                }
            if (!fixed) break;
        }
        if (M.at(t, t) < 0) {
            M.negate_row(t);
            U.negate_row(t);
            if (want_uinv) Uinv.negate_col(t);
        }
        ++t;
    }

    SmithForm out;
    out.U = std::move(U);
    out.V = std::move(V);
    out.Uinv = std::move(Uinv);
    for (int i = 0; i < t; ++i) out.diag.push_back(M.at(i, i));
    return out;
}

mpz_class AbelianGroup::torsion_order() const {
    mpz_class o = 1;
    for (const auto& t : torsion) o *= t;
    return o;
}

std::string AbelianGroup::to_string() const {
    if (is_trivial()) return "0";
    std::string out;
    if (free_rank == 1)
        out = "Z";
    else if (free_rank > 1)
        out = "Z^" + std::to_string(free_rank);
    for (const auto& t : torsion) {
        if (!out.empty()) out += " + ";
        out += "Z/" + t.get_str();
    }
    return out;
}

AbelianGroup cokernel(const IntMatrix& A) {
    SmithForm s = smith_normal_form(A);
    AbelianGroup g;
    g.free_rank = A.rows() - s.rank();
    for (const auto& d : s.diag)
        if (d > 1) g.torsion.push_back(d);
    return g;
}

IntMatrix kernel_basis(const IntMatrix& A) {
    SmithForm s = smith_normal_form(A);
    int r = s.rank();
    IntMatrix out(A.cols(), A.cols() - r);
    for (int i = 0; i < A.cols(); ++i)
        for (int j = r; j < A.cols(); ++j) out.at(i, j - r) = s.V.at(i, j);
    return out;
}

bool is_surjective_mod(const IntMatrix& A, const mpz_class& n) {
    if (n == 0) return cokernel(A).is_trivial();
    IntMatrix NI(A.rows(), A.rows());
    for (int i = 0; i < A.rows(); ++i) NI.at(i, i) = n;
    return cokernel(IntMatrix::hstack(A, NI)).is_trivial();
}

std::optional<IntMatrix> solve(const SmithForm& s, const IntMatrix& B) {
    const int m = s.U.rows(), n = s.V.rows();
    if (B.rows() != m) throw std::invalid_argument("solve: shape mismatch");
    const int r = s.rank();
    IntMatrix UB = s.U * B;
    IntMatrix Y(n, B.cols());
    for (int j = 0; j < B.cols(); ++j) {
        for (int i = 0; i < m; ++i) {
            if (i < r) {
                if (!mpz_divisible_p(UB.at(i, j).get_mpz_t(), s.diag[i].get_mpz_t()))
                    return std::nullopt;
                if (i < n) {
                    mpz_class q;
                    mpz_divexact(q.get_mpz_t(), UB.at(i, j).get_mpz_t(), s.diag[i].get_mpz_t());
                    Y.at(i, j) = q;
                }
            } else if (UB.at(i, j) != 0) {
                return std::nullopt;
            }
        }
    }
    return s.V * Y;
}

std::optional<IntMatrix> solve(const IntMatrix& A, const IntMatrix& B) {
    return solve(smith_normal_form(A), B);
}

bool in_column_span(const IntMatrix& A, const IntMatrix& B) {
    return solve(A, B).has_value();
}

int rank(const IntMatrix& A) {
    return smith_normal_form(A).rank();
}

}  // namespace golod
