#include "golod/int_matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace golod {

IntMatrix::IntMatrix(int rows, int cols, std::initializer_list<long> entries)
    : IntMatrix(rows, cols) {
    if (static_cast<size_t>(rows) * cols != entries.size())
        throw std::invalid_argument("entry count does not match shape");
    size_t k = 0;
    for (long e : entries) a_[k++] = e;
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix I(n, n);
    for (int i = 0; i < n; ++i) I.at(i, i) = 1;
    return I;
}

bool IntMatrix::is_zero() const {
    for (const auto& x : a_)
        if (x != 0) return false;
    return true;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
    IntMatrix out(rows_, o.cols_);
    mpz_class acc;
    for (int i = 0; i < rows_; ++i) {
        for (int k = 0; k < cols_; ++k) {
            const mpz_class& aik = at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const mpz_class& bkj = o.at(k, j);
                if (bkj == 0) continue;
                out.at(i, j) += aik * bkj;
            }
        }
    }
    return out;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

IntMatrix IntMatrix::col(int j) const {
    IntMatrix out(rows_, 1);
    for (int i = 0; i < rows_; ++i) out.at(i, 0) = at(i, j);
    return out;
}

IntMatrix IntMatrix::hstack(const IntMatrix& A, const IntMatrix& B) {
    if (A.rows() != B.rows()) throw std::invalid_argument("hstack row mismatch");
    IntMatrix out(A.rows(), A.cols() + B.cols());
    for (int i = 0; i < A.rows(); ++i) {
        for (int j = 0; j < A.cols(); ++j) out.at(i, j) = A.at(i, j);
        for (int j = 0; j < B.cols(); ++j) out.at(i, A.cols() + j) = B.at(i, j);
    }
    return out;
}

void IntMatrix::swap_rows(int i, int j) {
    if (i == j) return;
    for (int k = 0; k < cols_; ++k) std::swap(at(i, k), at(j, k));
}

void IntMatrix::swap_cols(int i, int j) {
    if (i == j) return;
    for (int k = 0; k < rows_; ++k) std::swap(at(k, i), at(k, j));
}

void IntMatrix::negate_row(int i) {
    for (int k = 0; k < cols_; ++k) at(i, k) = -at(i, k);
}

void IntMatrix::negate_col(int j) {
    for (int k = 0; k < rows_; ++k) at(k, j) = -at(k, j);
}

void IntMatrix::add_row_multiple(int i, int k, const mpz_class& c) {
    if (c == 0) return;
    for (int j = 0; j < cols_; ++j) at(i, j) += c * at(k, j);
}

void IntMatrix::add_col_multiple(int j, int k, const mpz_class& c) {
    if (c == 0) return;
    for (int i = 0; i < rows_; ++i) at(i, j) += c * at(i, k);
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        os << (i ? "\n[" : "[");
        for (int j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j).get_str();
        os << "]";
    }
    return os.str();
}

mpz_class det(const IntMatrix& A) {
    if (A.rows() != A.cols()) throw std::invalid_argument("det of non-square matrix");
    int n = A.rows();
    if (n == 0) return 1;
    IntMatrix M = A;
    mpz_class prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (M.at(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (M.at(i, k) != 0) {
                    p = i;
                    break;
                }
            if (p < 0) return 0;
            M.swap_rows(k, p);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                mpz_class num = M.at(i, j) * M.at(k, k) - M.at(i, k) * M.at(k, j);
                mpz_class q;
                mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
                M.at(i, j) = q;
            }
            M.at(i, k) = 0;
        }
        prev = M.at(k, k);
    }
    return sign * M.at(n - 1, n - 1);
}

}  // namespace golod
