#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <vector>

namespace golod {

// Dense matrix over the integers with exact arbitrary-precision entries.
// No floating point appears anywhere in this library.
class IntMatrix {
  public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}
    IntMatrix(int rows, int cols, std::initializer_list<long> entries);

    static IntMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    mpz_class& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
    const mpz_class& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

    bool is_zero() const;
    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    IntMatrix operator*(const IntMatrix& o) const;
    IntMatrix transpose() const;
    IntMatrix col(int j) const;

    // [A | B] side by side (row counts must agree).
    static IntMatrix hstack(const IntMatrix& A, const IntMatrix& B);

    void swap_rows(int i, int j);
    void swap_cols(int i, int j);
    void negate_row(int i);
    void negate_col(int j);
    // row[i] += c * row[k]
    void add_row_multiple(int i, int k, const mpz_class& c);
    void add_col_multiple(int j, int k, const mpz_class& c);

    std::string to_string() const;

  private:
    int rows_ = 0, cols_ = 0;
    std::vector<mpz_class> a_;
};

// Determinant by fraction-free (Bareiss) elimination; square matrices only.
mpz_class det(const IntMatrix& A);

}  // namespace golod
