#pragma once

#include <optional>
#include <string>
#include <vector>

#include "golod/int_matrix.hpp"

namespace golod {

// Smith normal form U * A * V = D with U, V unimodular and D diagonal with
// positive invariant factors diag[0] | diag[1] | ... | diag[r-1].
struct SmithForm {
    IntMatrix U;     // rows x rows
    IntMatrix V;     // cols x cols
    IntMatrix Uinv;  // inverse of U, tracked on request
    std::vector<mpz_class> diag;
    int rank() const { return static_cast<int>(diag.size()); }
    IntMatrix d_matrix(int rows, int cols) const;
};

SmithForm smith_normal_form(const IntMatrix& A, bool want_uinv = false);

// Invariant-factor presentation of a finitely generated abelian group:
// Z^free_rank + Z/t_1 + ... + Z/t_k with t_1 | t_2 | ... and each t_i >= 2.
struct AbelianGroup {
    long free_rank = 0;
    std::vector<mpz_class> torsion;

    bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
    mpz_class exponent() const { return torsion.empty() ? mpz_class(1) : torsion.back(); }
    // Order of the torsion subgroup.
    mpz_class torsion_order() const;
    std::string to_string() const;
    bool operator==(const AbelianGroup&) const = default;
};

// Z^rows / column-span(A).
AbelianGroup cokernel(const IntMatrix& A);

// Columns form a basis of { x : A x = 0 } (a direct summand of Z^cols).
IntMatrix kernel_basis(const IntMatrix& A);

// Whether the induced map (Z/n)^cols -> (Z/n)^rows is surjective; n = 0
// means over Z.  Decided over Z via the augmented matrix [A | n I].
bool is_surjective_mod(const IntMatrix& A, const mpz_class& n);

// Solves A X = B over Z; returns std::nullopt when no integer solution exists.
std::optional<IntMatrix> solve(const IntMatrix& A, const IntMatrix& B);
std::optional<IntMatrix> solve(const SmithForm& snf_of_A, const IntMatrix& B);

// Whether every column of B lies in the integer column span of A.
bool in_column_span(const IntMatrix& A, const IntMatrix& B);

// rank over Q
int rank(const IntMatrix& A);

}  // namespace golod
