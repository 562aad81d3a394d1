#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

#include "stickelgraph/polynomial.hpp"

namespace stickelgraph {

// Dense matrix over Z with arbitrary-precision entries, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}
    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    mpz_class& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const mpz_class& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    IntMatrix transpose() const;
    IntMatrix operator*(const IntMatrix& o) const;
    IntMatrix operator-(const IntMatrix& o) const;
    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }

    // Square matrices only.
    IntMatrix power(unsigned long n) const;
    mpz_class trace() const;
    // Exact determinant by fraction-free (Bareiss) elimination.
    mpz_class determinant() const;

    bool is_square() const { return rows_ == cols_; }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<mpz_class> e_;
};

// Diagonalization U * M * V = D with U, V unimodular. invariant_factors
// holds the full diagonal of D, length min(rows, cols): nonnegative,
// each entry dividing the next, trailing zeros last. The inverse
// transforms are accumulated alongside, so left_transform *
// left_inverse = I and likewise on the right.
struct SNFResult {
    std::vector<mpz_class> invariant_factors;
    IntMatrix left_transform;
    IntMatrix right_transform;
    IntMatrix left_inverse;
    IntMatrix right_inverse;
};

SNFResult smith_normal_form(const IntMatrix& m);

// det(I - a*u) as a polynomial in u, constant term 1. Computed by
// division-free minor expansion for n <= 8 and by exact evaluation at
// n+1 integer points plus interpolation for larger n.
IntPolynomial reversed_char_poly(const IntMatrix& a);

// Single evaluation det(I - u0*a), shared with tests as the
// cross-check for the interpolated route.
mpz_class reversed_char_poly_at(const IntMatrix& a, const mpz_class& u0);

}  // namespace stickelgraph
