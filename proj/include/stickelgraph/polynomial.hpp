#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace stickelgraph {

// Univariate polynomial over Z, coefficients ascending by degree.
// The zero polynomial is the empty coefficient vector; otherwise the
// leading coefficient is nonzero.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<mpz_class> coeffs);
    IntPolynomial(std::initializer_list<long> coeffs);

    static IntPolynomial constant(const mpz_class& c);
    // c * x^k
    static IntPolynomial monomial(const mpz_class& c, std::size_t k);

    bool is_zero() const { return coeffs_.empty(); }
    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    // Coefficient of x^k, zero beyond the degree.
    const mpz_class& coeff(std::size_t k) const;
    const std::vector<mpz_class>& coeffs() const { return coeffs_; }

    IntPolynomial operator+(const IntPolynomial& o) const;
    IntPolynomial operator-(const IntPolynomial& o) const;
    IntPolynomial operator-() const;
    IntPolynomial operator*(const IntPolynomial& o) const;
    IntPolynomial operator*(const mpz_class& c) const;
    bool operator==(const IntPolynomial& o) const { return coeffs_ == o.coeffs_; }

    mpz_class evaluate(const mpz_class& x) const;
    mpq_class evaluate(const mpq_class& x) const;

    IntPolynomial derivative() const;

    // Quotient of an exact division; throws std::domain_error when the
    // divisor does not divide exactly over Z.
    IntPolynomial divide_exact(const IntPolynomial& divisor) const;

    // gcd of all coefficients, nonnegative; 0 for the zero polynomial.
    mpz_class content() const;

    std::string to_string(const std::string& var = "u") const;

private:
    std::vector<mpz_class> coeffs_;
    void normalize();
};

// Data of the expansion p(1 + t): `order` is the least index with a
// nonzero coefficient (the vanishing order of p at 1), `special_value`
// that coefficient, `shifted` the full expansion in t.
struct TaylorAtOne {
    unsigned order;
    mpz_class special_value;
    IntPolynomial shifted;
};

// Rejects the zero polynomial.
TaylorAtOne taylor_at_one(const IntPolynomial& p);

// Resultant over Z via a subresultant polynomial remainder sequence.
// Res(a, b) = lc(a)^deg(b) * prod b(root) over the roots of a, with the
// usual conventions for constants: Res(c, b) = c^deg(b).
mpz_class resultant(const IntPolynomial& a, const IntPolynomial& b);

// Primitive gcd with positive leading coefficient; gcd(0, b) = +/-b.
IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b);

}  // namespace stickelgraph
