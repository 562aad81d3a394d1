#pragma once

#include <gmpxx.h>

#include <vector>

#include "stickelgraph/polynomial.hpp"

namespace stickelgraph {

// The n-th cyclotomic polynomial, monic over Z.
IntPolynomial cyclotomic_polynomial(unsigned long n);

// Element of Q(zeta_n): an integer polynomial in zeta_n of degree less
// than phi(n) over a positive denominator, with no common factor
// between the denominator and the numerator content. The
// representation is canonical, so equality is structural.
class CyclotomicNumber {
public:
    explicit CyclotomicNumber(unsigned long order, IntPolynomial num = IntPolynomial(),
                              mpz_class den = 1);
    static CyclotomicNumber zero(unsigned long order) { return CyclotomicNumber(order); }
    static CyclotomicNumber one(unsigned long order);
    static CyclotomicNumber from_rational(unsigned long order, const mpq_class& q);
    static CyclotomicNumber zeta_power(unsigned long order, long k);

    unsigned long order() const { return order_; }
    const IntPolynomial& numerator() const { return num_; }
    const mpz_class& denominator() const { return den_; }

    CyclotomicNumber operator+(const CyclotomicNumber& o) const;
    CyclotomicNumber operator-(const CyclotomicNumber& o) const;
    CyclotomicNumber operator-() const;
    CyclotomicNumber operator*(const CyclotomicNumber& o) const;
    CyclotomicNumber pow(unsigned long e) const;
    bool operator==(const CyclotomicNumber& o) const;

    bool is_zero() const { return num_.is_zero(); }
    bool is_rational() const { return num_.degree() <= 0; }
    // Rejects genuinely irrational values.
    mpq_class to_rational() const;

private:
    void normalize();

    unsigned long order_;
    IntPolynomial num_;
    mpz_class den_;
};

// Polynomial in u over Q(zeta_n), ascending coefficients, trailing
// zeros stripped.
class CycPolynomial {
public:
    explicit CycPolynomial(unsigned long order);
    CycPolynomial(unsigned long order, std::vector<CyclotomicNumber> coeffs);
    static CycPolynomial from_int_poly(unsigned long order, const IntPolynomial& p);

    unsigned long order() const { return order_; }
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    CyclotomicNumber coeff(std::size_t k) const;
    const std::vector<CyclotomicNumber>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    CycPolynomial operator+(const CycPolynomial& o) const;
    CycPolynomial operator-(const CycPolynomial& o) const;
    CycPolynomial operator*(const CycPolynomial& o) const;
    bool operator==(const CycPolynomial& o) const;

    CyclotomicNumber at_one() const;
    // Multiplicity of the root u = 1; rejects the zero polynomial.
    unsigned long vanishing_order_at_one() const;

private:
    void normalize();

    unsigned long order_;
    std::vector<CyclotomicNumber> coeffs_;
};

}  // namespace stickelgraph
