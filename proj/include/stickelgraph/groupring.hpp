#pragma once

#include <gmpxx.h>

#include <vector>

#include "stickelgraph/group.hpp"

namespace stickelgraph {

// Element of the integral group ring Z[G] for finite abelian G, held
// as a dense coefficient vector over the canonical element order.
class GroupRingElement {
public:
    explicit GroupRingElement(FiniteAbelianGroup g);
    static GroupRingElement unit(const FiniteAbelianGroup& g);
    static GroupRingElement basis(const FiniteAbelianGroup& g,
                                  const FiniteAbelianGroup::Element& e);

    const FiniteAbelianGroup& group() const { return group_; }
    const mpz_class& coeff_by_index(long i) const { return coeffs_[i]; }
    const mpz_class& coeff(const FiniteAbelianGroup::Element& e) const;
    void set_coeff(const FiniteAbelianGroup::Element& e, mpz_class c);

    GroupRingElement operator+(const GroupRingElement& o) const;
    GroupRingElement operator-(const GroupRingElement& o) const;
    GroupRingElement operator-() const;
    GroupRingElement operator*(const GroupRingElement& o) const;
    GroupRingElement operator*(const mpz_class& c) const;
    bool operator==(const GroupRingElement& o) const;

    bool is_zero() const;
    // Sum of all coefficients, the image under G -> 1.
    mpz_class augmentation() const;

private:
    FiniteAbelianGroup group_;
    std::vector<mpz_class> coeffs_;
};

// Polynomial in u over Z[G], coefficients ascending, trailing zeros
// stripped.
class GroupRingPolynomial {
public:
    explicit GroupRingPolynomial(FiniteAbelianGroup g);
    GroupRingPolynomial(FiniteAbelianGroup g, std::vector<GroupRingElement> coeffs);
    static GroupRingPolynomial constant(GroupRingElement c);

    const FiniteAbelianGroup& group() const { return group_; }
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    GroupRingElement coeff(std::size_t k) const;
    const std::vector<GroupRingElement>& coeffs() const { return coeffs_; }

    GroupRingPolynomial operator+(const GroupRingPolynomial& o) const;
    GroupRingPolynomial operator-(const GroupRingPolynomial& o) const;
    GroupRingPolynomial operator*(const GroupRingPolynomial& o) const;
    bool operator==(const GroupRingPolynomial& o) const;
    bool is_zero() const { return coeffs_.empty(); }

    // Value at u = 1, the coefficient sum.
    GroupRingElement at_one() const;

private:
    void normalize();

    FiniteAbelianGroup group_;
    std::vector<GroupRingElement> coeffs_;
};

// Determinant over the commutative ring Z[G][u] by expansion with
// memoized minors; exponential in the dimension, fine through 8.
GroupRingPolynomial grp_determinant(const std::vector<std::vector<GroupRingPolynomial>>& m);

// Coefficientwise pushforward along G -> G/H.
GroupRingElement project(const GroupRingElement& x, const QuotientGroup& q);
GroupRingPolynomial project(const GroupRingPolynomial& x, const QuotientGroup& q);

}  // namespace stickelgraph
