#include <vector>

#include <gmpxx.h>

#include "doctest.h"
#include "stickelgraph/character.hpp"
#include "stickelgraph/cyclotomic.hpp"
#include "stickelgraph/group.hpp"
#include "stickelgraph/polynomial.hpp"

using namespace stickelgraph;

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1) == IntPolynomial({-1, 1}));
    CHECK(cyclotomic_polynomial(2) == IntPolynomial({1, 1}));
    CHECK(cyclotomic_polynomial(4) == IntPolynomial({1, 0, 1}));
    CHECK(cyclotomic_polynomial(6) == IntPolynomial({1, -1, 1}));
    CHECK(cyclotomic_polynomial(9) == IntPolynomial({1, 0, 0, 1, 0, 0, 1}));
    CHECK(cyclotomic_polynomial(12) == IntPolynomial({1, 0, -1, 0, 1}));
    CHECK(cyclotomic_polynomial(15) == IntPolynomial({1, -1, 0, 1, -1, 1, 0, -1, 1}));
    CHECK_THROWS_AS(cyclotomic_polynomial(0), std::invalid_argument);

    // Product over divisors recovers x^n - 1.
    for (unsigned long n : {6UL, 10UL, 12UL}) {
        IntPolynomial prod({1});
        for (unsigned long d = 1; d <= n; ++d)
            if (n % d == 0) prod = prod * cyclotomic_polynomial(d);
        std::vector<mpz_class> xn(n + 1, 0);
        xn[0] = -1;
        xn[n] = 1;
        CHECK(prod == IntPolynomial(xn));
    }
}

TEST_CASE("cyclotomic number arithmetic") {
    const CyclotomicNumber i = CyclotomicNumber::zeta_power(4, 1);
    CHECK(i * i == CyclotomicNumber::from_rational(4, mpq_class(-1)));
    CHECK(i.pow(2).is_rational());
    CHECK(i.pow(2).to_rational() == mpq_class(-1));
    CHECK(i.pow(0) == CyclotomicNumber::one(4));

    const CyclotomicNumber z3 = CyclotomicNumber::zeta_power(3, 1);
    CHECK((CyclotomicNumber::one(3) + z3 + z3 * z3).is_zero());
    CHECK_FALSE(z3.is_rational());
    CHECK_THROWS_AS(z3.to_rational(), std::domain_error);

    CHECK(CyclotomicNumber::zeta_power(6, 7) == CyclotomicNumber::zeta_power(6, 1));
    CHECK(CyclotomicNumber::zeta_power(5, 2) * CyclotomicNumber::zeta_power(5, 4) ==
          CyclotomicNumber::zeta_power(5, 1));

    const CyclotomicNumber q = CyclotomicNumber::from_rational(7, mpq_class(3, 7));
    CHECK(q.to_rational() == mpq_class(3, 7));
    CHECK((q - q).is_zero());

    // Values of different orders never mix.
    CHECK_THROWS_AS(z3 + i, std::invalid_argument);
}

TEST_CASE("cyclotomic polynomial ring over a fixed order") {
    const CyclotomicNumber one = CyclotomicNumber::one(3);
    const CyclotomicNumber z = CyclotomicNumber::zeta_power(3, 1);
    const CycPolynomial a(3, {one, -one});       // 1 - u
    const CycPolynomial b(3, {one, -z});         // 1 - zeta u
    const CycPolynomial prod = a * b;
    CHECK(prod.degree() == 2);
    CHECK(prod.vanishing_order_at_one() == 1);
    CHECK((a * a * b).vanishing_order_at_one() == 2);
    CHECK(b.vanishing_order_at_one() == 0);
    CHECK(b.at_one() == one - z);
    CHECK(prod.at_one().is_zero());
    CHECK_THROWS_AS(CycPolynomial(3).vanishing_order_at_one(), std::invalid_argument);
}

TEST_CASE("characters of a cyclic group") {
    const FiniteAbelianGroup g({4});
    const auto chars = all_characters(g);
    REQUIRE(chars.size() == 4);
    CHECK(chars[0].is_trivial());
    for (const auto& psi : chars) CHECK(psi.value_order() == 4);

    // Multiplicativity on all pairs.
    for (const auto& psi : chars)
        for (long a = 0; a < 4; ++a)
            for (long b = 0; b < 4; ++b)
                CHECK(psi.value(g.add({a}, {b})) == psi.value({a}) * psi.value({b}));

    // Inverse characters multiply to the trivial one.
    for (const auto& psi : chars) {
        const Character inv = psi.inverse();
        for (long a = 0; a < 4; ++a)
            CHECK(psi.value({a}) * inv.value({a}) == CyclotomicNumber::one(4));
    }

    // Parity at the unique involution: exponent parity.
    REQUIRE(chars[1].odd.has_value());
    CHECK_FALSE(*chars[0].odd);
    CHECK(*chars[1].odd);
    CHECK_FALSE(*chars[2].odd);
    CHECK(*chars[3].odd);

    // No parity without a unique involution.
    const auto odd_group_chars = all_characters(FiniteAbelianGroup({5}));
    for (const auto& psi : odd_group_chars) CHECK_FALSE(psi.odd.has_value());
    const auto klein_chars = all_characters(FiniteAbelianGroup({2, 2}));
    for (const auto& psi : klein_chars) CHECK_FALSE(psi.odd.has_value());
}
