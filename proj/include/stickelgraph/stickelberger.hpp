#pragma once

#include <memory>
#include <string>
#include <vector>

#include "stickelgraph/bowenfranks.hpp"
#include "stickelgraph/character.hpp"
#include "stickelgraph/voltage.hpp"

namespace stickelgraph {

bool is_prime(long n);

// Smallest positive primitive root modulo the odd prime p. Every
// reported quantity is independent of this choice; a canonical one
// keeps outputs deterministic.
long smallest_primitive_root(long p);

// Largest admissible prime for the cover constructions, 199 unless the
// STICKELGRAPH_PRIME_CAP environment variable overrides it.
long prime_cap();

// The integral Stickelberger element of Z[Delta]: the group element
// sigma_a sits at the discrete log of a base the smallest primitive
// root, and the element carries coefficient -a at sigma_a^{-1} summed
// over a = 1..p-1.
GroupRingElement stickelberger_element(long p);

// The bouquet cover realizing the Stickelberger element: one loop with
// the voltage of sigma_1 plus, for each a, a loops with the voltage of
// sigma_a^{-1}, all on a single vertex. gamma is the equivariant zeta,
// a degree-1 polynomial with gamma(1) equal to the Stickelberger
// element; construction verifies that identity and strong connectivity
// of the derived digraph.
struct StickelbergerCover {
    long p = 0;
    long generator = 0;
    FiniteAbelianGroup group;
    VoltageAssignment voltage;
    DerivedData derived;
    GroupRingPolynomial gamma;
};

StickelbergerCover stickelberger_cover(long p);

// (1/p) sum of a * psi(sigma_a); rejects the trivial character, for
// which the sum is not a Bernoulli value.
CyclotomicNumber bernoulli_b1(long p, const Character& psi);

// Minus class number of the p-th cyclotomic field, by the exact
// product 2p * prod over odd psi of (-1/2 B_{1,psi^{-1}}).
mpz_class minus_class_number_product(long p);

// Same value through the resultant of x^{(p-1)/2} + 1 against the
// power-table polynomial, dividing out the predictable powers; avoids
// cyclotomic arithmetic entirely.
mpz_class minus_class_number_resultant(long p);

// Routed: both routes cross-checked for small p, resultant alone past
// p = 60 where the cyclotomic product grows expensive.
mpz_class minus_class_number(long p);

// f(x) with coefficient [generator^{-k} mod p] on x^k; also verifies
// that the circulant matrix with first row -(1, [g], [g^2], ...)
// equals the BF operator of the derived digraph in construction order,
// which ties the power-table route to the graph route.
IntPolynomial circulant_poly(long p, long generator);

// |Res(g, k)| for g = 1 + x + ... + x^{(p-3)/2} and
// k = (x - 1)(x^{(p-1)/2} + 1); equals |m(Y)|.
mpz_class m_via_resultant(long p);

// Y+ = derived digraph modulo the order-2 subgroup: BF structure, zeta
// data, and the closed-form identities for its torsion, free rank,
// special value, m, and gamma(1).
struct PlusQuotientReport {
    long p = 0;
    ZetaReport zeta;
    mpz_class m_plus;
    mpz_class g_star_plus;
    bool identities_hold = false;
    std::string detail;  // empty when identities_hold
};

PlusQuotientReport plus_quotient_analysis(long p);

// Torsion of BF(Y) against p^{(p-1)/2} times the minus class number,
// with the torsion recomputed from an independently built circulant
// matrix, the three |m| routes compared, and the plus-part data
// attached.
struct TheoremAReport {
    long p = 0;
    mpz_class h_minus;
    std::vector<mpz_class> bf_torsion_factors;
    std::size_t bf_free_rank = 0;
    mpz_class bf_torsion_order;
    mpz_class m_y;
    mpz_class m_y_plus;
    mpz_class g_star_y;
    mpz_class g_star_y_plus;
    bool theorem_a_holds = false;
    bool three_way_m_agreement = false;
    std::string detail;  // every failed check, plus-part ones included
};

TheoremAReport verify_theorem_a(long p);

}  // namespace stickelgraph
