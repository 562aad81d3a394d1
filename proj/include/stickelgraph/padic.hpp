#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "stickelgraph/character.hpp"
#include "stickelgraph/cyclotomic.hpp"
#include "stickelgraph/groupring.hpp"
#include "stickelgraph/polynomial.hpp"

namespace stickelgraph {

// Arithmetic context for the unramified extension of the ell-adic
// integers containing the n-th roots of unity, truncated at ell^k.
// Ring elements are integer polynomials of degree < f with
// coefficients in [0, ell^k), multiplied modulo (modulus, ell^k).
// modulus is a monic degree-f divisor of the n-th cyclotomic
// polynomial at that precision; zeta is a primitive n-th root of unity
// in the ring, and every quantity here is pinned by the canonical
// choices in unramified_context.
struct PadicContext {
    long ell = 0;
    unsigned long n = 0;
    unsigned long f = 0;  // residue degree, the order of ell mod n
    unsigned long k = 0;
    mpz_class ell_pow_k;
    IntPolynomial modulus;
    IntPolynomial zeta;
};

// The irreducible factors of the n-th cyclotomic polynomial mod ell,
// each of degree ord(ell mod n), sorted by coefficient vector.
// Requires ell prime and not dividing n.
std::vector<IntPolynomial> phi_factors_mod_ell(long ell, unsigned long n);

// Canonical context: the first factor in the sorted order, lifted, and
// among its roots the one with the least mod-ell reduction.
PadicContext unramified_context(long ell, unsigned long n, unsigned long k);

// Any other (factor, root) choice; indices follow the sorted factor
// order and the sorted order of the mod-ell root reductions. The
// canonical context is variant (0, 0).
PadicContext unramified_context_variant(long ell, unsigned long n, unsigned long k,
                                        std::size_t factor_index, std::size_t root_index);

// psi evaluated on x after sending zeta_E to ctx.zeta; requires the
// group exponent of psi to equal ctx.n.
IntPolynomial padic_character_value(const Character& psi, const GroupRingElement& x,
                                    const PadicContext& ctx);

// Valuation of a ring element: the least valuation among nonzero
// coefficients. nullopt when the element vanishes at this precision,
// in which case only "at least k" is known.
std::optional<long> padic_valuation(const IntPolynomial& elem, const PadicContext& ctx);

// Valuation of an exact cyclotomic number embedded through ctx.zeta;
// may be negative. nullopt as above.
std::optional<long> padic_valuation(const CyclotomicNumber& x, const PadicContext& ctx);

// Raised when doubling the working precision reaches the cap without
// resolving a valuation.
struct PrecisionExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Cardinality ell^(f * v) of the psi-isotypic component of the ell-part
// of BF(Y) tensored with the ring of the context, v the valuation of
// psi applied to p_theta. Odd psi only: for even nontrivial psi the
// value vanishes identically and the component is free. Precision
// starts at 8 and doubles up to the cap.
mpz_class isotypic_cardinality(const GroupRingElement& p_theta, long ell, const Character& psi,
                               unsigned long precision_cap = 512);
mpz_class isotypic_cardinality(long p, long ell, const Character& psi,
                               unsigned long precision_cap = 512);

// ell-part of the psi^{-1}-isotypic piece of the class group, through
// the Bernoulli valuation; the Teichmuller character at ell = p is the
// known-trivial special case.
mpz_class class_group_isotypic_ell_part(long p, long ell, const Character& psi,
                                        unsigned long precision_cap = 512);

// Index of the character congruent to the identity map mod p, its
// uniqueness, and the congruence p B_{1, omega^{-1}} = p - 1 mod p.
struct TeichmullerReport {
    long p = 0;
    long omega_index = -1;
    bool unique = false;
    bool congruence_holds = false;
};

TeichmullerReport teichmuller_check(long p);

bool theorem_b_applicable(long p, long ell);

// One row per odd character, BF side against class-group side.
struct TheoremBPsiRow {
    long psi_index = 0;
    std::string parity;
    mpz_class bf_card;
    mpz_class cl_card;
    std::string relation;  // "equal", "p times cl", or "omega, both trivial"
    bool holds = false;
};

// The isotypic comparison at (p, ell) plus the global product check:
// the product of the BF cardinalities over odd psi must equal the
// ell-part of the minus torsion raised to f, the torsion read off the
// cover's BF operator.
struct TheoremBReport {
    long p = 0;
    long ell = 0;
    unsigned long f = 0;
    std::vector<TheoremBPsiRow> per_psi;
    bool global_consistent = false;
    std::string detail;  // every failed check
};

TheoremBReport verify_theorem_b(long p, long ell, unsigned long precision_cap = 512);

}  // namespace stickelgraph
