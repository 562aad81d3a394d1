#pragma once

#include <optional>

#include "stickelgraph/digraph.hpp"
#include "stickelgraph/intmatrix.hpp"
#include "stickelgraph/polynomial.hpp"

namespace stickelgraph {

// Cokernel structure of the Bowen-Franks operator: free rank plus the
// invariant factors > 1 in divisibility order.
struct BFGroupStructure {
    std::size_t free_rank = 0;
    std::vector<mpz_class> torsion_factors;
    mpz_class torsion_order = 1;
};

// Zeta data of a strongly connected digraph. g is det(I - Au); r and
// special_value are the vanishing order and first nonzero Taylor
// coefficient of g at u = 1; delta = r - free rank of the BF group.
// When delta = 0 the special value splits exactly as m times the
// torsion order, and m records that quotient; otherwise m is absent.
struct ZetaReport {
    IntPolynomial g;
    unsigned long r = 0;
    mpz_class special_value;
    unsigned long delta = 0;
    std::optional<mpz_class> m;
    BFGroupStructure bf;
};

// Divisibility facts induced by a cover, comparing the source (cover)
// against the target (base). The optional fields are present exactly
// when their hypotheses hold: m comparisons need both deltas zero, and
// the torsion comparisons additionally need equal vanishing orders.
struct CoverDivisibilityReport {
    ZetaReport base;
    ZetaReport cover;
    bool special_value_divides = false;
    std::optional<mpz_class> special_value_ratio;
    std::optional<bool> m_divides;
    std::optional<mpz_class> m_ratio;
    std::optional<bool> torsion_divides;
    std::optional<bool> torsion_map_surjective;
};

// I - A in construction vertex order; columns are acted on.
IntMatrix bf_operator(const Digraph& d);

BFGroupStructure bf_group(const Digraph& d);

ZetaReport zeta_report(const Digraph& d);

// The index [BF(ZV) : BF(L)] where L is the saturation of the column
// space of the BF operator; equals |m| when delta = 0, which is the
// only case this accepts.
mpz_class r_invariant_m(const Digraph& d);

CoverDivisibilityReport cover_divisibility_report(const DigraphMorphism& f);

}  // namespace stickelgraph
