#pragma once

#include <optional>
#include <vector>

#include "stickelgraph/cyclotomic.hpp"
#include "stickelgraph/group.hpp"
#include "stickelgraph/groupring.hpp"

namespace stickelgraph {

// Character of a finite abelian group, fixed by its exponents on the
// canonical generators: the i-th generator maps to zeta_E^(e_i * E/n_i)
// with E the group exponent. Values live in Q(zeta_E). The parity flag
// is the sign at the unique order-2 element and is absent when the
// group has none or several.
struct Character {
    FiniteAbelianGroup group;
    std::vector<long> exponents;
    std::optional<bool> odd;

    bool is_trivial() const;
    unsigned long value_order() const { return static_cast<unsigned long>(group.exponent()); }
    CyclotomicNumber value(const FiniteAbelianGroup::Element& g) const;
    Character inverse() const;
};

// All characters in the canonical order: exponent vectors enumerated
// like group elements, the first coordinate most significant. Index 0
// is the trivial character.
std::vector<Character> all_characters(const FiniteAbelianGroup& g);

Character make_character(const FiniteAbelianGroup& g, std::vector<long> exponents);

CyclotomicNumber apply_character(const Character& psi, const GroupRingElement& x);

// psi applied coefficientwise, the L-factor of the character.
CycPolynomial character_L(const GroupRingPolynomial& gamma, const Character& psi);

}  // namespace stickelgraph
