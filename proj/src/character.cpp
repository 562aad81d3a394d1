#include "stickelgraph/character.hpp"

#include <stdexcept>

namespace stickelgraph {

bool Character::is_trivial() const {
    for (long e : exponents)
        if (e != 0) return false;
    return true;
}

CyclotomicNumber Character::value(const FiniteAbelianGroup::Element& g) const {
    FiniteAbelianGroup::Element r = group.reduce(g);
    long e = group.exponent();
    mpz_class t = 0;
    for (std::size_t i = 0; i < r.size(); ++i)
        t += mpz_class(r[i]) * exponents[i] * (e / group.cyclic_orders()[i]);
    t %= e;
    return CyclotomicNumber::zeta_power(value_order(), t.get_si());
}

Character Character::inverse() const {
    std::vector<long> inv(exponents.size());
    for (std::size_t i = 0; i < exponents.size(); ++i)
        inv[i] = exponents[i] == 0 ? 0 : group.cyclic_orders()[i] - exponents[i];
    return make_character(group, std::move(inv));
}

Character make_character(const FiniteAbelianGroup& g, std::vector<long> exponents) {
    if (exponents.size() != g.num_factors())
        throw std::invalid_argument("one exponent per cyclic factor is required");
    Character psi{g, g.reduce(std::move(exponents)), std::nullopt};
    if (auto j = g.unique_order2_element()) {
        CyclotomicNumber v = psi.value(*j);
        psi.odd = (v == -CyclotomicNumber::one(psi.value_order()));
    }
    return psi;
}

std::vector<Character> all_characters(const FiniteAbelianGroup& g) {
    std::vector<Character> out;
    out.reserve(g.order());
    for (long i = 0; i < g.order(); ++i) out.push_back(make_character(g, g.element(i)));
    return out;
}

CyclotomicNumber apply_character(const Character& psi, const GroupRingElement& x) {
    if (!(psi.group == x.group()))
        throw std::invalid_argument("character and group ring element disagree on the group");
    CyclotomicNumber acc = CyclotomicNumber::zero(psi.value_order());
    for (long i = 0; i < x.group().order(); ++i) {
        const mpz_class& c = x.coeff_by_index(i);
        if (c == 0) continue;
        acc = acc + psi.value(x.group().element(i)) *
                        CyclotomicNumber(psi.value_order(), IntPolynomial::constant(c));
    }
    return acc;
}

CycPolynomial character_L(const GroupRingPolynomial& gamma, const Character& psi) {
    if (!(psi.group == gamma.group()))
        throw std::invalid_argument("character and polynomial disagree on the group");
    std::vector<CyclotomicNumber> c;
    for (const auto& co : gamma.coeffs()) c.push_back(apply_character(psi, co));
    return CycPolynomial(psi.value_order(), std::move(c));
}

}  // namespace stickelgraph
