#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "stickelgraph/intmatrix.hpp"

namespace stickelgraph {

// Product of cyclic groups Z/n_1 x ... x Z/n_k written additively.
// Elements are integer vectors reduced componentwise into [0, n_i); the
// empty factor list is the trivial group, whose only element is the
// empty vector. Canonical element order is mixed radix with the first
// coordinate most significant, so vector order equals index order.
class FiniteAbelianGroup {
public:
    using Element = std::vector<long>;

    FiniteAbelianGroup() = default;
    explicit FiniteAbelianGroup(std::vector<long> cyclic_orders);

    const std::vector<long>& cyclic_orders() const { return orders_; }
    std::size_t num_factors() const { return orders_.size(); }
    long order() const { return order_; }
    long exponent() const;

    Element identity() const { return Element(orders_.size(), 0); }
    Element reduce(Element raw) const;
    Element add(const Element& a, const Element& b) const;
    Element neg(const Element& a) const;
    long element_order(const Element& a) const;

    long index_of(const Element& a) const;
    Element element(long index) const;
    std::vector<Element> elements() const;

    // The order-2 element when there is exactly one; nullopt otherwise.
    std::optional<Element> unique_order2_element() const;

    bool operator==(const FiniteAbelianGroup& o) const { return orders_ == o.orders_; }

private:
    std::vector<long> orders_;
    long order_ = 1;
};

// Subgroup of a FiniteAbelianGroup, carried with its own canonical
// structure as an abstract group (invariant factors > 1) and the
// translation maps in both directions.
class Subgroup {
public:
    Subgroup(const FiniteAbelianGroup& parent,
             const std::vector<FiniteAbelianGroup::Element>& generators);

    const FiniteAbelianGroup& parent() const { return parent_; }
    const FiniteAbelianGroup& structure() const { return structure_; }
    long order() const { return static_cast<long>(elements_.size()); }
    // Sorted by parent element index.
    const std::vector<FiniteAbelianGroup::Element>& elements() const { return elements_; }

    bool contains(const FiniteAbelianGroup::Element& g) const;
    // structure coordinates -> parent element
    FiniteAbelianGroup::Element embed(const FiniteAbelianGroup::Element& h) const;
    // parent element of the subgroup -> structure coordinates
    FiniteAbelianGroup::Element decompose(const FiniteAbelianGroup::Element& g) const;

    // Left cosets g + H listed by their minimal representatives in
    // canonical element order; representative_of reduces any element to
    // the index of its coset in that list.
    const std::vector<FiniteAbelianGroup::Element>& coset_representatives() const {
        return coset_reps_;
    }
    std::size_t coset_index(const FiniteAbelianGroup::Element& g) const;

private:
    FiniteAbelianGroup parent_;
    FiniteAbelianGroup structure_;
    std::vector<FiniteAbelianGroup::Element> elements_;
    std::vector<FiniteAbelianGroup::Element> gens_;  // structure generators, in parent
    IntMatrix basis_;                                // rows span the lift lattice of H in Z^k
    IntMatrix to_structure_;                         // the V of the defining SNF
    std::vector<std::size_t> kept_;                  // indices of invariant factors > 1
    std::vector<long> div_;                          // all invariant factors
    std::vector<long> coset_of_;                     // parent index -> coset number
    std::vector<FiniteAbelianGroup::Element> coset_reps_;
};

// G/H together with the projection map.
struct QuotientGroup {
    FiniteAbelianGroup quotient;
    // parent element -> quotient element
    FiniteAbelianGroup::Element project(const FiniteAbelianGroup::Element& g) const;

    FiniteAbelianGroup parent;
    IntMatrix to_quotient_;  // V of the defining SNF
    std::vector<std::size_t> kept_;
    std::vector<long> div_;
};

QuotientGroup quotient_group(const FiniteAbelianGroup& g, const Subgroup& h);

// Every subgroup, deterministically ordered by (order, element list).
std::vector<Subgroup> all_subgroups(const FiniteAbelianGroup& g);

}  // namespace stickelgraph
