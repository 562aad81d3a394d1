#pragma once

#include <memory>
#include <string>
#include <vector>

#include "stickelgraph/character.hpp"
#include "stickelgraph/digraph.hpp"
#include "stickelgraph/group.hpp"
#include "stickelgraph/groupring.hpp"

namespace stickelgraph {

// Edge labeling of a base digraph by elements of a finite abelian
// group; one label per edge, reduced at construction.
struct VoltageAssignment {
    VoltageAssignment(std::shared_ptr<const Digraph> base, FiniteAbelianGroup group,
                      std::vector<FiniteAbelianGroup::Element> labels);

    std::shared_ptr<const Digraph> base;
    FiniteAbelianGroup group;
    std::vector<FiniteAbelianGroup::Element> labels;
};

// The derived cover: vertices and edges are base ones paired with
// group elements, an edge (e, s) running from (o(e), s) to
// (t(e), s + voltage(e)). Ships with the projection and the
// translation action on the second coordinate.
struct DerivedData {
    std::shared_ptr<const Digraph> digraph;
    DigraphMorphism projection;
    GroupAction action;
};

DerivedData derived_digraph(const VoltageAssignment& v);

// Translation action of a subgroup (through its abstract structure) on
// the derived digraph.
GroupAction restricted_action(const DerivedData& dd, const VoltageAssignment& v,
                              const Subgroup& h);

// Connectivity of the derived digraph, decided twice: once as strong
// connectivity of the constructed cover and once by checking that the
// voltages of closed paths at a base vertex generate the whole group.
// Both routes must agree; disagreement is an internal error. Requires
// a strongly connected base.
bool derived_is_connected(const VoltageAssignment& v);

// The quotient cover on coset classes: vertices (x, Hs), an edge
// (e, Hs) running to (t(e), Hs + voltage(e)). Cosets are indexed by
// their minimal representatives.
Digraph intermediate_quotient(const VoltageAssignment& v, const Subgroup& h);

// Entry (i, j) collects sum of voltages over edges from v_j to v_i.
std::vector<std::vector<GroupRingElement>> voltage_adjacency(const VoltageAssignment& v);

// det(I - A u) over Z[G][u]; rejects voltages whose derived digraph is
// disconnected, since the cover theory reads this determinant as the
// zeta of a connected Galois cover.
GroupRingPolynomial equivariant_zeta(const VoltageAssignment& v);

// Determinant of multiplication by gamma on Z[G] viewed as a free
// module over the subgroup's ring, with minimal coset representatives
// as the basis; lands in the polynomial ring over h.structure().
GroupRingPolynomial induction_norm(const GroupRingPolynomial& gamma, const Subgroup& h);

// Labels pushed forward along G -> G/H; the base is unchanged.
VoltageAssignment quotient_voltage(const VoltageAssignment& v, const QuotientGroup& q);

// The H-voltage on the intermediate quotient whose derived cover is
// the original one: an edge (e, Hs) carries rep(Hs) + voltage(e) -
// rep(Hs + voltage(e)), decomposed into h.structure() coordinates.
VoltageAssignment induced_subcover_voltage(const VoltageAssignment& v, const Subgroup& h);

// Exact check of the character product decomposition
// g_derived = g_base * prod over nontrivial psi of psi(gamma), in
// Q(zeta_E)[u], together with the additivity of vanishing orders.
struct ProductDecompositionReport {
    bool holds = false;
    unsigned long r_derived = 0;
    unsigned long r_base = 0;
    std::vector<unsigned long> r_psi;  // nontrivial characters in canonical order
    std::string detail;                // empty when holds
};

ProductDecompositionReport product_decomposition_check(const VoltageAssignment& v);

}  // namespace stickelgraph
