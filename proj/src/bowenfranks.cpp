#include "stickelgraph/bowenfranks.hpp"

#include <stdexcept>

#include "stickelgraph/lattice.hpp"

namespace stickelgraph {

IntMatrix bf_operator(const Digraph& d) {
    IntMatrix m = d.adjacency();
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = (i == j ? 1 : 0) - m.at(i, j);
    return m;
}

namespace {

BFGroupStructure structure_from_factors(const std::vector<mpz_class>& factors) {
    BFGroupStructure s;
    for (const mpz_class& d : factors) {
        if (d == 0) {
            ++s.free_rank;
        } else if (d > 1) {
            s.torsion_factors.push_back(d);
            s.torsion_order *= d;
        }
    }
    return s;
}

}  // namespace

BFGroupStructure bf_group(const Digraph& d) {
    return structure_from_factors(smith_normal_form(bf_operator(d)).invariant_factors);
}

ZetaReport zeta_report(const Digraph& d) {
    if (!is_strongly_connected(d))
        throw std::invalid_argument("zeta data is defined for strongly connected digraphs only");
    ZetaReport rep;
    rep.g = reversed_char_poly(d.adjacency());
    TaylorAtOne t = taylor_at_one(rep.g);
    rep.r = t.order;
    rep.special_value = t.special_value;
    rep.bf = bf_group(d);
    if (rep.r < rep.bf.free_rank)
        throw std::logic_error("vanishing order below the free rank contradicts the rank bound");
    rep.delta = rep.r - rep.bf.free_rank;
    if (rep.delta == 0) {
        if (rep.special_value % rep.bf.torsion_order != 0)
            throw std::logic_error("special value is not a multiple of the torsion order");
        rep.m = rep.special_value / rep.bf.torsion_order;
    }
    return rep;
}

mpz_class r_invariant_m(const Digraph& d) {
    ZetaReport rep = zeta_report(d);
    if (rep.delta != 0) throw std::invalid_argument("the index invariant requires delta = 0");
    IntMatrix bf = bf_operator(d);
    IntMatrix bft = bf.transpose();
    // Column space data: rows of the transpose span the image.
    Lattice l = kernel_and_image_saturation(bft).second;
    Lattice image_full = lattice_from_generators(d.num_vertices(), bft);
    Lattice image_l = lattice_from_generators(d.num_vertices(), l.basis * bft);
    return lattice_index(image_full, image_l);
}

namespace {

bool divides(const mpz_class& a, const mpz_class& b) { return a != 0 && b % a == 0; }

// Surjectivity of the induced map between torsion subgroups of the
// cokernels, along the vertex pushforward P with P e_w = e_{f(w)}.
bool torsion_map_surjective(const DigraphMorphism& f) {
    const Digraph& y = f.source();
    const Digraph& x = f.target();
    IntMatrix bfy = bf_operator(y), bfx = bf_operator(x);
    IntMatrix p(x.num_vertices(), y.num_vertices());
    for (std::size_t w = 0; w < y.num_vertices(); ++w) p.at(f.vertex_image(w), w) = 1;
    if (!(p * bfy == bfx * p))
        throw std::logic_error("pushforward does not intertwine the BF operators");

    SNFResult sy = smith_normal_form(bfy), sx = smith_normal_form(bfx);
    std::vector<std::size_t> ygens, xtors, xfree;
    for (std::size_t i = 0; i < sy.invariant_factors.size(); ++i)
        if (sy.invariant_factors[i] > 1) ygens.push_back(i);
    for (std::size_t j = 0; j < sx.invariant_factors.size(); ++j) {
        if (sx.invariant_factors[j] > 1) xtors.push_back(j);
        if (sx.invariant_factors[j] == 0) xfree.push_back(j);
    }
    if (xtors.empty()) return true;

    // Coordinates of the images of the torsion generators of coker(Y):
    // generator i is the class of column i of U_Y^-1, and classes in
    // coker(X) are read through U_X.
    IntMatrix z = sx.left_transform * (p * sy.left_inverse);
    for (std::size_t j : xfree)
        for (std::size_t i : ygens)
            if (z.at(j, i) != 0)
                throw std::logic_error("a torsion class mapped outside the torsion subgroup");

    IntMatrix rel(xtors.size(), ygens.size() + xtors.size());
    for (std::size_t a = 0; a < xtors.size(); ++a) {
        for (std::size_t b = 0; b < ygens.size(); ++b) rel.at(a, b) = z.at(xtors[a], ygens[b]);
        rel.at(a, ygens.size() + a) = sx.invariant_factors[xtors[a]];
    }
    // The generated subgroup is everything iff adjoining the generator
    // columns to the relations leaves a trivial cokernel.
    for (const mpz_class& d : smith_normal_form(rel).invariant_factors)
        if (d != 1) return false;
    return true;
}

}  // namespace

CoverDivisibilityReport cover_divisibility_report(const DigraphMorphism& f) {
    if (!check_cover(f))
        throw std::invalid_argument("divisibility comparisons require a covering map");
    CoverDivisibilityReport rep;
    rep.base = zeta_report(f.target());
    rep.cover = zeta_report(f.source());
    rep.special_value_divides = divides(rep.base.special_value, rep.cover.special_value);
    if (rep.special_value_divides)
        rep.special_value_ratio = rep.cover.special_value / rep.base.special_value;
    if (rep.base.delta == 0 && rep.cover.delta == 0) {
        rep.m_divides = divides(*rep.base.m, *rep.cover.m);
        if (*rep.m_divides) rep.m_ratio = *rep.cover.m / *rep.base.m;
        if (rep.base.r == rep.cover.r) {
            rep.torsion_divides = divides(rep.base.bf.torsion_order, rep.cover.bf.torsion_order);
            rep.torsion_map_surjective = torsion_map_surjective(f);
        }
    }
    return rep;
}

}  // namespace stickelgraph
