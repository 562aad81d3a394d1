#include "stickelgraph/voltage.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace stickelgraph {

VoltageAssignment::VoltageAssignment(std::shared_ptr<const Digraph> base_,
                                     FiniteAbelianGroup group_,
                                     std::vector<FiniteAbelianGroup::Element> labels_)
    : base(std::move(base_)), group(std::move(group_)), labels(std::move(labels_)) {
    if (labels.size() != base->num_edges())
        throw std::invalid_argument("every base edge needs exactly one voltage");
    for (auto& l : labels) l = group.reduce(l);
}

namespace {

// Group indices of s + t for every s, one table per translation t.
std::vector<std::size_t> translation_table(const FiniteAbelianGroup& g,
                                           const FiniteAbelianGroup::Element& t) {
    std::vector<std::size_t> table(g.order());
    for (long s = 0; s < g.order(); ++s) table[s] = g.index_of(g.add(g.element(s), t));
    return table;
}

}  // namespace

DerivedData derived_digraph(const VoltageAssignment& v) {
    const Digraph& x = *v.base;
    const FiniteAbelianGroup& g = v.group;
    std::size_t n = static_cast<std::size_t>(g.order());

    std::vector<std::string> vids;
    vids.reserve(x.num_vertices() * n);
    for (std::size_t xv = 0; xv < x.num_vertices(); ++xv)
        for (std::size_t s = 0; s < n; ++s)
            vids.push_back(x.vertex_ids()[xv] + "@" + std::to_string(s));

    std::vector<Digraph::Edge> edges;
    edges.reserve(x.num_edges() * n);
    for (std::size_t e = 0; e < x.num_edges(); ++e) {
        std::vector<std::size_t> shift = translation_table(g, v.labels[e]);
        for (std::size_t s = 0; s < n; ++s)
            edges.push_back({x.edge(e).id + "@" + std::to_string(s),
                             x.edge(e).from * n + s, x.edge(e).to * n + shift[s]});
    }
    auto derived = share(Digraph(std::move(vids), std::move(edges)));

    std::vector<std::size_t> vmap(derived->num_vertices()), emap(derived->num_edges());
    for (std::size_t xv = 0; xv < x.num_vertices(); ++xv)
        for (std::size_t s = 0; s < n; ++s) vmap[xv * n + s] = xv;
    for (std::size_t e = 0; e < x.num_edges(); ++e)
        for (std::size_t s = 0; s < n; ++s) emap[e * n + s] = e;
    DigraphMorphism projection(derived, v.base, std::move(vmap), std::move(emap));

    std::vector<std::vector<std::size_t>> vgen, egen;
    for (std::size_t i = 0; i < g.num_factors(); ++i) {
        FiniteAbelianGroup::Element gi = g.identity();
        gi[i] = 1;
        std::vector<std::size_t> shift = translation_table(g, gi);
        std::vector<std::size_t> vt(derived->num_vertices()), et(derived->num_edges());
        for (std::size_t xv = 0; xv < x.num_vertices(); ++xv)
            for (std::size_t s = 0; s < n; ++s) vt[xv * n + s] = xv * n + shift[s];
        for (std::size_t e = 0; e < x.num_edges(); ++e)
            for (std::size_t s = 0; s < n; ++s) et[e * n + s] = e * n + shift[s];
        vgen.push_back(std::move(vt));
        egen.push_back(std::move(et));
    }
    GroupAction action(derived, g, std::move(vgen), std::move(egen));
    return {derived, std::move(projection), std::move(action)};
}

GroupAction restricted_action(const DerivedData& dd, const VoltageAssignment& v,
                              const Subgroup& h) {
    if (!(h.parent() == v.group))
        throw std::invalid_argument("the subgroup belongs to a different group");
    const Digraph& x = *v.base;
    std::size_t n = static_cast<std::size_t>(v.group.order());
    const FiniteAbelianGroup& hs = h.structure();
    std::vector<std::vector<std::size_t>> vgen, egen;
    for (std::size_t i = 0; i < hs.num_factors(); ++i) {
        FiniteAbelianGroup::Element wi = hs.identity();
        wi[i] = 1;
        std::vector<std::size_t> shift = translation_table(v.group, h.embed(wi));
        std::vector<std::size_t> vt(dd.digraph->num_vertices()), et(dd.digraph->num_edges());
        for (std::size_t xv = 0; xv < x.num_vertices(); ++xv)
            for (std::size_t s = 0; s < n; ++s) vt[xv * n + s] = xv * n + shift[s];
        for (std::size_t e = 0; e < x.num_edges(); ++e)
            for (std::size_t s = 0; s < n; ++s) et[e * n + s] = e * n + shift[s];
        vgen.push_back(std::move(vt));
        egen.push_back(std::move(et));
    }
    return GroupAction(dd.digraph, hs, std::move(vgen), std::move(egen));
}

bool derived_is_connected(const VoltageAssignment& v) {
    const Digraph& x = *v.base;
    if (!is_strongly_connected(x))
        throw std::invalid_argument("voltage connectivity assumes a strongly connected base");

    bool direct = is_strongly_connected(*derived_digraph(v).digraph);

    // Potentials along an out-tree from vertex 0; every edge then
    // contributes the voltage of a closed path, and those contributions
    // generate the voltages of all closed paths at the root.
    std::vector<FiniteAbelianGroup::Element> potential(x.num_vertices(), v.group.identity());
    std::vector<bool> seen(x.num_vertices(), false);
    seen[0] = true;
    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
        std::size_t at = queue.front();
        queue.pop_front();
        for (std::size_t e : x.out_edges(at)) {
            std::size_t to = x.edge(e).to;
            if (!seen[to]) {
                seen[to] = true;
                potential[to] = v.group.add(potential[at], v.labels[e]);
                queue.push_back(to);
            }
        }
    }
    std::vector<FiniteAbelianGroup::Element> contributions;
    for (std::size_t e = 0; e < x.num_edges(); ++e)
        contributions.push_back(v.group.add(v.group.add(potential[x.edge(e).from], v.labels[e]),
                                            v.group.neg(potential[x.edge(e).to])));
    bool generated = Subgroup(v.group, contributions).order() == v.group.order();

    if (direct != generated)
        throw std::logic_error("connectivity routes disagree on the derived digraph");
    return direct;
}

Digraph intermediate_quotient(const VoltageAssignment& v, const Subgroup& h) {
    if (!(h.parent() == v.group))
        throw std::invalid_argument("the subgroup belongs to a different group");
    const Digraph& x = *v.base;
    const auto& reps = h.coset_representatives();
    std::size_t m = reps.size();

    std::vector<std::string> vids;
    for (std::size_t xv = 0; xv < x.num_vertices(); ++xv)
        for (std::size_t c = 0; c < m; ++c)
            vids.push_back(x.vertex_ids()[xv] + "@c" + std::to_string(c));

    std::vector<Digraph::Edge> edges;
    for (std::size_t e = 0; e < x.num_edges(); ++e)
        for (std::size_t c = 0; c < m; ++c) {
            std::size_t to = h.coset_index(v.group.add(reps[c], v.labels[e]));
            edges.push_back({x.edge(e).id + "@c" + std::to_string(c), x.edge(e).from * m + c,
                             x.edge(e).to * m + to});
        }
    return Digraph(std::move(vids), std::move(edges));
}

std::vector<std::vector<GroupRingElement>> voltage_adjacency(const VoltageAssignment& v) {
    const Digraph& x = *v.base;
    std::vector<std::vector<GroupRingElement>> a(
        x.num_vertices(), std::vector<GroupRingElement>(x.num_vertices(),
                                                        GroupRingElement(v.group)));
    for (std::size_t e = 0; e < x.num_edges(); ++e) {
        GroupRingElement& cell = a[x.edge(e).to][x.edge(e).from];
        cell = cell + GroupRingElement::basis(v.group, v.labels[e]);
    }
    return a;
}

GroupRingPolynomial equivariant_zeta(const VoltageAssignment& v) {
    if (!derived_is_connected(v))
        throw std::invalid_argument("the equivariant zeta needs a connected derived cover");
    auto a = voltage_adjacency(v);
    std::size_t n = a.size();
    GroupRingElement zero(v.group);
    std::vector<std::vector<GroupRingPolynomial>> m(
        n, std::vector<GroupRingPolynomial>(n, GroupRingPolynomial(v.group)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            GroupRingElement c0 = i == j ? GroupRingElement::unit(v.group) : zero;
            m[i][j] = GroupRingPolynomial(v.group, {std::move(c0), -a[i][j]});
        }
    GroupRingPolynomial det = grp_determinant(m);
    if (!(det.coeff(0) == GroupRingElement::unit(v.group)))
        throw std::logic_error("equivariant zeta must have constant term 1");
    return det;
}

GroupRingPolynomial induction_norm(const GroupRingPolynomial& gamma, const Subgroup& h) {
    if (!(h.parent() == gamma.group()))
        throw std::invalid_argument("the subgroup belongs to a different group");
    const FiniteAbelianGroup& g = gamma.group();
    const FiniteAbelianGroup& hs = h.structure();
    const auto& reps = h.coset_representatives();
    std::size_t m = reps.size();
    std::size_t deg = gamma.is_zero() ? 0 : static_cast<std::size_t>(gamma.degree());

    std::vector<std::vector<std::vector<GroupRingElement>>> acc(
        m, std::vector<std::vector<GroupRingElement>>(
               m, std::vector<GroupRingElement>(deg + 1, GroupRingElement(hs))));
    for (std::size_t d = 0; d <= deg; ++d) {
        GroupRingElement cd = gamma.coeff(d);
        for (long gi = 0; gi < g.order(); ++gi) {
            const mpz_class& c = cd.coeff_by_index(gi);
            if (c == 0) continue;
            FiniteAbelianGroup::Element ge = g.element(gi);
            for (std::size_t j = 0; j < m; ++j) {
                FiniteAbelianGroup::Element sum = g.add(ge, reps[j]);
                std::size_t k = h.coset_index(sum);
                FiniteAbelianGroup::Element hpart = g.add(sum, g.neg(reps[k]));
                FiniteAbelianGroup::Element w = h.decompose(hpart);
                GroupRingElement& cell = acc[k][j][d];
                cell.set_coeff(w, cell.coeff(w) + c);
            }
        }
    }
    std::vector<std::vector<GroupRingPolynomial>> n(
        m, std::vector<GroupRingPolynomial>(m, GroupRingPolynomial(hs)));
    for (std::size_t k = 0; k < m; ++k)
        for (std::size_t j = 0; j < m; ++j) n[k][j] = GroupRingPolynomial(hs, acc[k][j]);
    return grp_determinant(n);
}

VoltageAssignment quotient_voltage(const VoltageAssignment& v, const QuotientGroup& q) {
    if (!(q.parent == v.group))
        throw std::invalid_argument("the quotient belongs to a different group");
    std::vector<FiniteAbelianGroup::Element> labels;
    labels.reserve(v.labels.size());
    for (const auto& l : v.labels) labels.push_back(q.project(l));
    return VoltageAssignment(v.base, q.quotient, std::move(labels));
}

VoltageAssignment induced_subcover_voltage(const VoltageAssignment& v, const Subgroup& h) {
    Digraph z = intermediate_quotient(v, h);
    const Digraph& x = *v.base;
    const auto& reps = h.coset_representatives();
    std::size_t m = reps.size();
    std::vector<FiniteAbelianGroup::Element> labels(z.num_edges());
    for (std::size_t e = 0; e < x.num_edges(); ++e)
        for (std::size_t c = 0; c < m; ++c) {
            FiniteAbelianGroup::Element moved = v.group.add(reps[c], v.labels[e]);
            std::size_t k = h.coset_index(moved);
            labels[e * m + c] = h.decompose(v.group.add(moved, v.group.neg(reps[k])));
        }
    return VoltageAssignment(share(std::move(z)), h.structure(), std::move(labels));
}

ProductDecompositionReport product_decomposition_check(const VoltageAssignment& v) {
    DerivedData dd = derived_digraph(v);
    GroupRingPolynomial gamma = equivariant_zeta(v);
    unsigned long field = static_cast<unsigned long>(v.group.exponent());

    IntPolynomial g_derived = reversed_char_poly(dd.digraph->adjacency());
    IntPolynomial g_base = reversed_char_poly(v.base->adjacency());

    ProductDecompositionReport rep;
    rep.r_derived = taylor_at_one(g_derived).order;
    rep.r_base = taylor_at_one(g_base).order;

    CycPolynomial rhs = CycPolynomial::from_int_poly(field, g_base);
    unsigned long r_sum = rep.r_base;
    for (const Character& psi : all_characters(v.group)) {
        if (psi.is_trivial()) continue;
        CycPolynomial l = character_L(gamma, psi);
        rep.r_psi.push_back(l.vanishing_order_at_one());
        r_sum += rep.r_psi.back();
        rhs = rhs * l;
    }
    CycPolynomial lhs = CycPolynomial::from_int_poly(field, g_derived);

    std::ostringstream diff;
    if (!(lhs == rhs)) {
        diff << "product and derived zeta differ (degrees " << rhs.degree() << " vs "
             << lhs.degree() << ")";
        for (std::size_t k = 0; k <= static_cast<std::size_t>(std::max(lhs.degree(),
                                                                       rhs.degree()));
             ++k)
            if (!(lhs.coeff(k) == rhs.coeff(k))) {
                diff << "; first mismatch at u^" << k;
                break;
            }
    }
    if (rep.r_derived != r_sum) {
        if (diff.tellp() > 0) diff << "; ";
        diff << "vanishing orders: derived " << rep.r_derived << " vs base+characters " << r_sum;
    }
    rep.detail = diff.str();
    rep.holds = rep.detail.empty();
    return rep;
}

}  // namespace stickelgraph
