#include "stickelgraph/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "stickelgraph/lattice.hpp"

namespace stickelgraph {

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<long> cyclic_orders)
    : orders_(std::move(cyclic_orders)) {
    for (long n : orders_) {
        if (n < 1) throw std::invalid_argument("cyclic orders must be positive");
        if (order_ > (1L << 40) / n) throw std::invalid_argument("group order too large");
        order_ *= n;
    }
}

long FiniteAbelianGroup::exponent() const {
    long e = 1;
    for (long n : orders_) e = std::lcm(e, n);
    return e;
}

FiniteAbelianGroup::Element FiniteAbelianGroup::reduce(Element raw) const {
    if (raw.size() != orders_.size()) throw std::invalid_argument("element arity mismatch");
    for (std::size_t i = 0; i < raw.size(); ++i) {
        raw[i] %= orders_[i];
        if (raw[i] < 0) raw[i] += orders_[i];
    }
    return raw;
}

FiniteAbelianGroup::Element FiniteAbelianGroup::add(const Element& a, const Element& b) const {
    if (a.size() != orders_.size() || b.size() != orders_.size())
        throw std::invalid_argument("element arity mismatch");
    Element c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = (a[i] + b[i]) % orders_[i];
    return c;
}

FiniteAbelianGroup::Element FiniteAbelianGroup::neg(const Element& a) const {
    Element c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] == 0 ? 0 : orders_[i] - a[i];
    return c;
}

long FiniteAbelianGroup::element_order(const Element& a) const {
    long o = 1;
    for (std::size_t i = 0; i < a.size(); ++i)
        o = std::lcm(o, orders_[i] / std::gcd(orders_[i], a[i]));
    return o;
}

long FiniteAbelianGroup::index_of(const Element& a) const {
    if (a.size() != orders_.size()) throw std::invalid_argument("element arity mismatch");
    long idx = 0;
    for (std::size_t i = 0; i < a.size(); ++i) idx = idx * orders_[i] + a[i];
    return idx;
}

FiniteAbelianGroup::Element FiniteAbelianGroup::element(long index) const {
    Element a(orders_.size());
    for (std::size_t i = orders_.size(); i-- > 0;) {
        a[i] = index % orders_[i];
        index /= orders_[i];
    }
    return a;
}

std::vector<FiniteAbelianGroup::Element> FiniteAbelianGroup::elements() const {
    std::vector<Element> out;
    out.reserve(order_);
    for (long i = 0; i < order_; ++i) out.push_back(element(i));
    return out;
}

std::optional<FiniteAbelianGroup::Element> FiniteAbelianGroup::unique_order2_element() const {
    std::size_t even_at = orders_.size();
    for (std::size_t i = 0; i < orders_.size(); ++i)
        if (orders_[i] % 2 == 0) {
            if (even_at != orders_.size()) return std::nullopt;  // several order-2 elements
            even_at = i;
        }
    if (even_at == orders_.size()) return std::nullopt;  // odd order
    Element j = identity();
    j[even_at] = orders_[even_at] / 2;
    return j;
}

namespace {

// Echelon basis of the lattice in Z^k spanned by the given rows
// together with diag(n_i); full rank k, upper triangular with positive
// diagonal.
IntMatrix lift_lattice_basis(const FiniteAbelianGroup& g,
                             const std::vector<FiniteAbelianGroup::Element>& rows) {
    std::size_t k = g.num_factors();
    IntMatrix gens(rows.size() + k, k);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < k; ++j) gens.at(i, j) = rows[i][j];
    for (std::size_t i = 0; i < k; ++i) gens.at(rows.size() + i, i) = g.cyclic_orders()[i];
    return lattice_from_generators(k, gens).basis;
}

// Solve y * upper = target for an upper triangular matrix with nonzero
// diagonal; exact integer solution required.
std::vector<mpz_class> solve_upper_int(const IntMatrix& upper, const std::vector<mpz_class>& target,
                                       const char* what) {
    std::size_t k = upper.rows();
    std::vector<mpz_class> y(k);
    for (std::size_t i = 0; i < k; ++i) {
        mpz_class acc = target[i];
        for (std::size_t j = 0; j < i; ++j) acc -= y[j] * upper.at(j, i);
        if (acc % upper.at(i, i) != 0) throw std::invalid_argument(what);
        y[i] = acc / upper.at(i, i);
    }
    return y;
}

}  // namespace

Subgroup::Subgroup(const FiniteAbelianGroup& parent,
                   const std::vector<FiniteAbelianGroup::Element>& generators)
    : parent_(parent) {
    // Closure of the generators.
    std::set<long> members{parent.index_of(parent.identity())};
    std::vector<FiniteAbelianGroup::Element> frontier{parent.identity()};
    while (!frontier.empty()) {
        FiniteAbelianGroup::Element cur = frontier.back();
        frontier.pop_back();
        for (const auto& gen : generators) {
            FiniteAbelianGroup::Element nxt = parent.add(cur, parent.reduce(gen));
            if (members.insert(parent.index_of(nxt)).second) frontier.push_back(nxt);
        }
    }
    for (long idx : members) elements_.push_back(parent.element(idx));

    // Structure: with L the lift lattice of H in Z^k and N = diag(n_i),
    // H = L / N Z^k; write N's rows over the basis of L and take the
    // Smith form of that coefficient matrix.
    std::size_t k = parent.num_factors();
    basis_ = lift_lattice_basis(parent, elements_);
    IntMatrix c(k, k);
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<mpz_class> target(k, 0);
        target[i] = parent.cyclic_orders()[i];
        auto y = solve_upper_int(basis_, target, "subgroup lattice must contain the relations");
        for (std::size_t j = 0; j < k; ++j) c.at(i, j) = y[j];
    }
    SNFResult snf = smith_normal_form(c);
    to_structure_ = snf.right_transform;
    std::vector<long> orders;
    for (std::size_t i = 0; i < k; ++i) {
        div_.push_back(snf.invariant_factors[i].get_si());
        if (snf.invariant_factors[i] > 1) {
            kept_.push_back(i);
            orders.push_back(snf.invariant_factors[i].get_si());
        }
    }
    structure_ = FiniteAbelianGroup(orders);
    if (structure_.order() != order())
        throw std::logic_error("subgroup structure order disagrees with the element count");

    // Generators of the structure coordinates: rows of V^-1 * basis.
    IntMatrix gen_mat = snf.right_inverse * basis_;
    for (std::size_t i : kept_) {
        FiniteAbelianGroup::Element e(k);
        for (std::size_t j = 0; j < k; ++j) {
            mpz_class v = gen_mat.at(i, j) % parent.cyclic_orders()[j];
            if (v < 0) v += parent.cyclic_orders()[j];
            e[j] = v.get_si();
        }
        gens_.push_back(e);
    }

    // Coset partition; scanning in canonical order makes every stored
    // representative the minimal one of its coset.
    coset_of_.assign(parent.order(), -1);
    for (long idx = 0; idx < parent.order(); ++idx) {
        if (coset_of_[idx] != -1) continue;
        long coset = static_cast<long>(coset_reps_.size());
        FiniteAbelianGroup::Element rep = parent.element(idx);
        coset_reps_.push_back(rep);
        for (const auto& h : elements_) coset_of_[parent.index_of(parent.add(rep, h))] = coset;
    }
}

bool Subgroup::contains(const FiniteAbelianGroup::Element& g) const {
    long idx = parent_.index_of(parent_.reduce(g));
    auto it = std::lower_bound(
        elements_.begin(), elements_.end(), idx,
        [&](const FiniteAbelianGroup::Element& e, long v) { return parent_.index_of(e) < v; });
    return it != elements_.end() && parent_.index_of(*it) == idx;
}

FiniteAbelianGroup::Element Subgroup::embed(const FiniteAbelianGroup::Element& h) const {
    if (h.size() != structure_.num_factors()) throw std::invalid_argument("element arity mismatch");
    std::size_t k = parent_.num_factors();
    FiniteAbelianGroup::Element out(k, 0);
    for (std::size_t j = 0; j < k; ++j) {
        mpz_class acc = 0;
        for (std::size_t i = 0; i < gens_.size(); ++i) acc += mpz_class(h[i]) * gens_[i][j];
        acc %= parent_.cyclic_orders()[j];
        if (acc < 0) acc += parent_.cyclic_orders()[j];
        out[j] = acc.get_si();
    }
    return out;
}

FiniteAbelianGroup::Element Subgroup::decompose(const FiniteAbelianGroup::Element& g) const {
    if (!contains(g)) throw std::invalid_argument("element is not in the subgroup");
    std::size_t k = parent_.num_factors();
    std::vector<mpz_class> target(k);
    FiniteAbelianGroup::Element gr = parent_.reduce(g);
    for (std::size_t i = 0; i < k; ++i) target[i] = gr[i];
    auto y = solve_upper_int(basis_, target, "subgroup member must lie in the lift lattice");
    FiniteAbelianGroup::Element out;
    for (std::size_t i : kept_) {
        mpz_class w = 0;
        for (std::size_t j = 0; j < k; ++j) w += y[j] * to_structure_.at(j, i);
        w %= div_[i];
        if (w < 0) w += div_[i];
        out.push_back(w.get_si());
    }
    return out;
}

std::size_t Subgroup::coset_index(const FiniteAbelianGroup::Element& g) const {
    return coset_of_[parent_.index_of(parent_.reduce(g))];
}

FiniteAbelianGroup::Element QuotientGroup::project(const FiniteAbelianGroup::Element& g) const {
    FiniteAbelianGroup::Element gr = parent.reduce(g);
    FiniteAbelianGroup::Element out;
    for (std::size_t i : kept_) {
        mpz_class w = 0;
        for (std::size_t j = 0; j < gr.size(); ++j) w += mpz_class(gr[j]) * to_quotient_.at(j, i);
        w %= div_[i];
        if (w < 0) w += div_[i];
        out.push_back(w.get_si());
    }
    return out;
}

QuotientGroup quotient_group(const FiniteAbelianGroup& g, const Subgroup& h) {
    if (!(h.parent() == g)) throw std::invalid_argument("subgroup belongs to a different group");
    std::size_t k = g.num_factors();
    IntMatrix basis = lift_lattice_basis(g, h.elements());
    SNFResult snf = smith_normal_form(basis);
    QuotientGroup q;
    q.parent = g;
    q.to_quotient_ = snf.right_transform;
    std::vector<long> orders;
    for (std::size_t i = 0; i < k; ++i) {
        q.div_.push_back(snf.invariant_factors[i].get_si());
        if (snf.invariant_factors[i] > 1) {
            q.kept_.push_back(i);
            orders.push_back(snf.invariant_factors[i].get_si());
        }
    }
    q.quotient = FiniteAbelianGroup(orders);
    if (q.quotient.order() * h.order() != g.order())
        throw std::logic_error("quotient order disagrees with the subgroup index");
    return q;
}

std::vector<Subgroup> all_subgroups(const FiniteAbelianGroup& g) {
    std::map<std::vector<long>, Subgroup> found;
    auto key_of = [&](const Subgroup& s) {
        std::vector<long> key;
        key.reserve(s.elements().size());
        for (const auto& e : s.elements()) key.push_back(g.index_of(e));
        return key;
    };
    Subgroup trivial(g, {});
    found.emplace(key_of(trivial), trivial);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Subgroup> snapshot;
        for (const auto& [key, sub] : found) snapshot.push_back(sub);
        for (const auto& sub : snapshot) {
            for (long idx = 0; idx < g.order(); ++idx) {
                FiniteAbelianGroup::Element e = g.element(idx);
                if (sub.contains(e)) continue;
                std::vector<FiniteAbelianGroup::Element> gens = sub.elements();
                gens.push_back(e);
                Subgroup bigger(g, gens);
                auto key = key_of(bigger);
                if (found.find(key) == found.end()) {
                    found.emplace(key, bigger);
                    grew = true;
                }
            }
        }
    }
    std::vector<Subgroup> out;
    for (const auto& [key, sub] : found) out.push_back(sub);
    std::sort(out.begin(), out.end(), [&](const Subgroup& a, const Subgroup& b) {
        if (a.order() != b.order()) return a.order() < b.order();
        return key_of(a) < key_of(b);
    });
    return out;
}

}  // namespace stickelgraph
