#include <random>
#include <set>
#include <vector>

#include "doctest.h"
#include "stickelgraph/group.hpp"

using namespace stickelgraph;

namespace {

using Elt = FiniteAbelianGroup::Element;

}  // namespace

TEST_CASE("element indexing is mixed radix, first coordinate most significant") {
    const FiniteAbelianGroup g({4, 6});
    CHECK(g.order() == 24);
    CHECK(g.exponent() == 12);
    CHECK(g.index_of({0, 0}) == 0);
    CHECK(g.index_of({0, 5}) == 5);
    CHECK(g.index_of({1, 0}) == 6);
    CHECK(g.index_of({3, 5}) == 23);
    for (long i = 0; i < g.order(); ++i) CHECK(g.index_of(g.element(i)) == i);
    CHECK(g.elements().size() == 24);
    CHECK(g.elements()[7] == Elt{1, 1});
}

TEST_CASE("group arithmetic") {
    const FiniteAbelianGroup g({4, 6});
    CHECK(g.reduce({5, -1}) == Elt{1, 5});
    CHECK(g.add({3, 4}, {2, 3}) == Elt{1, 1});
    CHECK(g.neg({1, 2}) == Elt{3, 4});
    CHECK(g.add({1, 2}, g.neg({1, 2})) == g.identity());
    CHECK(g.element_order(g.identity()) == 1);
    CHECK(g.element_order({2, 3}) == 2);
    CHECK(g.element_order({1, 1}) == 12);

    const FiniteAbelianGroup trivial{};
    CHECK(trivial.order() == 1);
    CHECK(trivial.identity() == Elt{});
    CHECK(trivial.exponent() == 1);
}

TEST_CASE("unique order-two element") {
    CHECK(FiniteAbelianGroup({6}).unique_order2_element() == Elt{3});
    CHECK(FiniteAbelianGroup({22}).unique_order2_element() == Elt{11});
    CHECK_FALSE(FiniteAbelianGroup({5}).unique_order2_element().has_value());
    // Z/4 x Z/6 has three involutions, so none is singled out.
    CHECK_FALSE(FiniteAbelianGroup({4, 6}).unique_order2_element().has_value());
}

TEST_CASE("subgroup of a cyclic group") {
    const FiniteAbelianGroup g({6});
    const Subgroup h(g, {Elt{2}});
    CHECK(h.order() == 3);
    CHECK(h.structure().cyclic_orders() == std::vector<long>{3});
    CHECK(h.elements() == std::vector<Elt>{{0}, {2}, {4}});
    CHECK(h.contains({4}));
    CHECK_FALSE(h.contains({3}));
    // Coset representatives are minimal in canonical order.
    CHECK(h.coset_representatives() == std::vector<Elt>{{0}, {1}});
    CHECK(h.coset_index({5}) == 1);
    CHECK(h.coset_index({4}) == 0);
    // Translating by a subgroup element never moves the coset.
    for (long i = 0; i < 6; ++i)
        for (const auto& s : h.elements())
            CHECK(h.coset_index(g.add(g.element(i), s)) == h.coset_index(g.element(i)));
    // embed and decompose are mutually inverse on the subgroup.
    for (const auto& s : h.elements()) CHECK(h.embed(h.decompose(s)) == s);
    for (long i = 0; i < h.structure().order(); ++i) {
        const Elt x = h.structure().element(i);
        CHECK(h.decompose(h.embed(x)) == x);
    }
    CHECK_THROWS_AS(h.decompose(Elt{1}), std::invalid_argument);
}

TEST_CASE("subgroup embedding is a homomorphism") {
    const FiniteAbelianGroup g({4, 6});
    const Subgroup h(g, {Elt{2, 0}, Elt{0, 3}});
    CHECK(h.order() == 4);
    CHECK(h.structure().cyclic_orders() == std::vector<long>{2, 2});
    const auto& s = h.structure();
    for (long i = 0; i < s.order(); ++i)
        for (long j = 0; j < s.order(); ++j) {
            const Elt a = s.element(i), b = s.element(j);
            CHECK(h.embed(s.add(a, b)) == g.add(h.embed(a), h.embed(b)));
        }
}

TEST_CASE("quotient groups") {
    const FiniteAbelianGroup g({6});
    const QuotientGroup q = quotient_group(g, Subgroup(g, {Elt{2}}));
    CHECK(q.quotient.order() == 2);
    CHECK(q.project({0}) == q.quotient.identity());
    CHECK(q.project({2}) == q.quotient.identity());
    CHECK(q.project({1}) != q.quotient.identity());
    // The projection is a homomorphism onto the quotient.
    std::set<Elt> image;
    for (long i = 0; i < 6; ++i)
        for (long j = 0; j < 6; ++j) {
            const Elt a = g.element(i), b = g.element(j);
            CHECK(q.project(g.add(a, b)) == q.quotient.add(q.project(a), q.project(b)));
            image.insert(q.project(a));
        }
    CHECK(image.size() == 2);

    const FiniteAbelianGroup g2({4, 6});
    const QuotientGroup q2 = quotient_group(g2, Subgroup(g2, {Elt{0, 3}}));
    CHECK(q2.quotient.order() == 12);
    for (long i = 0; i < g2.order(); ++i)
        for (long j = 0; j < g2.order(); ++j) {
            const Elt a = g2.element(i), b = g2.element(j);
            CHECK(q2.project(g2.add(a, b)) ==
                  q2.quotient.add(q2.project(a), q2.project(b)));
        }
    // Quotient by the full group is trivial, by the trivial subgroup full.
    CHECK(quotient_group(g2, Subgroup(g2, {Elt{1, 0}, Elt{0, 1}})).quotient.order() == 1);
    CHECK(quotient_group(g2, Subgroup(g2, {})).quotient.order() == 24);
}

TEST_CASE("all subgroups") {
    CHECK(all_subgroups(FiniteAbelianGroup({6})).size() == 4);
    CHECK(all_subgroups(FiniteAbelianGroup({2, 2})).size() == 5);
    CHECK(all_subgroups(FiniteAbelianGroup({12})).size() == 6);
    CHECK(all_subgroups(FiniteAbelianGroup({2, 4})).size() == 8);

    const auto subs = all_subgroups(FiniteAbelianGroup({12}));
    // Deterministic order: by order, then by element list.
    for (std::size_t i = 0; i + 1 < subs.size(); ++i)
        CHECK(subs[i].order() <= subs[i + 1].order());
    CHECK(subs.front().order() == 1);
    CHECK(subs.back().order() == 12);
    // Orders are exactly the divisors of 12.
    std::multiset<long> orders;
    for (const auto& h : subs) orders.insert(h.order());
    CHECK(orders == std::multiset<long>{1, 2, 3, 4, 6, 12});
}
