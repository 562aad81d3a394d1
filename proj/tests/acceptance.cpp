// Acceptance gate: eight criteria, one verdict line each, exit 1 when
// any fails.  Every comparison is exact integer or exact cyclotomic
// arithmetic; there are no floating point tolerances anywhere.

#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "stickelgraph/bowenfranks.hpp"
#include "stickelgraph/character.hpp"
#include "stickelgraph/cyclotomic.hpp"
#include "stickelgraph/digraph.hpp"
#include "stickelgraph/group.hpp"
#include "stickelgraph/groupring.hpp"
#include "stickelgraph/intmatrix.hpp"
#include "stickelgraph/lattice.hpp"
#include "stickelgraph/padic.hpp"
#include "stickelgraph/polynomial.hpp"
#include "stickelgraph/stickelberger.hpp"
#include "stickelgraph/voltage.hpp"

using namespace stickelgraph;

namespace {

int failures = 0;

void verdict(int index, const std::string& name, bool ok, const std::string& note) {
    std::printf("[%s] criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", index, name.c_str(),
                note.empty() ? "" : " -- ", note.c_str());
    if (!ok) ++failures;
}

void run(int index, const std::string& name, const std::function<bool(std::string&)>& body) {
    std::string note;
    bool ok = false;
    try {
        ok = body(note);
    } catch (const std::exception& e) {
        ok = false;
        note = std::string("exception: ") + e.what();
    }
    verdict(index, name, ok, note);
}

bool expect(bool cond, const std::string& what, std::string& note) {
    if (!cond && note.empty()) note = what;
    return cond;
}

std::vector<long> odd_primes_up_to(long bound) {
    std::vector<long> out;
    for (long p = 3; p <= bound; p += 2)
        if (is_prime(p)) out.push_back(p);
    return out;
}

mpz_class pow_z(long base, unsigned long e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), e);
    return r;
}

IntMatrix from_rows(const std::vector<std::vector<long>>& rows) {
    IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
    return m;
}

Digraph bouquet(std::size_t loops) {
    std::vector<Digraph::Edge> edges;
    for (std::size_t i = 0; i < loops; ++i)
        edges.push_back({"l" + std::to_string(i), 0, 0});
    return Digraph({"v"}, std::move(edges));
}

// Torsion order of the derived cover against the minus class number,
// the product over odd characters serving as the independent route.
bool criterion_torsion(std::string& note) {
    bool ok = true;
    for (long p : odd_primes_up_to(61)) {
        const StickelbergerCover cover = stickelberger_cover(p);
        const BFGroupStructure bf = bf_group(*cover.derived.digraph);
        const mpz_class want =
            pow_z(p, static_cast<unsigned long>((p - 1) / 2)) * minus_class_number_product(p);
        ok &= expect(bf.torsion_order == want,
                     "torsion mismatch at p = " + std::to_string(p), note);
    }
    return ok;
}

// The worked two-vertex example over the three-loop bouquet.
bool criterion_worked_example(std::string& note) {
    bool ok = true;
    const Digraph y = digraph_from_adjacency(from_rows({{2, 1}, {1, 2}}));
    const ZetaReport ry = zeta_report(y);
    ok &= expect(ry.g == IntPolynomial({1, -4, 3}), "cover zeta polynomial", note);
    ok &= expect(ry.r == 1 && ry.special_value == 2 && ry.delta == 0, "cover taylor data", note);
    ok &= expect(ry.bf.free_rank == 1 && ry.bf.torsion_order == 1, "cover BF group", note);
    ok &= expect(ry.m == mpz_class(2), "cover multiplier", note);

    const ZetaReport rx = zeta_report(bouquet(3));
    ok &= expect(rx.g == IntPolynomial({1, -3}), "base zeta polynomial", note);
    ok &= expect(rx.r == 0 && rx.special_value == -2, "base taylor data", note);
    ok &= expect(rx.bf.free_rank == 0 && rx.bf.torsion_order == 2, "base BF group", note);
    ok &= expect(rx.m == mpz_class(-1), "base multiplier", note);

    const VoltageAssignment v(share(bouquet(3)), FiniteAbelianGroup({2}), {{0}, {0}, {1}});
    const DerivedData dd = derived_digraph(v);
    ok &= expect(dd.digraph->adjacency() == y.adjacency(), "derived adjacency", note);
    const CoverDivisibilityReport rep = cover_divisibility_report(dd.projection);
    ok &= expect(rep.special_value_divides && rep.special_value_ratio == mpz_class(-1),
                 "special value ratio", note);
    ok &= expect(rep.m_divides.has_value() && *rep.m_divides &&
                     rep.m_ratio == mpz_class(-2),
                 "multiplier ratio", note);
    ok &= expect(!rep.torsion_divides.has_value() && !rep.torsion_map_surjective.has_value(),
                 "torsion comparison must be inapplicable", note);
    return ok;
}

// Multiplier of the derived cover: sign, closed form, and the two
// independent recomputations.
bool criterion_multiplier(std::string& note) {
    bool ok = true;
    for (long p : odd_primes_up_to(41)) {
        const StickelbergerCover cover = stickelberger_cover(p);
        const ZetaReport rep = zeta_report(*cover.derived.digraph);
        const mpz_class magnitude =
            pow_z(2, static_cast<unsigned long>((p - 3) / 2)) * mpz_class((p - 1) / 2);
        const bool negative = ((p - 1) / 2) % 2 == 1;
        const mpz_class want = negative ? mpz_class(-magnitude) : magnitude;
        ok &= expect(rep.m == want, "signed multiplier at p = " + std::to_string(p), note);
        ok &= expect(r_invariant_m(*cover.derived.digraph) == magnitude,
                     "lattice index route at p = " + std::to_string(p), note);
        ok &= expect(m_via_resultant(p) == magnitude,
                     "resultant route at p = " + std::to_string(p), note);
    }
    return ok;
}

// The plus quotient: free rank, torsion, multiplier, special value.
bool criterion_plus(std::string& note) {
    bool ok = true;
    for (long p : odd_primes_up_to(41)) {
        const PlusQuotientReport rep = plus_quotient_analysis(p);
        ok &= expect(rep.identities_hold && rep.detail.empty(),
                     "identities at p = " + std::to_string(p), note);
        ok &= expect(rep.zeta.bf.free_rank == static_cast<std::size_t>((p - 3) / 2),
                     "free rank at p = " + std::to_string(p), note);
        ok &= expect(rep.zeta.bf.torsion_factors == std::vector<mpz_class>{p},
                     "torsion at p = " + std::to_string(p), note);
        const bool negative = ((p - 1) / 2) % 2 == 1;
        const mpz_class m = negative ? mpz_class(-(p - 1) / 2) : mpz_class((p - 1) / 2);
        ok &= expect(rep.m_plus == m, "multiplier at p = " + std::to_string(p), note);
        ok &= expect(rep.g_star_plus == m * p, "special value at p = " + std::to_string(p),
                     note);
    }
    return ok;
}

// Artin formalism: character product, inflation along every quotient,
// induction along the distinguished subgroups.
bool criterion_artin(std::string& note) {
    bool ok = true;
    for (long p : {5L, 7L, 13L}) {
        const StickelbergerCover cover = stickelberger_cover(p);
        const ProductDecompositionReport pd = product_decomposition_check(cover.voltage);
        ok &= expect(pd.holds, "product decomposition at p = " + std::to_string(p), note);
        unsigned long sum = pd.r_base;
        for (unsigned long r : pd.r_psi) sum += r;
        ok &= expect(pd.r_derived == sum, "order additivity at p = " + std::to_string(p), note);

        for (const Subgroup& h : all_subgroups(cover.group)) {
            const QuotientGroup q = quotient_group(cover.group, h);
            const bool inflation_ok =
                project(cover.gamma, q) == equivariant_zeta(quotient_voltage(cover.voltage, q));
            ok &= expect(inflation_ok,
                         "inflation at p = " + std::to_string(p) + ", |H| = " +
                             std::to_string(h.order()),
                         note);
        }

        std::vector<Subgroup> towers;
        towers.emplace_back(cover.group, std::vector<FiniteAbelianGroup::Element>{});
        const auto inv = cover.group.unique_order2_element();
        if (!expect(inv.has_value(), "missing unique involution", note)) return false;
        towers.emplace_back(cover.group, std::vector<FiniteAbelianGroup::Element>{*inv});
        towers.emplace_back(cover.group,
                            std::vector<FiniteAbelianGroup::Element>{cover.group.element(1)});
        for (const Subgroup& h : towers) {
            const bool induction_ok =
                induction_norm(cover.gamma, h) ==
                equivariant_zeta(induced_subcover_voltage(cover.voltage, h));
            ok &= expect(induction_ok,
                         "induction at p = " + std::to_string(p) + ", |H| = " +
                             std::to_string(h.order()),
                         note);
        }
    }
    return ok;
}

// Isotypic comparison rows, the global products, and the excluded pair.
bool criterion_isotypic(std::string& note) {
    bool ok = true;

    ok &= expect(!theorem_b_applicable(37, 2), "pair (37, 2) must be inapplicable", note);
    bool threw = false;
    try {
        verify_theorem_b(37, 2);
    } catch (const std::invalid_argument&) {
        threw = true;
    }
    ok &= expect(threw, "pair (37, 2) must be rejected", note);

    struct Pair {
        long p, ell;
    };
    for (const Pair pr : {Pair{5, 5}, Pair{7, 7}, Pair{23, 23}, Pair{5, 3}, Pair{7, 11},
                          Pair{23, 3}}) {
        const std::string tag =
            " at (" + std::to_string(pr.p) + ", " + std::to_string(pr.ell) + ")";
        const TheoremBReport rep = verify_theorem_b(pr.p, pr.ell);
        ok &= expect(rep.global_consistent && rep.detail.empty(), "global product" + tag, note);
        for (const auto& row : rep.per_psi) {
            ok &= expect(row.holds, "psi row " + std::to_string(row.psi_index) + tag, note);
            ok &= expect(row.parity == "odd", "row parity" + tag, note);
        }
        if (pr.p == pr.ell) {
            const TeichmullerReport t = teichmuller_check(pr.p);
            ok &= expect(t.unique && t.congruence_holds, "teichmuller character" + tag, note);
            int omega_rows = 0;
            for (const auto& row : rep.per_psi)
                if (row.relation == "omega, both trivial") ++omega_rows;
            ok &= expect(omega_rows == 1, "omega row count" + tag, note);
        }
        mpz_class product = 1;
        for (const auto& row : rep.per_psi) product *= row.bf_card;
        if (pr.p == 23 && pr.ell == 23)
            ok &= expect(product == pow_z(23, 10), "23-part product" + tag, note);
        if (pr.p == 23 && pr.ell == 3)
            ok &= expect(product == 243, "3-part product" + tag, note);
        if (pr.p == 5 && pr.ell == 3)
            ok &= expect(product == 1 && rep.f == 2, "trivial product" + tag, note);
    }
    return ok;
}

// Circulant eigenvalues through characters, plus the rank count.
bool criterion_eigenvalues(std::string& note) {
    bool ok = true;
    for (long p : odd_primes_up_to(23)) {
        const unsigned long e = static_cast<unsigned long>(p - 1);
        const IntPolynomial f = circulant_poly(p, smallest_primitive_root(p));
        const auto chars = all_characters(FiniteAbelianGroup({p - 1}));
        for (long j = 0; j < p - 1; ++j) {
            CyclotomicNumber value = CyclotomicNumber::zero(e);
            for (long k = 0; k <= f.degree(); ++k)
                value = value + CyclotomicNumber::zeta_power(e, j * k) *
                                    CyclotomicNumber(e, IntPolynomial::constant(f.coeff(k)));
            const std::string tag =
                " at p = " + std::to_string(p) + ", j = " + std::to_string(j);
            if (j == 0) {
                ok &= expect(value == CyclotomicNumber::from_rational(
                                          e, mpq_class(p * (p - 1) / 2)),
                             "augmentation eigenvalue" + tag, note);
            } else if (j % 2 == 1) {
                const CyclotomicNumber want =
                    bernoulli_b1(p, chars[static_cast<std::size_t>(j)].inverse()) *
                    CyclotomicNumber::from_rational(e, mpq_class(p));
                ok &= expect(value == want, "odd eigenvalue" + tag, note);
            } else {
                ok &= expect(value.is_zero(), "even eigenvalue" + tag, note);
            }
        }
        const StickelbergerCover cover = stickelberger_cover(p);
        const auto s = smith_normal_form(bf_operator(*cover.derived.digraph));
        std::size_t rank = 0;
        for (const auto& d : s.invariant_factors)
            if (d != 0) ++rank;
        ok &= expect(rank == static_cast<std::size_t>((p + 1) / 2),
                     "circulant rank at p = " + std::to_string(p), note);
    }
    return ok;
}

// Randomized structural properties: Smith form, closed path counts,
// covering projections, and the Galois correspondence at p = 13.
bool criterion_properties(std::string& note) {
    bool ok = true;
    std::mt19937 rng(1729);

    // Smith normal form against minor gcds and its own transforms.
    std::uniform_int_distribution<std::size_t> dim(1, 4);
    std::uniform_int_distribution<long> entry(-9, 9);
    for (int iter = 0; iter < 1000 && ok; ++iter) {
        const std::size_t r = dim(rng), c = dim(rng);
        IntMatrix m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m.at(i, j) = entry(rng);
        const SNFResult s = smith_normal_form(m);
        const IntMatrix d = s.left_transform * m * s.right_transform;
        for (std::size_t i = 0; i < d.rows() && ok; ++i)
            for (std::size_t j = 0; j < d.cols() && ok; ++j) {
                const mpz_class want = i == j ? s.invariant_factors[i] : mpz_class(0);
                ok &= expect(d.at(i, j) == want, "smith diagonal shape", note);
            }
        mpz_class prev = 1;
        for (std::size_t t = 1; t <= std::min(r, c) && ok; ++t) {
            mpz_class g = 0;
            // gcd of t x t minors via determinant recursion over index sets.
            std::vector<std::size_t> ri(t), ci(t);
            std::function<void(std::size_t, std::size_t)> loop_rows =
                [&](std::size_t pos, std::size_t start) {
                    if (pos == t) {
                        std::function<void(std::size_t, std::size_t)> loop_cols =
                            [&](std::size_t cpos, std::size_t cstart) {
                                if (cpos == t) {
                                    IntMatrix sub(t, t);
                                    for (std::size_t a = 0; a < t; ++a)
                                        for (std::size_t b = 0; b < t; ++b)
                                            sub.at(a, b) = m.at(ri[a], ci[b]);
                                    mpz_class det = sub.determinant();
                                    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), det.get_mpz_t());
                                    return;
                                }
                                for (std::size_t x = cstart; x < c; ++x) {
                                    ci[cpos] = x;
                                    loop_cols(cpos + 1, x + 1);
                                }
                            };
                        loop_cols(0, 0);
                        return;
                    }
                    for (std::size_t x = start; x < r; ++x) {
                        ri[pos] = x;
                        loop_rows(pos + 1, x + 1);
                    }
                };
            loop_rows(0, 0);
            const mpz_class factor = s.invariant_factors[t - 1];
            if (g == 0) {
                ok &= expect(factor == 0, "rank break in invariant factors", note);
                break;
            }
            ok &= expect(factor * prev == g, "determinantal divisor chain", note);
            prev = g;
        }
    }

    // Closed path counts against powers of the adjacency matrix.
    std::uniform_int_distribution<std::size_t> nd(1, 5);
    std::uniform_int_distribution<long> ad(0, 2);
    for (int iter = 0; iter < 60 && ok; ++iter) {
        const std::size_t n = nd(rng);
        IntMatrix a(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) a.at(i, j) = ad(rng);
        const Digraph d = digraph_from_adjacency(a);
        for (unsigned long m = 1; m <= 4; ++m)
            ok &= expect(count_closed_paths(d, m) == a.power(m).trace(),
                         "closed path trace identity", note);
    }

    // Derived projections are covers; corrupting one edge image breaks
    // the star bijection.
    const std::vector<std::vector<long>> shapes = {{2}, {3}, {4}, {2, 2}, {6}};
    std::uniform_int_distribution<std::size_t> shape_pick(0, shapes.size() - 1);
    std::uniform_int_distribution<std::size_t> loop_pick(2, 3);
    for (int iter = 0; iter < 60 && ok; ++iter) {
        const FiniteAbelianGroup g(shapes[shape_pick(rng)]);
        const std::size_t loops = loop_pick(rng);
        std::vector<FiniteAbelianGroup::Element> labels;
        std::uniform_int_distribution<long> lab(0, g.order() - 1);
        for (std::size_t i = 0; i < loops; ++i) labels.push_back(g.element(lab(rng)));
        const VoltageAssignment v(share(bouquet(loops)), g, labels);
        const DerivedData dd = derived_digraph(v);
        ok &= expect(check_cover(dd.projection), "derived projection is a cover", note);
        std::vector<std::size_t> emap = dd.projection.edge_map();
        std::uniform_int_distribution<std::size_t> pick(0, emap.size() - 1);
        const std::size_t victim = pick(rng);
        emap[victim] = (emap[victim] + 1) % loops;
        const DigraphMorphism broken(dd.projection.source_ptr(), dd.projection.target_ptr(),
                                     dd.projection.vertex_map(), emap);
        ok &= expect(!check_cover(broken), "corrupted projection must fail", note);
    }

    // Galois correspondence across every subgroup at p = 13.
    const StickelbergerCover cover = stickelberger_cover(13);
    const DerivedData& dd = cover.derived;
    for (const Subgroup& h : all_subgroups(cover.group)) {
        const std::string tag = " for |H| = " + std::to_string(h.order());
        const Digraph direct = intermediate_quotient(cover.voltage, h);
        const GroupAction act = restricted_action(dd, cover.voltage, h);
        auto [orbit, proj] = quotient_digraph(dd.digraph, act);
        ok &= expect(direct.num_vertices() == orbit.num_vertices() &&
                         direct.num_edges() == orbit.num_edges(),
                     "quotient size" + tag, note);
        ok &= expect(zeta_report(direct).g == zeta_report(orbit).g, "quotient zeta" + tag,
                     note);
        ok &= expect(check_cover(proj), "quotient projection" + tag, note);
        ok &= expect(is_galois(proj), "quotient normality" + tag, note);
        ok &= expect(deck_group(proj).size() == static_cast<std::size_t>(h.order()),
                     "deck transitivity" + tag, note);
    }
    return ok;
}

}  // namespace

int main() {
    run(1, "derived torsion order is p^((p-1)/2) times the minus class number for p <= 61",
        criterion_torsion);
    run(2, "the two-vertex worked example has its exact zeta and divisibility data",
        criterion_worked_example);
    run(3, "the multiplier matches the closed form along three routes for p <= 41",
        criterion_multiplier);
    run(4, "the plus quotient has rank (p-3)/2, torsion Z/p, and the signed multiplier",
        criterion_plus);
    run(5, "the equivariant zeta satisfies product, inflation, and induction identities",
        criterion_artin);
    run(6, "isotypic cardinalities match the class group side on all admissible pairs",
        criterion_isotypic);
    run(7, "circulant eigenvalues are Bernoulli values and the rank is (p+1)/2 for p <= 23",
        criterion_eigenvalues);
    run(8, "randomized smith, path count, covering, and Galois correspondence properties",
        criterion_properties);
    if (failures > 0) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all 8 criteria passed\n");
    return 0;
}
