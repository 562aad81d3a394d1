#include "stickelgraph/stickelberger.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace stickelgraph {

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

long mod_pow(long base, long exp, long mod) {
    long r = 1 % mod;
    base %= mod;
    while (exp > 0) {
        if (exp & 1) r = static_cast<long>((__int128)r * base % mod);
        base = static_cast<long>((__int128)base * base % mod);
        exp >>= 1;
    }
    return r;
}

std::vector<long> prime_factors(long n) {
    std::vector<long> out;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    if (n > 1) out.push_back(n);
    return out;
}

void require_odd_prime(long p) {
    if (p < 3 || p % 2 == 0 || !is_prime(p))
        throw std::invalid_argument("expected an odd prime, got " + std::to_string(p));
}

bool is_primitive_root(long g, long p, const std::vector<long>& factors) {
    if (g % p == 0) return false;
    for (long q : factors)
        if (mod_pow(g, (p - 1) / q, p) == 1) return false;
    return true;
}

// dlog[a] = k with generator^k = a (mod p), for a = 1..p-1.
std::vector<long> discrete_log_table(long p, long generator) {
    std::vector<long> dlog(p, -1);
    long power = 1;
    for (long k = 0; k < p - 1; ++k) {
        dlog[power] = k;
        power = static_cast<long>((__int128)power * generator % p);
    }
    if (power != 1) throw std::logic_error("generator is not a primitive root");
    return dlog;
}

// Coefficient [generator^{-k} mod p] on x^k, the power-table form of
// the circulant representer.
IntPolynomial power_table_poly(long p, long generator) {
    std::vector<mpz_class> c(p - 1);
    for (long k = 0; k < p - 1; ++k) c[k] = mod_pow(generator, (p - 1 - k) % (p - 1), p);
    return IntPolynomial(std::move(c));
}

}  // namespace

long smallest_primitive_root(long p) {
    require_odd_prime(p);
    std::vector<long> factors = prime_factors(p - 1);
    for (long g = 2; g < p; ++g)
        if (is_primitive_root(g, p, factors)) return g;
    throw std::logic_error("no primitive root found below p");
}

long prime_cap() {
    const char* env = std::getenv("STICKELGRAPH_PRIME_CAP");
    if (env == nullptr || *env == '\0') return 199;
    char* end = nullptr;
    long cap = std::strtol(env, &end, 10);
    if (end == nullptr || *end != '\0' || cap < 3)
        throw std::invalid_argument("STICKELGRAPH_PRIME_CAP must be an integer >= 3");
    return cap;
}

GroupRingElement stickelberger_element(long p) {
    require_odd_prime(p);
    FiniteAbelianGroup delta({p - 1});
    GroupRingElement theta(delta);
    long g = smallest_primitive_root(p);
    // sigma_a^{-1} sits at -dlog(a); scanning k = -dlog(a) directly,
    // the coefficient there is -(g^{-k} mod p).
    for (long k = 0; k < p - 1; ++k)
        theta.set_coeff({k}, -mod_pow(g, (p - 1 - k) % (p - 1), p));
    return theta;
}

StickelbergerCover stickelberger_cover(long p) {
    require_odd_prime(p);
    if (p > prime_cap())
        throw std::invalid_argument("p = " + std::to_string(p) +
                                    " exceeds the prime cap of " + std::to_string(prime_cap()));
    long g = smallest_primitive_root(p);
    FiniteAbelianGroup delta({p - 1});
    std::vector<long> dlog = discrete_log_table(p, g);

    std::vector<Digraph::Edge> edges;
    std::vector<FiniteAbelianGroup::Element> labels;
    edges.push_back({"e0", 0, 0});
    labels.push_back({0});  // sigma_1 is the identity
    for (long a = 1; a < p; ++a) {
        long voltage = (p - 1 - dlog[a]) % (p - 1);
        for (long j = 1; j <= a; ++j) {
            edges.push_back({"e" + std::to_string(a) + "_" + std::to_string(j), 0, 0});
            labels.push_back({voltage});
        }
    }
    auto base = share(Digraph({"v"}, std::move(edges)));
    VoltageAssignment voltage(base, delta, std::move(labels));
    DerivedData derived = derived_digraph(voltage);
    if (!is_strongly_connected(*derived.digraph))
        throw std::logic_error("the Stickelberger cover must be strongly connected");

    auto adj = voltage_adjacency(voltage);
    GroupRingPolynomial gamma(delta, {GroupRingElement::unit(delta), -adj[0][0]});
    if (!(gamma.at_one() == stickelberger_element(p)))
        throw std::logic_error("gamma(1) disagrees with the Stickelberger element");

    return {p, g, delta, std::move(voltage), std::move(derived), std::move(gamma)};
}

CyclotomicNumber bernoulli_b1(long p, const Character& psi) {
    require_odd_prime(p);
    if (!(psi.group == FiniteAbelianGroup({p - 1})))
        throw std::invalid_argument("the character must live on the cyclic group of order p-1");
    if (psi.is_trivial())
        throw std::invalid_argument("Bernoulli values are defined for nontrivial characters");
    long g = smallest_primitive_root(p);
    std::vector<long> dlog = discrete_log_table(p, g);
    unsigned long field = psi.value_order();
    CyclotomicNumber acc = CyclotomicNumber::zero(field);
    for (long a = 1; a < p; ++a)
        acc = acc + psi.value({dlog[a]}) * CyclotomicNumber(field, IntPolynomial::constant(a));
    return acc * CyclotomicNumber::from_rational(field, mpq_class(1, p));
}

mpz_class minus_class_number_product(long p) {
    require_odd_prime(p);
    FiniteAbelianGroup delta({p - 1});
    unsigned long field = static_cast<unsigned long>(delta.exponent());
    CyclotomicNumber prod = CyclotomicNumber::one(field);
    CyclotomicNumber minus_half = CyclotomicNumber::from_rational(field, mpq_class(-1, 2));
    for (const Character& psi : all_characters(delta)) {
        if (!psi.odd.has_value() || !*psi.odd) continue;
        prod = prod * (minus_half * bernoulli_b1(p, psi.inverse()));
    }
    CyclotomicNumber h = prod * CyclotomicNumber::from_rational(field, mpq_class(2 * p));
    mpq_class value = h.to_rational();
    if (value.get_den() != 1 || value <= 0)
        throw std::logic_error("the minus class number product must be a positive integer, got " +
                               value.get_str());
    return value.get_num();
}

mpz_class minus_class_number_resultant(long p) {
    require_odd_prime(p);
    long g = smallest_primitive_root(p);
    long half = (p - 1) / 2;
    IntPolynomial f = power_table_poly(p, g);
    IntPolynomial a = IntPolynomial::monomial(1, half) + IntPolynomial::constant(1);
    mpz_class res = resultant(a, f);
    // h = 2p (-1/2)^half res / p^half
    mpq_class value(2 * p * res, 1);
    if (half % 2 == 1) value = -value;
    mpz_class denom_z;
    mpz_ui_pow_ui(denom_z.get_mpz_t(), static_cast<unsigned long>(2 * p),
                  static_cast<unsigned long>(half));
    value /= mpq_class(denom_z);
    value.canonicalize();
    if (value.get_den() != 1 || value <= 0)
        throw std::logic_error("the resultant route must yield a positive integer, got " +
                               value.get_str());
    return value.get_num();
}

mpz_class minus_class_number(long p) {
    mpz_class fast = minus_class_number_resultant(p);
    if (p <= 60) {
        mpz_class exact = minus_class_number_product(p);
        if (exact != fast)
            throw std::logic_error("minus class number routes disagree at p = " +
                                   std::to_string(p));
    }
    return fast;
}

IntPolynomial circulant_poly(long p, long generator) {
    require_odd_prime(p);
    generator %= p;
    if (generator < 0) generator += p;
    if (!is_primitive_root(generator, p, prime_factors(p - 1)))
        throw std::invalid_argument(std::to_string(generator) +
                                    " is not a primitive root mod " + std::to_string(p));
    IntPolynomial f = power_table_poly(p, generator);

    // The derived BF operator, read in the basis of powers of
    // sigma_generator, must be the circulant with first row
    // -(1, [generator], [generator^2], ...).
    StickelbergerCover cover = stickelberger_cover(p);
    IntMatrix bf = bf_operator(*cover.derived.digraph);
    std::vector<long> dlog = discrete_log_table(p, cover.generator);
    long shift = dlog[generator];
    long n = p - 1;
    for (long s = 0; s < n; ++s)
        for (long t = 0; t < n; ++t) {
            long perm_s = (shift * s) % n, perm_t = (shift * t) % n;
            mpz_class expect = -mod_pow(generator, ((t - s) % n + n) % n, p);
            if (bf.at(perm_s, perm_t) != expect)
                throw std::logic_error("circulant pattern disagrees with the BF operator");
        }
    return f;
}

mpz_class m_via_resultant(long p) {
    require_odd_prime(p);
    long half = (p - 1) / 2;
    std::vector<mpz_class> ones(half, 1);  // 1 + x + ... + x^{(p-3)/2}
    IntPolynomial g(std::move(ones));
    IntPolynomial k = (IntPolynomial{-1, 1}) *
                      (IntPolynomial::monomial(1, half) + IntPolynomial::constant(1));
    return abs(resultant(g, k));
}

PlusQuotientReport plus_quotient_analysis(long p) {
    StickelbergerCover cover = stickelberger_cover(p);
    auto j = cover.group.unique_order2_element();
    if (!j) throw std::logic_error("a cyclic group of even order has an order-2 element");
    Subgroup h(cover.group, {*j});

    PlusQuotientReport rep;
    rep.p = p;
    rep.zeta = zeta_report(intermediate_quotient(cover.voltage, h));
    rep.g_star_plus = rep.zeta.special_value;
    long sign = ((p - 1) / 2) % 2 == 0 ? 1 : -1;
    mpz_class expected_m = sign * mpz_class((p - 1) / 2);

    std::ostringstream detail;
    if (rep.zeta.bf.free_rank != static_cast<std::size_t>((p - 3) / 2))
        detail << "free rank " << rep.zeta.bf.free_rank << " != " << (p - 3) / 2 << "; ";
    if (rep.zeta.bf.torsion_factors != std::vector<mpz_class>{p})
        detail << "torsion is not exactly (" << p << "); ";
    if (rep.g_star_plus != expected_m * p)
        detail << "special value " << rep.g_star_plus << " != " << expected_m * p << "; ";
    if (!rep.zeta.m.has_value() || *rep.zeta.m != expected_m)
        detail << "m is not " << expected_m << "; ";
    if (rep.zeta.m.has_value()) rep.m_plus = *rep.zeta.m;

    // gamma of the quotient voltage at u = 1 is -p times the norm
    // element of the quotient group.
    QuotientGroup q = quotient_group(cover.group, h);
    GroupRingPolynomial gq = equivariant_zeta(quotient_voltage(cover.voltage, q));
    GroupRingElement norm(q.quotient);
    for (long i = 0; i < q.quotient.order(); ++i)
        norm.set_coeff(q.quotient.element(i), 1);
    if (!(gq.at_one() == norm * mpz_class(-p))) detail << "gamma(1) != -p * norm element; ";

    rep.detail = detail.str();
    if (!rep.detail.empty()) rep.detail.erase(rep.detail.size() - 2);
    rep.identities_hold = rep.detail.empty();
    return rep;
}

TheoremAReport verify_theorem_a(long p) {
    StickelbergerCover cover = stickelberger_cover(p);
    ZetaReport zr = zeta_report(*cover.derived.digraph);

    TheoremAReport rep;
    rep.p = p;
    rep.bf_torsion_factors = zr.bf.torsion_factors;
    rep.bf_free_rank = zr.bf.free_rank;
    rep.bf_torsion_order = zr.bf.torsion_order;
    rep.g_star_y = zr.special_value;
    rep.h_minus = minus_class_number(p);

    std::ostringstream detail;

    // Independent torsion computation from the power-table circulant,
    // never touching the digraph.
    long n = p - 1;
    IntMatrix circulant(n, n);
    for (long s = 0; s < n; ++s)
        for (long t = 0; t < n; ++t)
            circulant.at(s, t) = -mod_pow(cover.generator, ((t - s) % n + n) % n, p);
    mpz_class circ_torsion = 1;
    for (const mpz_class& d : smith_normal_form(circulant).invariant_factors)
        if (d > 1) circ_torsion *= d;

    mpz_class expected;
    mpz_ui_pow_ui(expected.get_mpz_t(), static_cast<unsigned long>(p),
                  static_cast<unsigned long>((p - 1) / 2));
    expected *= rep.h_minus;
    rep.theorem_a_holds = zr.bf.torsion_order == expected && circ_torsion == expected;
    if (!rep.theorem_a_holds)
        detail << "torsion " << zr.bf.torsion_order.get_str() << " (circulant "
               << circ_torsion.get_str() << ") vs p^((p-1)/2) h = " << expected.get_str()
               << "; ";

    // |m| three ways plus the closed form and its sign.
    long sign = ((p - 1) / 2) % 2 == 0 ? 1 : -1;
    mpz_class closed;
    mpz_ui_pow_ui(closed.get_mpz_t(), 2, static_cast<unsigned long>((p - 3) / 2));
    closed *= (p - 1) / 2;
    if (!zr.m.has_value()) {
        detail << "delta != 0 so m is undefined; ";
        rep.three_way_m_agreement = false;
    } else {
        rep.m_y = *zr.m;
        mpz_class lattice_m = r_invariant_m(*cover.derived.digraph);
        mpz_class resultant_m = m_via_resultant(p);
        rep.three_way_m_agreement = abs(rep.m_y) == lattice_m && lattice_m == resultant_m &&
                                    resultant_m == closed && rep.m_y == sign * closed;
        if (!rep.three_way_m_agreement)
            detail << "m routes: zeta " << rep.m_y.get_str() << ", lattice "
                   << lattice_m.get_str() << ", resultant " << resultant_m.get_str()
                   << ", closed form " << mpz_class(sign * closed).get_str() << "; ";
    }

    PlusQuotientReport plus = plus_quotient_analysis(p);
    rep.m_y_plus = plus.m_plus;
    rep.g_star_y_plus = plus.g_star_plus;
    if (!plus.identities_hold) detail << "plus part: " << plus.detail << "; ";

    rep.detail = detail.str();
    if (!rep.detail.empty()) rep.detail.erase(rep.detail.size() - 2);
    return rep;
}

}  // namespace stickelgraph
