#include "stickelgraph/polynomial.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace stickelgraph {

namespace {
const mpz_class kZero = 0;
}

IntPolynomial::IntPolynomial(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    normalize();
}

IntPolynomial IntPolynomial::constant(const mpz_class& c) {
    IntPolynomial p;
    if (c != 0) p.coeffs_.push_back(c);
    return p;
}

IntPolynomial IntPolynomial::monomial(const mpz_class& c, std::size_t k) {
    IntPolynomial p;
    if (c != 0) {
        p.coeffs_.assign(k + 1, kZero);
        p.coeffs_[k] = c;
    }
    return p;
}

void IntPolynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const mpz_class& IntPolynomial::coeff(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : kZero;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
    std::vector<mpz_class> out(std::max(coeffs_.size(), o.coeffs_.size()), kZero);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeff(i) + o.coeff(i);
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
    std::vector<mpz_class> out(std::max(coeffs_.size(), o.coeffs_.size()), kZero);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeff(i) - o.coeff(i);
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator-() const {
    std::vector<mpz_class> out(coeffs_);
    for (auto& c : out) c = -c;
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<mpz_class> out(coeffs_.size() + o.coeffs_.size() - 1, kZero);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator*(const mpz_class& c) const {
    if (c == 0) return {};
    std::vector<mpz_class> out(coeffs_);
    for (auto& e : out) e *= c;
    return IntPolynomial(std::move(out));
}

mpz_class IntPolynomial::evaluate(const mpz_class& x) const {
    mpz_class acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
}

mpq_class IntPolynomial::evaluate(const mpq_class& x) const {
    mpq_class acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + mpq_class(coeffs_[i]);
    return acc;
}

IntPolynomial IntPolynomial::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<mpz_class> out(coeffs_.size() - 1, kZero);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * static_cast<long>(i);
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::divide_exact(const IntPolynomial& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
    if (is_zero()) return {};
    if (degree() < divisor.degree()) throw std::domain_error("inexact polynomial division");
    std::vector<mpz_class> rem(coeffs_);
    std::vector<mpz_class> quot(coeffs_.size() - divisor.coeffs_.size() + 1, kZero);
    const mpz_class& lead = divisor.coeffs_.back();
    for (std::size_t i = quot.size(); i-- > 0;) {
        mpz_class& top = rem[i + divisor.coeffs_.size() - 1];
        if (top == 0) continue;
        if (top % lead != 0) throw std::domain_error("inexact polynomial division");
        quot[i] = top / lead;
        for (std::size_t j = 0; j < divisor.coeffs_.size(); ++j)
            rem[i + j] -= quot[i] * divisor.coeffs_[j];
    }
    for (const auto& c : rem)
        if (c != 0) throw std::domain_error("inexact polynomial division");
    return IntPolynomial(std::move(quot));
}

mpz_class IntPolynomial::content() const {
    mpz_class g = 0;
    for (const auto& c : coeffs_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

std::string IntPolynomial::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const mpz_class& c = coeffs_[k];
        if (c == 0) continue;
        if (!first) out << (c > 0 ? " + " : " - ");
        else if (c < 0) out << "-";
        first = false;
        mpz_class a = abs(c);
        if (k == 0) {
            out << a.get_str();
        } else {
            if (a != 1) out << a.get_str() << "*";
            out << var;
            if (k > 1) out << "^" << k;
        }
    }
    return out.str();
}

TaylorAtOne taylor_at_one(const IntPolynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("taylor_at_one: zero polynomial");
    // Horner in (1 + t): acc <- acc * (1 + t) + c_k walking degrees downward.
    std::vector<mpz_class> acc;
    for (std::size_t i = p.coeffs().size(); i-- > 0;) {
        acc.push_back(0);
        for (std::size_t j = acc.size() - 1; j-- > 0;) acc[j + 1] += acc[j];
        acc[0] += p.coeffs()[i];
    }
    IntPolynomial shifted((std::vector<mpz_class>(acc)));
    unsigned order = 0;
    while (shifted.coeff(order) == 0) ++order;
    return TaylorAtOne{order, shifted.coeff(order), shifted};
}

namespace {

// Pseudo-remainder of a by b: lc(b)^(deg a - deg b + 1) * a = q*b + r.
IntPolynomial pseudo_rem(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<mpz_class> r(a.coeffs());
    const auto& bc = b.coeffs();
    const mpz_class& lb = bc.back();
    int shift = a.degree() - b.degree();
    for (int i = shift; i >= 0; --i) {
        mpz_class top = r[i + bc.size() - 1];
        for (auto& c : r) c *= lb;
        for (std::size_t j = 0; j < bc.size(); ++j) r[i + j] -= top * bc[j];
        r.resize(i + bc.size() - 1);
    }
    return IntPolynomial(std::move(r));
}

}  // namespace

mpz_class resultant(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return 0;
    auto pow_z = [](const mpz_class& base, unsigned long e) {
        mpz_class out;
        mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
        return out;
    };
    auto exact_div = [](const mpz_class& num, const mpz_class& den) {
        if (num % den != 0) throw std::logic_error("subresultant divisibility failure");
        return mpz_class(num / den);
    };
    // Subresultant remainder sequence after Collins; the content is split
    // off first and restored through t = cont(a)^deg(b) * cont(b)^deg(a).
    mpz_class ca = a.content(), cb = b.content();
    mpz_class t = pow_z(ca, b.degree()) * pow_z(cb, a.degree());
    IntPolynomial f = a.divide_exact(IntPolynomial::constant(ca));
    IntPolynomial g = b.divide_exact(IntPolynomial::constant(cb));
    int sign = 1;
    if (f.degree() < g.degree()) {
        if ((f.degree() & 1) && (g.degree() & 1)) sign = -sign;
        std::swap(f, g);
    }
    mpz_class gc = 1, h = 1;
    while (g.degree() > 0) {
        int delta = f.degree() - g.degree();
        if ((f.degree() & 1) && (g.degree() & 1)) sign = -sign;
        IntPolynomial r = pseudo_rem(f, g);
        f = g;
        mpz_class scale = gc * pow_z(h, delta);
        std::vector<mpz_class> rc(r.coeffs());
        for (auto& c : rc) c = exact_div(c, scale);
        g = IntPolynomial(std::move(rc));
        gc = f.coeff(f.degree());
        if (delta > 0) h = exact_div(pow_z(gc, delta), pow_z(h, delta - 1));
    }
    if (g.is_zero()) return 0;
    if (f.degree() == 0) return sign > 0 ? t : mpz_class(-t);  // both constants
    mpz_class res = exact_div(pow_z(g.coeff(0), f.degree()), pow_z(h, f.degree() - 1));
    res *= t;
    return sign > 0 ? res : mpz_class(-res);
}

IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b) {
    auto primitive = [](const IntPolynomial& p) {
        if (p.is_zero()) return p;
        mpz_class c = p.content();
        if (p.coeff(p.degree()) < 0) c = -c;
        std::vector<mpz_class> out(p.coeffs());
        for (auto& e : out) e /= c;
        return IntPolynomial(std::move(out));
    };
    IntPolynomial f = a, g = b;
    if (f.is_zero()) return primitive(g);
    if (g.is_zero()) return primitive(f);
    mpz_class cont;
    mpz_gcd(cont.get_mpz_t(), f.content().get_mpz_t(), g.content().get_mpz_t());
    f = primitive(f);
    g = primitive(g);
    if (f.degree() < g.degree()) std::swap(f, g);
    while (!g.is_zero()) {
        IntPolynomial r = primitive(pseudo_rem(f, g));
        f = g;
        g = r;
    }
    return primitive(f) * cont;
}

}  // namespace stickelgraph
