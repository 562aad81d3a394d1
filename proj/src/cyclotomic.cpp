#include "stickelgraph/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace stickelgraph {

namespace {

IntPolynomial cyclotomic_memo(unsigned long n, std::map<unsigned long, IntPolynomial>& memo) {
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
    std::vector<mpz_class> xn(n + 1);
    xn[0] = -1;
    xn[n] = 1;
    IntPolynomial result(std::move(xn));
    for (unsigned long d = 1; d < n; ++d)
        if (n % d == 0) result = result.divide_exact(cyclotomic_memo(d, memo));
    memo.emplace(n, result);
    return result;
}

// Remainder of a modulo a monic divisor; exact over Z.
IntPolynomial mod_monic(const IntPolynomial& a, const IntPolynomial& m) {
    if (a.degree() < m.degree()) return a;
    std::vector<mpz_class> c = a.coeffs();
    std::size_t dm = static_cast<std::size_t>(m.degree());
    for (std::size_t i = c.size(); i-- > dm;) {
        if (c[i] == 0) continue;
        mpz_class lead = c[i];
        for (std::size_t j = 0; j <= dm; ++j) c[i - dm + j] -= lead * m.coeff(j);
    }
    return IntPolynomial(std::move(c));
}

}  // namespace

IntPolynomial cyclotomic_polynomial(unsigned long n) {
    if (n == 0) throw std::invalid_argument("cyclotomic polynomials are indexed from 1");
    std::map<unsigned long, IntPolynomial> memo;
    return cyclotomic_memo(n, memo);
}

CyclotomicNumber::CyclotomicNumber(unsigned long order, IntPolynomial num, mpz_class den)
    : order_(order), num_(std::move(num)), den_(std::move(den)) {
    if (order_ == 0) throw std::invalid_argument("cyclotomic order must be positive");
    if (den_ == 0) throw std::invalid_argument("zero denominator");
    normalize();
}

void CyclotomicNumber::normalize() {
    num_ = mod_monic(num_, cyclotomic_polynomial(order_));
    if (den_ < 0) {
        den_ = -den_;
        num_ = -num_;
    }
    if (num_.is_zero()) {
        den_ = 1;
        return;
    }
    mpz_class g = gcd(num_.content(), den_);
    if (g > 1) {
        std::vector<mpz_class> c = num_.coeffs();
        for (mpz_class& x : c) x /= g;
        num_ = IntPolynomial(std::move(c));
        den_ /= g;
    }
}

CyclotomicNumber CyclotomicNumber::one(unsigned long order) {
    return CyclotomicNumber(order, IntPolynomial::constant(1));
}

CyclotomicNumber CyclotomicNumber::from_rational(unsigned long order, const mpq_class& q) {
    return CyclotomicNumber(order, IntPolynomial::constant(q.get_num()), q.get_den());
}

CyclotomicNumber CyclotomicNumber::zeta_power(unsigned long order, long k) {
    long r = k % static_cast<long>(order);
    if (r < 0) r += static_cast<long>(order);
    return CyclotomicNumber(order, IntPolynomial::monomial(1, static_cast<std::size_t>(r)));
}

namespace {
void require_same_order(unsigned long a, unsigned long b) {
    if (a != b) throw std::invalid_argument("cyclotomic values live in different fields");
}
}  // namespace

CyclotomicNumber CyclotomicNumber::operator+(const CyclotomicNumber& o) const {
    require_same_order(order_, o.order_);
    return CyclotomicNumber(order_, num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

CyclotomicNumber CyclotomicNumber::operator-(const CyclotomicNumber& o) const {
    require_same_order(order_, o.order_);
    return CyclotomicNumber(order_, num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

CyclotomicNumber CyclotomicNumber::operator-() const {
    return CyclotomicNumber(order_, -num_, den_);
}

CyclotomicNumber CyclotomicNumber::operator*(const CyclotomicNumber& o) const {
    require_same_order(order_, o.order_);
    return CyclotomicNumber(order_, num_ * o.num_, den_ * o.den_);
}

CyclotomicNumber CyclotomicNumber::pow(unsigned long e) const {
    CyclotomicNumber acc = one(order_);
    for (unsigned long i = 0; i < e; ++i) acc = acc * *this;
    return acc;
}

bool CyclotomicNumber::operator==(const CyclotomicNumber& o) const {
    return order_ == o.order_ && den_ == o.den_ && num_ == o.num_;
}

mpq_class CyclotomicNumber::to_rational() const {
    if (!is_rational()) throw std::domain_error("value is not rational");
    mpq_class q(num_.is_zero() ? mpz_class(0) : num_.coeff(0), den_);
    q.canonicalize();
    return q;
}

CycPolynomial::CycPolynomial(unsigned long order) : order_(order) {}

CycPolynomial::CycPolynomial(unsigned long order, std::vector<CyclotomicNumber> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_) require_same_order(order_, c.order());
    normalize();
}

CycPolynomial CycPolynomial::from_int_poly(unsigned long order, const IntPolynomial& p) {
    std::vector<CyclotomicNumber> c;
    for (const mpz_class& x : p.coeffs())
        c.push_back(CyclotomicNumber(order, IntPolynomial::constant(x)));
    return CycPolynomial(order, std::move(c));
}

void CycPolynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

CyclotomicNumber CycPolynomial::coeff(std::size_t k) const {
    if (k < coeffs_.size()) return coeffs_[k];
    return CyclotomicNumber::zero(order_);
}

CycPolynomial CycPolynomial::operator+(const CycPolynomial& o) const {
    require_same_order(order_, o.order_);
    std::vector<CyclotomicNumber> c;
    std::size_t n = std::max(coeffs_.size(), o.coeffs_.size());
    for (std::size_t k = 0; k < n; ++k) c.push_back(coeff(k) + o.coeff(k));
    return CycPolynomial(order_, std::move(c));
}

CycPolynomial CycPolynomial::operator-(const CycPolynomial& o) const {
    require_same_order(order_, o.order_);
    std::vector<CyclotomicNumber> c;
    std::size_t n = std::max(coeffs_.size(), o.coeffs_.size());
    for (std::size_t k = 0; k < n; ++k) c.push_back(coeff(k) - o.coeff(k));
    return CycPolynomial(order_, std::move(c));
}

CycPolynomial CycPolynomial::operator*(const CycPolynomial& o) const {
    require_same_order(order_, o.order_);
    if (coeffs_.empty() || o.coeffs_.empty()) return CycPolynomial(order_);
    std::vector<CyclotomicNumber> c(coeffs_.size() + o.coeffs_.size() - 1,
                                    CyclotomicNumber::zero(order_));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            c[i + j] = c[i + j] + coeffs_[i] * o.coeffs_[j];
    return CycPolynomial(order_, std::move(c));
}

bool CycPolynomial::operator==(const CycPolynomial& o) const {
    return order_ == o.order_ && coeffs_ == o.coeffs_;
}

CyclotomicNumber CycPolynomial::at_one() const {
    CyclotomicNumber s = CyclotomicNumber::zero(order_);
    for (const auto& c : coeffs_) s = s + c;
    return s;
}

unsigned long CycPolynomial::vanishing_order_at_one() const {
    if (is_zero()) throw std::invalid_argument("the zero polynomial vanishes to every order");
    std::vector<CyclotomicNumber> c = coeffs_;
    unsigned long order = 0;
    while (true) {
        CyclotomicNumber value = CyclotomicNumber::zero(order_);
        for (const auto& x : c) value = value + x;
        if (!value.is_zero()) return order;
        // Divide by u - 1 synthetically; exact since 1 is a root.
        std::vector<CyclotomicNumber> q;
        CyclotomicNumber carry = CyclotomicNumber::zero(order_);
        for (std::size_t k = c.size(); k-- > 1;) {
            carry = carry + c[k];
            q.push_back(carry);
        }
        std::reverse(q.begin(), q.end());
        c = std::move(q);
        ++order;
    }
}

}  // namespace stickelgraph
