#include "stickelgraph/groupring.hpp"

#include <cstdint>
#include <stdexcept>
#include <unordered_map>

namespace stickelgraph {

GroupRingElement::GroupRingElement(FiniteAbelianGroup g)
    : group_(std::move(g)), coeffs_(group_.order()) {}

GroupRingElement GroupRingElement::unit(const FiniteAbelianGroup& g) {
    return basis(g, g.identity());
}

GroupRingElement GroupRingElement::basis(const FiniteAbelianGroup& g,
                                         const FiniteAbelianGroup::Element& e) {
    GroupRingElement x(g);
    x.coeffs_[g.index_of(g.reduce(e))] = 1;
    return x;
}

const mpz_class& GroupRingElement::coeff(const FiniteAbelianGroup::Element& e) const {
    return coeffs_[group_.index_of(group_.reduce(e))];
}

void GroupRingElement::set_coeff(const FiniteAbelianGroup::Element& e, mpz_class c) {
    coeffs_[group_.index_of(group_.reduce(e))] = std::move(c);
}

namespace {
void require_same_group(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) {
    if (!(a == b)) throw std::invalid_argument("group ring elements live over different groups");
}
}  // namespace

GroupRingElement GroupRingElement::operator+(const GroupRingElement& o) const {
    require_same_group(group_, o.group_);
    GroupRingElement r(group_);
    for (long i = 0; i < group_.order(); ++i) r.coeffs_[i] = coeffs_[i] + o.coeffs_[i];
    return r;
}

GroupRingElement GroupRingElement::operator-(const GroupRingElement& o) const {
    require_same_group(group_, o.group_);
    GroupRingElement r(group_);
    for (long i = 0; i < group_.order(); ++i) r.coeffs_[i] = coeffs_[i] - o.coeffs_[i];
    return r;
}

GroupRingElement GroupRingElement::operator-() const {
    GroupRingElement r(group_);
    for (long i = 0; i < group_.order(); ++i) r.coeffs_[i] = -coeffs_[i];
    return r;
}

GroupRingElement GroupRingElement::operator*(const GroupRingElement& o) const {
    require_same_group(group_, o.group_);
    GroupRingElement r(group_);
    for (long i = 0; i < group_.order(); ++i) {
        if (coeffs_[i] == 0) continue;
        FiniteAbelianGroup::Element a = group_.element(i);
        for (long j = 0; j < group_.order(); ++j) {
            if (o.coeffs_[j] == 0) continue;
            long k = group_.index_of(group_.add(a, group_.element(j)));
            r.coeffs_[k] += coeffs_[i] * o.coeffs_[j];
        }
    }
    return r;
}

GroupRingElement GroupRingElement::operator*(const mpz_class& c) const {
    GroupRingElement r(group_);
    for (long i = 0; i < group_.order(); ++i) r.coeffs_[i] = coeffs_[i] * c;
    return r;
}

bool GroupRingElement::operator==(const GroupRingElement& o) const {
    return group_ == o.group_ && coeffs_ == o.coeffs_;
}

bool GroupRingElement::is_zero() const {
    for (const mpz_class& c : coeffs_)
        if (c != 0) return false;
    return true;
}

mpz_class GroupRingElement::augmentation() const {
    mpz_class s = 0;
    for (const mpz_class& c : coeffs_) s += c;
    return s;
}

GroupRingPolynomial::GroupRingPolynomial(FiniteAbelianGroup g) : group_(std::move(g)) {}

GroupRingPolynomial::GroupRingPolynomial(FiniteAbelianGroup g, std::vector<GroupRingElement> coeffs)
    : group_(std::move(g)), coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_) require_same_group(group_, c.group());
    normalize();
}

GroupRingPolynomial GroupRingPolynomial::constant(GroupRingElement c) {
    FiniteAbelianGroup g = c.group();
    return GroupRingPolynomial(g, {std::move(c)});
}

void GroupRingPolynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

GroupRingElement GroupRingPolynomial::coeff(std::size_t k) const {
    if (k < coeffs_.size()) return coeffs_[k];
    return GroupRingElement(group_);
}

GroupRingPolynomial GroupRingPolynomial::operator+(const GroupRingPolynomial& o) const {
    require_same_group(group_, o.group_);
    std::vector<GroupRingElement> c;
    std::size_t n = std::max(coeffs_.size(), o.coeffs_.size());
    for (std::size_t k = 0; k < n; ++k) c.push_back(coeff(k) + o.coeff(k));
    return GroupRingPolynomial(group_, std::move(c));
}

GroupRingPolynomial GroupRingPolynomial::operator-(const GroupRingPolynomial& o) const {
    require_same_group(group_, o.group_);
    std::vector<GroupRingElement> c;
    std::size_t n = std::max(coeffs_.size(), o.coeffs_.size());
    for (std::size_t k = 0; k < n; ++k) c.push_back(coeff(k) - o.coeff(k));
    return GroupRingPolynomial(group_, std::move(c));
}

GroupRingPolynomial GroupRingPolynomial::operator*(const GroupRingPolynomial& o) const {
    require_same_group(group_, o.group_);
    if (coeffs_.empty() || o.coeffs_.empty()) return GroupRingPolynomial(group_);
    std::vector<GroupRingElement> c(coeffs_.size() + o.coeffs_.size() - 1,
                                    GroupRingElement(group_));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            c[i + j] = c[i + j] + coeffs_[i] * o.coeffs_[j];
    return GroupRingPolynomial(group_, std::move(c));
}

bool GroupRingPolynomial::operator==(const GroupRingPolynomial& o) const {
    return group_ == o.group_ && coeffs_ == o.coeffs_;
}

GroupRingElement GroupRingPolynomial::at_one() const {
    GroupRingElement s(group_);
    for (const auto& c : coeffs_) s = s + c;
    return s;
}

namespace {

GroupRingPolynomial minor_det(const std::vector<std::vector<GroupRingPolynomial>>& m,
                              std::uint32_t colmask, std::size_t row,
                              std::unordered_map<std::uint32_t, GroupRingPolynomial>& memo,
                              const FiniteAbelianGroup& g) {
    if (colmask == 0) return GroupRingPolynomial::constant(GroupRingElement::unit(g));
    auto it = memo.find(colmask);
    if (it != memo.end()) return it->second;
    GroupRingPolynomial acc(g);
    int sign = 1;
    for (std::size_t j = 0; j < m.size(); ++j) {
        if (!(colmask & (1u << j))) continue;
        GroupRingPolynomial sub = minor_det(m, colmask & ~(1u << j), row + 1, memo, g);
        GroupRingPolynomial term = m[row][j] * sub;
        acc = sign > 0 ? acc + term : acc - term;
        sign = -sign;
    }
    memo.emplace(colmask, acc);
    return acc;
}

}  // namespace

GroupRingPolynomial grp_determinant(const std::vector<std::vector<GroupRingPolynomial>>& m) {
    if (m.empty()) throw std::invalid_argument("determinant of an empty matrix");
    if (m.size() > 31) throw std::invalid_argument("group ring determinants support dimension <= 31");
    for (const auto& row : m)
        if (row.size() != m.size())
            throw std::invalid_argument("group ring determinant requires a square matrix");
    const FiniteAbelianGroup& g = m[0][0].group();
    std::unordered_map<std::uint32_t, GroupRingPolynomial> memo;
    return minor_det(m, (1u << m.size()) - 1, 0, memo, g);
}

GroupRingElement project(const GroupRingElement& x, const QuotientGroup& q) {
    require_same_group(x.group(), q.parent);
    GroupRingElement r(q.quotient);
    for (long i = 0; i < x.group().order(); ++i) {
        const mpz_class& c = x.coeff_by_index(i);
        if (c == 0) continue;
        FiniteAbelianGroup::Element img = q.project(x.group().element(i));
        r.set_coeff(img, r.coeff(img) + c);
    }
    return r;
}

GroupRingPolynomial project(const GroupRingPolynomial& x, const QuotientGroup& q) {
    std::vector<GroupRingElement> c;
    for (const auto& co : x.coeffs()) c.push_back(project(co, q));
    return GroupRingPolynomial(q.quotient, std::move(c));
}

}  // namespace stickelgraph
