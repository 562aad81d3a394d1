#include "stickelgraph/intmatrix.hpp"

#include <map>
#include <stdexcept>

namespace stickelgraph {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
    IntMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const mpz_class& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
        }
    return r;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
    IntMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
    return r;
}

IntMatrix IntMatrix::power(unsigned long n) const {
    if (!is_square()) throw std::invalid_argument("matrix power needs a square matrix");
    IntMatrix acc = identity(rows_), base = *this;
    while (n > 0) {
        if (n & 1) acc = acc * base;
        n >>= 1;
        if (n) base = base * base;
    }
    return acc;
}

mpz_class IntMatrix::trace() const {
    if (!is_square()) throw std::invalid_argument("trace needs a square matrix");
    mpz_class t = 0;
    for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

mpz_class IntMatrix::determinant() const {
    if (!is_square()) throw std::invalid_argument("determinant needs a square matrix");
    std::size_t n = rows_;
    if (n == 0) return 1;
    IntMatrix a = *this;
    int sign = 1;
    mpz_class prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            std::size_t i = k + 1;
            while (i < n && a.at(i, k) == 0) ++i;
            if (i == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(i, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class v = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                mpz_divexact(a.at(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
            }
            a.at(i, k) = 0;
        }
        prev = a.at(k, k);
    }
    mpz_class det = a.at(n - 1, n - 1);
    return sign > 0 ? det : mpz_class(-det);
}

namespace {

// Row and column operations applied to the work matrix while the four
// transforms are kept in sync: A invariantly equals L * input * R,
// L * Li = I and R * Ri = I.
struct SnfWork {
    IntMatrix a, l, li, r, ri;

    void swap_rows(std::size_t i, std::size_t k) {
        if (i == k) return;
        for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(i, j), a.at(k, j));
        for (std::size_t j = 0; j < l.cols(); ++j) std::swap(l.at(i, j), l.at(k, j));
        for (std::size_t j = 0; j < li.rows(); ++j) std::swap(li.at(j, i), li.at(j, k));
    }
    void swap_cols(std::size_t i, std::size_t k) {
        if (i == k) return;
        for (std::size_t j = 0; j < a.rows(); ++j) std::swap(a.at(j, i), a.at(j, k));
        for (std::size_t j = 0; j < r.rows(); ++j) std::swap(r.at(j, i), r.at(j, k));
        for (std::size_t j = 0; j < ri.cols(); ++j) std::swap(ri.at(i, j), ri.at(k, j));
    }
    // row_i -= q * row_k
    void add_row(std::size_t i, std::size_t k, const mpz_class& q) {
        if (q == 0) return;
        for (std::size_t j = 0; j < a.cols(); ++j) a.at(i, j) -= q * a.at(k, j);
        for (std::size_t j = 0; j < l.cols(); ++j) l.at(i, j) -= q * l.at(k, j);
        for (std::size_t j = 0; j < li.rows(); ++j) li.at(j, k) += q * li.at(j, i);
    }
    // col_i -= q * col_k
    void add_col(std::size_t i, std::size_t k, const mpz_class& q) {
        if (q == 0) return;
        for (std::size_t j = 0; j < a.rows(); ++j) a.at(j, i) -= q * a.at(j, k);
        for (std::size_t j = 0; j < r.rows(); ++j) r.at(j, i) -= q * r.at(j, k);
        for (std::size_t j = 0; j < ri.cols(); ++j) ri.at(k, j) += q * ri.at(i, j);
    }
    void negate_row(std::size_t i) {
        for (std::size_t j = 0; j < a.cols(); ++j) a.at(i, j) = -a.at(i, j);
        for (std::size_t j = 0; j < l.cols(); ++j) l.at(i, j) = -l.at(i, j);
        for (std::size_t j = 0; j < li.rows(); ++j) li.at(j, i) = -li.at(j, i);
    }
};

}  // namespace

SNFResult smith_normal_form(const IntMatrix& m) {
    std::size_t nr = m.rows(), nc = m.cols();
    SnfWork w{m, IntMatrix::identity(nr), IntMatrix::identity(nr), IntMatrix::identity(nc),
              IntMatrix::identity(nc)};
    std::size_t nd = std::min(nr, nc);

    for (std::size_t t = 0; t < nd; ++t) {
        for (;;) {
            // Pivot: nonzero entry of the trailing submatrix with
            // minimal absolute value, first such in row-major order.
            std::size_t pi = nr, pj = nc;
            mpz_class best;
            for (std::size_t i = t; i < nr; ++i)
                for (std::size_t j = t; j < nc; ++j) {
                    const mpz_class& v = w.a.at(i, j);
                    if (v == 0) continue;
                    mpz_class av = abs(v);
                    if (pi == nr || av < best) {
                        best = av;
                        pi = i;
                        pj = j;
                    }
                }
            if (pi == nr) {
                nd = t;  // trailing submatrix is zero
                break;
            }
            w.swap_rows(t, pi);
            w.swap_cols(t, pj);

            bool reduced = false;
            for (std::size_t i = t + 1; i < nr; ++i)
                if (w.a.at(i, t) != 0) {
                    mpz_class q;
                    mpz_fdiv_q(q.get_mpz_t(), w.a.at(i, t).get_mpz_t(), w.a.at(t, t).get_mpz_t());
                    w.add_row(i, t, q);
                    if (w.a.at(i, t) != 0) reduced = true;
                }
            for (std::size_t j = t + 1; j < nc; ++j)
                if (w.a.at(t, j) != 0) {
                    mpz_class q;
                    mpz_fdiv_q(q.get_mpz_t(), w.a.at(t, j).get_mpz_t(), w.a.at(t, t).get_mpz_t());
                    w.add_col(j, t, q);
                    if (w.a.at(t, j) != 0) reduced = true;
                }
            if (reduced) continue;  // smaller remainders exist, reselect pivot

            // Pivot must divide the rest of the submatrix so the
            // diagonal comes out in divisibility order.
            bool divides = true;
            for (std::size_t i = t + 1; i < nr && divides; ++i)
                for (std::size_t j = t + 1; j < nc && divides; ++j)
                    if (w.a.at(i, j) % w.a.at(t, t) != 0) {
                        w.add_row(t, i, mpz_class(-1));
                        divides = false;
                    }
            if (divides) break;
        }
        if (nd == t) break;
        if (w.a.at(t, t) < 0) w.negate_row(t);
    }

    SNFResult out;
    out.invariant_factors.resize(std::min(nr, nc));
    for (std::size_t i = 0; i < out.invariant_factors.size(); ++i)
        out.invariant_factors[i] = i < nd ? w.a.at(i, i) : 0;
    out.left_transform = std::move(w.l);
    out.left_inverse = std::move(w.li);
    out.right_transform = std::move(w.r);
    out.right_inverse = std::move(w.ri);
    return out;
}

namespace {

// det(I - A*u) over Z[u] by expansion along the first remaining row,
// memoized on the set of remaining columns.
IntPolynomial minor_expansion(const IntMatrix& a, unsigned mask,
                              std::map<unsigned, IntPolynomial>& memo) {
    if (mask == 0) return IntPolynomial{1};
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    std::size_t n = a.rows();
    // Row index: number of already-removed rows equals number of
    // removed columns, so the next row is n - popcount(mask).
    std::size_t row = n - static_cast<std::size_t>(__builtin_popcount(mask));
    IntPolynomial acc;
    int sign = 1;
    for (std::size_t j = 0; j < n; ++j) {
        if (!(mask & (1u << j))) continue;
        // entry of I - A*u at (row, j)
        IntPolynomial entry = IntPolynomial{row == j ? 1 : 0} - IntPolynomial::monomial(a.at(row, j), 1);
        if (!entry.is_zero()) {
            IntPolynomial sub = minor_expansion(a, mask & ~(1u << j), memo);
            IntPolynomial term = entry * sub;
            acc = sign > 0 ? acc + term : acc - term;
        }
        sign = -sign;
    }
    memo.emplace(mask, acc);
    return acc;
}

}  // namespace

mpz_class reversed_char_poly_at(const IntMatrix& a, const mpz_class& u0) {
    std::size_t n = a.rows();
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m.at(i, j) = (i == j ? mpz_class(1) : mpz_class(0)) - u0 * a.at(i, j);
    return m.determinant();
}

IntPolynomial reversed_char_poly(const IntMatrix& a) {
    if (!a.is_square()) throw std::invalid_argument("reversed_char_poly needs a square matrix");
    std::size_t n = a.rows();
    if (n == 0) return IntPolynomial{1};
    if (n <= 8) {
        std::map<unsigned, IntPolynomial> memo;
        return minor_expansion(a, (1u << n) - 1, memo);
    }
    // Evaluate at 0, 1, -1, 2, -2, ... and interpolate by divided
    // differences; the result is integral by construction.
    std::vector<mpq_class> xs, ys;
    xs.reserve(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        long x = (k % 2 == 1) ? static_cast<long>(k + 1) / 2 : -static_cast<long>(k) / 2;
        xs.emplace_back(x);
        ys.push_back(mpq_class(reversed_char_poly_at(a, mpz_class(x))));
    }
    // Newton coefficients in place.
    for (std::size_t level = 1; level <= n; ++level)
        for (std::size_t i = n; i >= level; --i) {
            ys[i] = (ys[i] - ys[i - 1]) / (xs[i] - xs[i - level]);
            if (i == level) break;
        }
    // Expand the Newton form to monomial coefficients.
    std::vector<mpq_class> poly{ys[n]};
    for (std::size_t i = n; i-- > 0;) {
        poly.push_back(0);
        for (std::size_t j = poly.size() - 1; j > 0; --j)
            poly[j] = poly[j - 1] - xs[i] * poly[j];
        poly[0] = ys[i] - xs[i] * poly[0];
    }
    std::vector<mpz_class> out(poly.size());
    for (std::size_t i = 0; i < poly.size(); ++i) {
        mpq_class c = poly[i];
        c.canonicalize();
        if (c.get_den() != 1) throw std::logic_error("interpolated coefficients must be integral");
        out[i] = c.get_num();
    }
    return IntPolynomial(std::move(out));
}

}  // namespace stickelgraph
