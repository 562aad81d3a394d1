#include "stickelgraph/lattice.hpp"

#include <sstream>
#include <stdexcept>

namespace stickelgraph {

namespace {

// Integer row echelon form with positive pivots, strictly increasing
// pivot columns, and entries above each pivot reduced modulo it. This
// form is unique for the row lattice, so it doubles as an equality key.
IntMatrix hermite_rows(IntMatrix h) {
    std::size_t nr = h.rows(), nc = h.cols();
    std::size_t r = 0;
    for (std::size_t col = 0; col < nc && r < nr; ++col) {
        for (;;) {
            std::size_t best = nr;
            std::size_t nonzero = 0;
            for (std::size_t i = r; i < nr; ++i) {
                if (h.at(i, col) == 0) continue;
                ++nonzero;
                if (best == nr || abs(h.at(i, col)) < abs(h.at(best, col))) best = i;
            }
            if (nonzero == 0) break;
            if (nonzero == 1) {
                if (best != r)
                    for (std::size_t j = 0; j < nc; ++j) std::swap(h.at(r, j), h.at(best, j));
                break;
            }
            for (std::size_t i = r; i < nr; ++i) {
                if (i == best || h.at(i, col) == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), h.at(i, col).get_mpz_t(), h.at(best, col).get_mpz_t());
                if (q != 0)
                    for (std::size_t j = 0; j < nc; ++j) h.at(i, j) -= q * h.at(best, j);
            }
        }
        if (h.at(r, col) == 0) continue;
        if (h.at(r, col) < 0)
            for (std::size_t j = 0; j < nc; ++j) h.at(r, j) = -h.at(r, j);
        for (std::size_t i = 0; i < r; ++i) {
            mpz_class q;
            mpz_fdiv_q(q.get_mpz_t(), h.at(i, col).get_mpz_t(), h.at(r, col).get_mpz_t());
            if (q != 0)
                for (std::size_t j = 0; j < nc; ++j) h.at(i, j) -= q * h.at(r, j);
        }
        ++r;
    }
    IntMatrix out(r, nc);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < nc; ++j) out.at(i, j) = h.at(i, j);
    return out;
}

}  // namespace

Lattice lattice_from_generators(std::size_t ambient_rank, const IntMatrix& gens) {
    if (gens.rows() > 0 && gens.cols() != ambient_rank)
        throw std::invalid_argument("generator width must match the ambient rank");
    IntMatrix g = gens;
    if (g.rows() == 0) g = IntMatrix(0, ambient_rank);
    return Lattice{ambient_rank, hermite_rows(std::move(g))};
}

std::pair<Lattice, Lattice> kernel_and_image_saturation(const IntMatrix& m) {
    std::size_t nc = m.cols();
    SNFResult snf = smith_normal_form(m);
    std::size_t nd = snf.invariant_factors.size();

    std::vector<std::size_t> free_cols, image_rows;
    for (std::size_t j = 0; j < nc; ++j) {
        if (j < nd && snf.invariant_factors[j] != 0)
            image_rows.push_back(j);
        else
            free_cols.push_back(j);
    }
    // M = U^-1 D V^-1: the row lattice is spanned by d_i * row_i(V^-1),
    // so its saturation keeps exactly the rows with d_i != 0; the right
    // kernel is spanned by the columns of V at the zero positions.
    IntMatrix kernel_gens(free_cols.size(), nc);
    for (std::size_t i = 0; i < free_cols.size(); ++i)
        for (std::size_t j = 0; j < nc; ++j)
            kernel_gens.at(i, j) = snf.right_transform.at(j, free_cols[i]);
    IntMatrix image_gens(image_rows.size(), nc);
    for (std::size_t i = 0; i < image_rows.size(); ++i)
        for (std::size_t j = 0; j < nc; ++j)
            image_gens.at(i, j) = snf.right_inverse.at(image_rows[i], j);
    return {lattice_from_generators(nc, kernel_gens), lattice_from_generators(nc, image_gens)};
}

mpz_class lattice_index(const Lattice& outer, const Lattice& inner) {
    if (outer.ambient_rank != inner.ambient_rank)
        throw std::invalid_argument("lattice_index: ambient ranks differ");
    if (outer.rank() != inner.rank()) {
        std::ostringstream msg;
        msg << "lattice_index: rank mismatch (outer " << outer.rank() << ", inner " << inner.rank()
            << ")";
        throw std::invalid_argument(msg.str());
    }
    std::size_t k = outer.rank(), n = outer.ambient_rank;
    if (k == 0) return 1;

    // Pivot columns of the echelon outer basis.
    std::vector<std::size_t> pivot(k);
    for (std::size_t i = 0; i < k; ++i) {
        std::size_t j = 0;
        while (j < n && outer.basis.at(i, j) == 0) ++j;
        pivot[i] = j;
    }
    // Solve row * outer.basis = inner row by forward substitution on the
    // pivot columns, then verify the whole row and integrality.
    IntMatrix x(k, k);
    for (std::size_t r = 0; r < k; ++r) {
        std::vector<mpq_class> y(k);
        for (std::size_t i = 0; i < k; ++i) {
            mpq_class acc(inner.basis.at(r, pivot[i]));
            for (std::size_t j = 0; j < i; ++j)
                acc -= y[j] * mpq_class(outer.basis.at(j, pivot[i]));
            acc /= mpq_class(outer.basis.at(i, pivot[i]));
            y[i] = acc;
        }
        for (std::size_t col = 0; col < n; ++col) {
            mpq_class acc = 0;
            for (std::size_t i = 0; i < k; ++i) acc += y[i] * mpq_class(outer.basis.at(i, col));
            if (acc != mpq_class(inner.basis.at(r, col)))
                throw std::invalid_argument(
                    "lattice_index: inner basis row outside the span of the outer lattice");
        }
        for (std::size_t i = 0; i < k; ++i) {
            mpq_class c = y[i];
            c.canonicalize();
            if (c.get_den() != 1)
                throw std::invalid_argument(
                    "lattice_index: inner lattice not contained in the outer one");
            x.at(r, i) = c.get_num();
        }
    }
    mpz_class det = x.determinant();
    if (det == 0) throw std::logic_error("lattice_index: dependent inner basis");
    return abs(det);
}

}  // namespace stickelgraph
