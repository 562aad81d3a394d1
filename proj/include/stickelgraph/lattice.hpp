#pragma once

#include <cstddef>
#include <utility>

#include "stickelgraph/intmatrix.hpp"

namespace stickelgraph {

// Sublattice of Z^ambient_rank. basis rows are independent and kept in
// the canonical echelon form produced by hermite_basis (positive pivots
// with strictly increasing pivot columns, entries above each pivot
// reduced into [0, pivot)), so two lattices are equal iff their basis
// matrices are equal. rank 0 is legal: basis is then 0 x ambient.
struct Lattice {
    std::size_t ambient_rank = 0;
    IntMatrix basis;

    std::size_t rank() const { return basis.rows(); }
    bool operator==(const Lattice& o) const {
        return ambient_rank == o.ambient_rank && basis == o.basis;
    }
};

// Canonical echelon basis of the lattice generated by the rows of gens
// (rows may be dependent or zero).
Lattice lattice_from_generators(std::size_t ambient_rank, const IntMatrix& gens);

// For M with c columns, both results live in Z^c: kernel is
// {x : M x = 0} and saturated_image is the smallest saturated sublattice
// containing the row lattice of M, i.e. rowspace(M) over Q intersected
// with Z^c.
std::pair<Lattice, Lattice> kernel_and_image_saturation(const IntMatrix& m);

// [outer : inner] for inner a finite-index sublattice of outer; rejects
// rank mismatch or non-containment with a diagnostic. Index of the
// empty (rank 0) pair is 1.
mpz_class lattice_index(const Lattice& outer, const Lattice& inner);

}  // namespace stickelgraph
