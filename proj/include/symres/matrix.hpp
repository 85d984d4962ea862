#pragma once

#include <cstddef>
#include <vector>

#include "symres/poly.hpp"

namespace symres {

/* Dense row-major matrix of polynomials over one ring. Resolution matrices
 * are sparse in practice; zero entries are just zero polynomials. */
class PolyMatrix {
public:
    PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols);

    static PolyMatrix identity(const RingPtr& ring, std::size_t n);

    const RingPtr& ring() const { return ring_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Polynomial& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    Polynomial& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

    bool is_zero() const;
    std::size_t nonzero_count() const;

    PolyMatrix operator*(const PolyMatrix& o) const;
    bool operator==(const PolyMatrix& o) const;

    PolyMatrix submatrix(const std::vector<std::size_t>& row_idx,
                         const std::vector<std::size_t>& col_idx) const;

private:
    RingPtr ring_;
    std::size_t rows_, cols_;
    std::vector<Polynomial> entries_;
};

/* Ideal of the polynomial ring given by a generator list. Zero generators are
 * dropped on construction; the unit ideal is flagged and stores exactly {1}. */
struct Ideal {
    RingPtr ring;
    std::vector<Polynomial> generators;
    bool unit_flag = false;

    static Ideal zero(const RingPtr& ring);
    static Ideal unit(const RingPtr& ring);
    static Ideal span(const RingPtr& ring, std::vector<Polynomial> gens);
};

/* Exact determinant: cofactor expansion with sparsity-guided pivots for
 * n <= 4, fraction-free Bareiss elimination above. Throws on non-square. */
Polynomial determinant(const PolyMatrix& m);

/* Ideal of t x t minors. t <= 0 gives the unit ideal, t > min(rows, cols) the
 * zero ideal; otherwise generators are the nonzero minors, listed in
 * lexicographic order of (row-set, column-set). The guard bounds the number
 * of minors enumerated. */
Ideal minors_ideal(const PolyMatrix& m, long t, std::size_t max_minor_count = 100000);

/* Rank over the fraction field, by fraction-free elimination. */
std::size_t rank_over_fraction_field(const PolyMatrix& m);

} // namespace symres
