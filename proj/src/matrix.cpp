#include "symres/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "symres/errors.hpp"

namespace symres {

/* zero rows or columns are legal (vanishing exterior powers produce them) */
PolyMatrix::PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols),
      entries_(rows * cols, Polynomial(ring_))
{
}

PolyMatrix PolyMatrix::identity(const RingPtr& ring, std::size_t n)
{
    PolyMatrix m(ring, n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = Polynomial::one(ring);
    return m;
}

bool PolyMatrix::is_zero() const
{
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const Polynomial& p) { return p.is_zero(); });
}

std::size_t PolyMatrix::nonzero_count() const
{
    std::size_t n = 0;
    for (const auto& p : entries_)
        if (!p.is_zero())
            ++n;
    return n;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const
{
    if (!same_ring(ring_, o.ring_))
        throw InputError("mismatched rings in matrix product");
    if (cols_ != o.rows_)
        throw InputError("matrix product shape mismatch: " + std::to_string(cols_) + " vs " +
                         std::to_string(o.rows_));
    PolyMatrix r(ring_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Polynomial& a = at(i, k);
            if (a.is_zero())
                continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                const Polynomial& b = o.at(k, j);
                if (b.is_zero())
                    continue;
                r.at(i, j) += a * b;
            }
        }
    return r;
}

bool PolyMatrix::operator==(const PolyMatrix& o) const
{
    return rows_ == o.rows_ && cols_ == o.cols_ && same_ring(ring_, o.ring_) &&
           entries_ == o.entries_;
}

PolyMatrix PolyMatrix::submatrix(const std::vector<std::size_t>& row_idx,
                                 const std::vector<std::size_t>& col_idx) const
{
    PolyMatrix s(ring_, row_idx.size(), col_idx.size());
    for (std::size_t i = 0; i < row_idx.size(); ++i)
        for (std::size_t j = 0; j < col_idx.size(); ++j)
            s.at(i, j) = at(row_idx[i], col_idx[j]);
    return s;
}

Ideal Ideal::zero(const RingPtr& ring)
{
    return Ideal{ring, {}, false};
}

Ideal Ideal::unit(const RingPtr& ring)
{
    return Ideal{ring, {Polynomial::one(ring)}, true};
}

Ideal Ideal::span(const RingPtr& ring, std::vector<Polynomial> gens)
{
    Ideal id{ring, {}, false};
    for (auto& g : gens) {
        if (g.is_zero())
            continue;
        if (!same_ring(ring, g.ring()))
            throw InputError("ideal generator from a different ring");
        id.generators.push_back(std::move(g));
    }
    return id;
}

namespace {

/* cofactor expansion over the active rows/cols, expanding along the line with
 * the most zeros */
Polynomial det_cofactor(const PolyMatrix& m, std::vector<std::size_t> rows,
                        std::vector<std::size_t> cols)
{
    const std::size_t n = rows.size();
    if (n == 1)
        return m.at(rows[0], cols[0]);

    std::size_t best_row = 0, best_row_zeros = 0;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t z = 0;
        for (std::size_t j = 0; j < n; ++j)
            if (m.at(rows[i], cols[j]).is_zero())
                ++z;
        if (z > best_row_zeros || i == 0) {
            best_row = i;
            best_row_zeros = z;
        }
    }
    std::size_t best_col = 0, best_col_zeros = 0;
    for (std::size_t j = 0; j < n; ++j) {
        std::size_t z = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (m.at(rows[i], cols[j]).is_zero())
                ++z;
        if (z > best_col_zeros || j == 0) {
            best_col = j;
            best_col_zeros = z;
        }
    }

    Polynomial acc(m.ring());
    if (best_row_zeros >= best_col_zeros) {
        std::vector<std::size_t> sub_rows = rows;
        sub_rows.erase(sub_rows.begin() + best_row);
        for (std::size_t j = 0; j < n; ++j) {
            const Polynomial& e = m.at(rows[best_row], cols[j]);
            if (e.is_zero())
                continue;
            std::vector<std::size_t> sub_cols = cols;
            sub_cols.erase(sub_cols.begin() + j);
            Polynomial minor = det_cofactor(m, sub_rows, sub_cols);
            if ((best_row + j) % 2 == 0)
                acc += e * minor;
            else
                acc -= e * minor;
        }
    } else {
        std::vector<std::size_t> sub_cols = cols;
        sub_cols.erase(sub_cols.begin() + best_col);
        for (std::size_t i = 0; i < n; ++i) {
            const Polynomial& e = m.at(rows[i], cols[best_col]);
            if (e.is_zero())
                continue;
            std::vector<std::size_t> sub_rows = rows;
            sub_rows.erase(sub_rows.begin() + i);
            Polynomial minor = det_cofactor(m, sub_rows, sub_cols);
            if ((i + best_col) % 2 == 0)
                acc += e * minor;
            else
                acc -= e * minor;
        }
    }
    return acc;
}

/* one Bareiss elimination pass; returns the number of pivots, and when
 * want_det is set and the matrix is square of full rank, the determinant */
struct BareissResult {
    std::size_t rank = 0;
    Polynomial det;
    BareissResult(const RingPtr& r) : det(Polynomial::zero(r)) {}
};

BareissResult bareiss(PolyMatrix work, bool want_det)
{
    const RingPtr& ring = work.ring();
    const std::size_t nr = work.rows(), nc = work.cols();
    BareissResult res(ring);
    Polynomial prev = Polynomial::one(ring);
    int sign = 1;
    std::size_t k = 0;
    const std::size_t steps = std::min(nr, nc);
    for (; k < steps; ++k) {
        /* pick the sparsest nonzero pivot in the remaining block */
        std::size_t pr = nr, pc = nc, best_terms = 0;
        for (std::size_t i = k; i < nr; ++i)
            for (std::size_t j = k; j < nc; ++j) {
                const Polynomial& e = work.at(i, j);
                if (e.is_zero())
                    continue;
                if (pr == nr || e.term_count() < best_terms) {
                    pr = i;
                    pc = j;
                    best_terms = e.term_count();
                }
            }
        if (pr == nr)
            break; // remaining block is zero
        if (pr != k) {
            for (std::size_t j = 0; j < nc; ++j)
                std::swap(work.at(pr, j), work.at(k, j));
            sign = -sign;
        }
        if (pc != k) {
            for (std::size_t i = 0; i < nr; ++i)
                std::swap(work.at(i, pc), work.at(i, k));
            sign = -sign;
        }
        const Polynomial pivot = work.at(k, k);
        for (std::size_t i = k + 1; i < nr; ++i) {
            for (std::size_t j = k + 1; j < nc; ++j) {
                Polynomial num = work.at(i, j) * pivot - work.at(i, k) * work.at(k, j);
                work.at(i, j) = num.is_zero() ? num : num.exact_div(prev);
            }
            work.at(i, k) = Polynomial::zero(ring);
        }
        prev = pivot;
        ++res.rank;
    }
    if (want_det) {
        if (res.rank == nr && nr == nc) {
            res.det = work.at(nr - 1, nr - 1);
            if (sign < 0)
                res.det = -res.det;
        } // else determinant is zero (already initialized)
    }
    return res;
}

void subsets_lex(std::size_t n, std::size_t t, std::vector<std::vector<std::size_t>>& out)
{
    std::vector<std::size_t> cur(t);
    std::iota(cur.begin(), cur.end(), 0);
    while (true) {
        out.push_back(cur);
        /* next t-subset of {0..n-1} in lexicographic order */
        std::size_t i = t;
        while (i-- > 0) {
            if (cur[i] + (t - i) <= n - 1) {
                ++cur[i];
                for (std::size_t j = i + 1; j < t; ++j)
                    cur[j] = cur[j - 1] + 1;
                break;
            }
            if (i == 0)
                return;
        }
    }
}

mpz_class binom_count(std::size_t n, std::size_t k)
{
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

} // namespace

Polynomial determinant(const PolyMatrix& m)
{
    if (m.rows() != m.cols())
        throw InputError("determinant of non-square matrix (" + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()) + ")");
    const std::size_t n = m.rows();
    if (n == 0)
        return Polynomial::one(m.ring());
    if (n <= 4) {
        std::vector<std::size_t> rows(n), cols(n);
        std::iota(rows.begin(), rows.end(), 0);
        std::iota(cols.begin(), cols.end(), 0);
        return det_cofactor(m, rows, cols);
    }
    return bareiss(m, true).det;
}

Ideal minors_ideal(const PolyMatrix& m, long t, std::size_t max_minor_count)
{
    if (t <= 0)
        return Ideal::unit(m.ring());
    const std::size_t tt = static_cast<std::size_t>(t);
    if (tt > std::min(m.rows(), m.cols()))
        return Ideal::zero(m.ring());

    mpz_class count = binom_count(m.rows(), tt) * binom_count(m.cols(), tt);
    if (count > static_cast<unsigned long>(max_minor_count))
        throw GuardError("minors_ideal: " + count.get_str() + " minors of order " +
                         std::to_string(t) + " exceed the guard of " +
                         std::to_string(max_minor_count));

    std::vector<std::vector<std::size_t>> row_sets, col_sets;
    subsets_lex(m.rows(), tt, row_sets);
    subsets_lex(m.cols(), tt, col_sets);

    std::vector<Polynomial> gens;
    for (const auto& rs : row_sets)
        for (const auto& cs : col_sets) {
            Polynomial d = determinant(m.submatrix(rs, cs));
            if (!d.is_zero())
                gens.push_back(std::move(d));
        }
    return Ideal::span(m.ring(), std::move(gens));
}

std::size_t rank_over_fraction_field(const PolyMatrix& m)
{
    return bareiss(m, false).rank;
}

} // namespace symres
