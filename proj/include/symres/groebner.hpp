#pragma once

#include <optional>
#include <string>
#include <vector>

#include "symres/matrix.hpp"
#include "symres/poly.hpp"

namespace symres {

struct BuchbergerOptions {
    /* budget on single reduction steps across the whole run */
    std::size_t spair_budget = 500000;
    /* optional cache directory; bases are stored one element per line */
    std::string cache_dir;
};

/* Reduced Groebner basis under the ring's degrevlex order: monic elements,
 * pairwise-irreducible leading terms, listed by descending leading monomial. */
struct GroebnerBasis {
    Ideal ideal;
    std::vector<Polynomial> basis;
    std::string order = "degrevlex";
};

GroebnerBasis buchberger(const Ideal& ideal, const BuchbergerOptions& opts = {});

/* Remainder of f on division by the (not necessarily Groebner) family gs. */
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& gs);

/* Krull dimension of R/I: the largest cardinality of a variable subset S such
 * that no leading monomial of the reduced basis is supported inside S.
 * Unit ideal gives -1, zero ideal gives the variable count. */
int krull_dimension(const Ideal& ideal, const BuchbergerOptions& opts = {});
int krull_dimension(const GroebnerBasis& gb);

struct GradeResult {
    Ideal ideal;
    int dimension; // dim R/I
    int height;    // n - dimension
    int grade;     // equals height: the ambient ring is Cohen-Macaulay
    bool is_proper;
};

/* Height/grade of a proper ideal contained in (x_1..x_n): every generator
 * must have zero constant term, otherwise InputError. Zero ideal has grade 0. */
GradeResult grade(const Ideal& ideal, const BuchbergerOptions& opts = {});

} // namespace symres
