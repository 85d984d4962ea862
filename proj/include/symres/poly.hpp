#pragma once

#include <map>
#include <string>
#include <string_view>

#include "symres/coeff.hpp"
#include "symres/ring.hpp"

namespace symres {

/* Exact sparse multivariate polynomial over the ring's coefficient field.
 * Terms are stored canonically: no zero coefficients, keys ordered by
 * degrevlex ascending. Immutable-style value semantics; all operations
 * return new values. */
class Polynomial {
public:
    using TermMap = std::map<Monomial, Coeff, DegRevLexLess>;

    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

    static Polynomial zero(const RingPtr& ring) { return Polynomial(ring); }
    static Polynomial constant(const RingPtr& ring, Coeff c);
    static Polynomial one(const RingPtr& ring);
    static Polynomial variable(const RingPtr& ring, std::size_t index, std::uint32_t power = 1);
    static Polynomial term(const RingPtr& ring, Monomial m, Coeff c);

    const RingPtr& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }
    std::size_t term_count() const { return terms_.size(); }
    std::uint64_t total_degree() const; // 0 for the zero polynomial

    /* coefficient of the all-zero monomial; zero iff the polynomial lies in (x_1..x_n) */
    Coeff constant_term() const;

    const Monomial& leading_monomial() const; // largest in degrevlex; requires nonzero
    const Coeff& leading_coeff() const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);

    Polynomial scale(const Coeff& c) const;
    Polynomial mul_term(const Monomial& m, const Coeff& c) const;
    Polynomial monic() const; // leading coefficient normalized to 1
    Polynomial pow(std::uint32_t n) const;

    /* exact quotient *this / d; throws std::logic_error when not divisible */
    Polynomial exact_div(const Polynomial& d) const;

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    /* canonical printout: terms in descending monomial order, explicit '*' and '^' */
    std::string str() const;

    void add_term(const Monomial& m, const Coeff& c); // accumulate, drop zero

private:
    void check_same_ring(const Polynomial& o) const;

    RingPtr ring_;
    TermMap terms_;
};

/* Grammar: signed sums of terms `coeff*x^e*y^f`; '*' optional before a variable
 * or number, '^' introduces a non-negative integer exponent, coefficients are
 * integers or fractions a/b. Throws InputError on malformed input. */
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);

} // namespace symres
