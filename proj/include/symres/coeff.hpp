#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace symres {

/* Field element, either of Q (characteristic 0, exact rational) or of GF(p)
 * (characteristic p < 2^31, canonical residue in [0, p)). An element carries
 * its characteristic so mixed-field arithmetic is rejected. */
class Coeff {
public:
    Coeff() : ch_(0), q_(0) {}

    static Coeff zero(std::uint32_t characteristic);
    static Coeff one(std::uint32_t characteristic);
    static Coeff from_int(long v, std::uint32_t characteristic);
    static Coeff rational(mpq_class v); // characteristic 0
    static Coeff residue(std::int64_t v, std::uint32_t p);
    /* num/den in the field; throws InputError on zero or (mod p) non-invertible denominator. */
    static Coeff fraction(const mpz_class& num, const mpz_class& den, std::uint32_t characteristic);

    std::uint32_t characteristic() const { return ch_; }
    bool is_zero() const;
    bool is_one() const;
    bool is_negative() const; // always false over GF(p): residues are canonical

    Coeff operator+(const Coeff& o) const;
    Coeff operator-(const Coeff& o) const;
    Coeff operator*(const Coeff& o) const;
    Coeff operator/(const Coeff& o) const; // throws InputError on division by zero
    Coeff operator-() const;
    Coeff inverse() const;
    Coeff abs() const;

    bool operator==(const Coeff& o) const;
    bool operator!=(const Coeff& o) const { return !(*this == o); }

    /* Canonical printout: "a" or "a/b" over Q, the residue over GF(p). */
    std::string str() const;

    /* Rational value; only valid in characteristic 0. */
    const mpq_class& rational_value() const { return q_; }
    std::int64_t residue_value() const { return r_; }

private:
    void check_same_field(const Coeff& o) const;

    std::uint32_t ch_ = 0;
    mpq_class q_;          // used when ch_ == 0
    std::int64_t r_ = 0;   // used when ch_ > 0, canonical in [0, ch_)
};

} // namespace symres
