#include "symres/coeff.hpp"

#include <stdexcept>

#include "symres/errors.hpp"

namespace symres {

namespace {

std::int64_t mod_reduce(std::int64_t v, std::int64_t p)
{
    std::int64_t r = v % p;
    return r < 0 ? r + p : r;
}

/* extended Euclid inverse of a mod p, a in [1, p) */
std::int64_t mod_inverse(std::int64_t a, std::int64_t p)
{
    std::int64_t old_r = a, r = p;
    std::int64_t old_s = 1, s = 0;
    while (r != 0) {
        std::int64_t q = old_r / r;
        std::int64_t tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
    }
    if (old_r != 1)
        throw InputError("element not invertible mod " + std::to_string(p));
    return mod_reduce(old_s, p);
}

} // namespace

Coeff Coeff::zero(std::uint32_t characteristic)
{
    Coeff c;
    c.ch_ = characteristic;
    return c;
}

Coeff Coeff::one(std::uint32_t characteristic)
{
    return from_int(1, characteristic);
}

Coeff Coeff::from_int(long v, std::uint32_t characteristic)
{
    Coeff c;
    c.ch_ = characteristic;
    if (characteristic == 0)
        c.q_ = mpq_class(v);
    else
        c.r_ = mod_reduce(v, characteristic);
    return c;
}

Coeff Coeff::rational(mpq_class v)
{
    Coeff c;
    c.ch_ = 0;
    v.canonicalize();
    c.q_ = std::move(v);
    return c;
}

Coeff Coeff::residue(std::int64_t v, std::uint32_t p)
{
    Coeff c;
    c.ch_ = p;
    c.r_ = mod_reduce(v, p);
    return c;
}

Coeff Coeff::fraction(const mpz_class& num, const mpz_class& den, std::uint32_t characteristic)
{
    if (den == 0)
        throw InputError("division by zero in coefficient");
    if (characteristic == 0) {
        mpq_class q(num, den);
        q.canonicalize();
        return rational(q);
    }
    mpz_class p(static_cast<unsigned long>(characteristic));
    mpz_class dm = den % p;
    if (dm == 0)
        throw InputError("coefficient denominator " + den.get_str() +
                         " is not invertible mod " + std::to_string(characteristic));
    std::int64_t n = mod_reduce(mpz_class(num % p).get_si(), characteristic);
    std::int64_t d = mod_reduce(dm.get_si(), characteristic);
    std::int64_t inv = mod_inverse(d, characteristic);
    return residue(static_cast<std::int64_t>((static_cast<__int128>(n) * inv) % characteristic),
                   characteristic);
}

bool Coeff::is_zero() const
{
    return ch_ == 0 ? q_ == 0 : r_ == 0;
}

bool Coeff::is_one() const
{
    return ch_ == 0 ? q_ == 1 : r_ == 1;
}

bool Coeff::is_negative() const
{
    return ch_ == 0 && q_ < 0;
}

void Coeff::check_same_field(const Coeff& o) const
{
    if (ch_ != o.ch_)
        throw InputError("coefficient field mismatch: characteristic " + std::to_string(ch_) +
                         " vs " + std::to_string(o.ch_));
}

Coeff Coeff::operator+(const Coeff& o) const
{
    check_same_field(o);
    if (ch_ == 0)
        return rational(q_ + o.q_);
    return residue(r_ + o.r_, ch_);
}

Coeff Coeff::operator-(const Coeff& o) const
{
    check_same_field(o);
    if (ch_ == 0)
        return rational(q_ - o.q_);
    return residue(r_ - o.r_, ch_);
}

Coeff Coeff::operator*(const Coeff& o) const
{
    check_same_field(o);
    if (ch_ == 0)
        return rational(q_ * o.q_);
    return residue(static_cast<std::int64_t>((static_cast<__int128>(r_) * o.r_) % ch_), ch_);
}

Coeff Coeff::operator/(const Coeff& o) const
{
    return *this * o.inverse();
}

Coeff Coeff::operator-() const
{
    if (ch_ == 0)
        return rational(-q_);
    return residue(-r_, ch_);
}

Coeff Coeff::inverse() const
{
    if (is_zero())
        throw InputError("division by zero coefficient");
    if (ch_ == 0)
        return rational(1 / q_);
    return residue(mod_inverse(r_, ch_), ch_);
}

Coeff Coeff::abs() const
{
    if (ch_ == 0)
        return rational(::abs(q_));
    return *this;
}

bool Coeff::operator==(const Coeff& o) const
{
    if (ch_ != o.ch_)
        return false;
    return ch_ == 0 ? q_ == o.q_ : r_ == o.r_;
}

std::string Coeff::str() const
{
    if (ch_ == 0)
        return q_.get_str();
    return std::to_string(r_);
}

} // namespace symres
