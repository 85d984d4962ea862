#include "symres/poly.hpp"

#include <cctype>
#include <stdexcept>

#include "symres/errors.hpp"

namespace symres {

Polynomial Polynomial::constant(const RingPtr& ring, Coeff c)
{
    Polynomial p(ring);
    p.add_term(Monomial(ring->nvars()), c);
    return p;
}

Polynomial Polynomial::one(const RingPtr& ring)
{
    return constant(ring, Coeff::one(ring->characteristic()));
}

Polynomial Polynomial::variable(const RingPtr& ring, std::size_t index, std::uint32_t power)
{
    Monomial m(ring->nvars());
    m.exponent(index) = power;
    return term(ring, std::move(m), Coeff::one(ring->characteristic()));
}

Polynomial Polynomial::term(const RingPtr& ring, Monomial m, Coeff c)
{
    Polynomial p(ring);
    p.add_term(m, c);
    return p;
}

std::uint64_t Polynomial::total_degree() const
{
    std::uint64_t d = 0;
    for (const auto& [m, c] : terms_)
        d = std::max(d, m.degree());
    return d;
}

Coeff Polynomial::constant_term() const
{
    Monomial unit(ring_->nvars());
    auto it = terms_.find(unit);
    if (it == terms_.end())
        return Coeff::zero(ring_->characteristic());
    return it->second;
}

const Monomial& Polynomial::leading_monomial() const
{
    if (terms_.empty())
        throw std::logic_error("leading monomial of zero polynomial");
    return terms_.rbegin()->first;
}

const Coeff& Polynomial::leading_coeff() const
{
    if (terms_.empty())
        throw std::logic_error("leading coefficient of zero polynomial");
    return terms_.rbegin()->second;
}

void Polynomial::check_same_ring(const Polynomial& o) const
{
    if (!same_ring(ring_, o.ring_))
        throw InputError("mismatched rings: " + ring_->str() + " vs " + o.ring_->str());
}

void Polynomial::add_term(const Monomial& m, const Coeff& c)
{
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

Polynomial Polynomial::operator+(const Polynomial& o) const
{
    Polynomial r(*this);
    r += o;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o)
{
    check_same_ring(o);
    for (const auto& [m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

Polynomial Polynomial::operator-(const Polynomial& o) const
{
    Polynomial r(*this);
    r -= o;
    return r;
}

Polynomial& Polynomial::operator-=(const Polynomial& o)
{
    check_same_ring(o);
    for (const auto& [m, c] : o.terms_)
        add_term(m, -c);
    return *this;
}

Polynomial Polynomial::operator*(const Polynomial& o) const
{
    check_same_ring(o);
    Polynomial r(ring_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_)
            r.add_term(ma * mb, ca * cb);
    return r;
}

Polynomial Polynomial::operator-() const
{
    Polynomial r(ring_);
    for (const auto& [m, c] : terms_)
        r.terms_.emplace(m, -c);
    return r;
}

Polynomial Polynomial::scale(const Coeff& c) const
{
    Polynomial r(ring_);
    if (c.is_zero())
        return r;
    for (const auto& [m, cc] : terms_)
        r.terms_.emplace(m, cc * c);
    return r;
}

Polynomial Polynomial::mul_term(const Monomial& m, const Coeff& c) const
{
    Polynomial r(ring_);
    if (c.is_zero())
        return r;
    for (const auto& [mm, cc] : terms_)
        r.terms_.emplace(mm * m, cc * c);
    return r;
}

Polynomial Polynomial::monic() const
{
    if (terms_.empty())
        return *this;
    return scale(leading_coeff().inverse());
}

Polynomial Polynomial::pow(std::uint32_t n) const
{
    Polynomial r = one(ring_);
    for (std::uint32_t i = 0; i < n; ++i)
        r = r * *this;
    return r;
}

Polynomial Polynomial::exact_div(const Polynomial& d) const
{
    check_same_ring(d);
    if (d.is_zero())
        throw std::logic_error("exact_div by zero polynomial");
    Polynomial q(ring_);
    Polynomial r(*this);
    const Monomial& dm = d.leading_monomial();
    const Coeff& dc = d.leading_coeff();
    while (!r.is_zero()) {
        const Monomial& rm = r.leading_monomial();
        if (!dm.divides(rm))
            throw std::logic_error("exact_div: not divisible");
        Monomial qm = rm.divide(dm);
        Coeff qc = r.leading_coeff() / dc;
        q.add_term(qm, qc);
        r -= d.mul_term(qm, qc);
    }
    return q;
}

bool Polynomial::operator==(const Polynomial& o) const
{
    return same_ring(ring_, o.ring_) && terms_ == o.terms_;
}

std::string Polynomial::str() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Monomial& m = it->first;
        const Coeff& c = it->second;
        bool neg = c.is_negative();
        if (first)
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        first = false;
        Coeff mag = c.abs();
        std::string mon;
        for (std::size_t i = 0; i < m.nvars(); ++i) {
            if (m.exponent(i) == 0)
                continue;
            if (!mon.empty())
                mon += "*";
            mon += ring_->variables()[i];
            if (m.exponent(i) > 1)
                mon += "^" + std::to_string(m.exponent(i));
        }
        if (mon.empty())
            out += mag.str();
        else if (mag.is_one())
            out += mon;
        else
            out += mag.str() + "*" + mon;
    }
    return out;
}

namespace {

struct Lexer {
    std::string_view s;
    std::size_t pos = 0;

    void skip_ws()
    {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t'))
            ++pos;
    }

    bool eof()
    {
        skip_ws();
        return pos >= s.size();
    }

    char peek()
    {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    bool accept(char c)
    {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }

    bool peek_number() { return std::isdigit(static_cast<unsigned char>(peek())); }
    bool peek_ident()
    {
        char c = peek();
        return std::isalpha(static_cast<unsigned char>(c));
    }

    mpz_class number()
    {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            ++pos;
        if (start == pos)
            throw InputError("expected a number at position " + std::to_string(pos) + " in '" +
                             std::string(s) + "'");
        return mpz_class(std::string(s.substr(start, pos - start)));
    }

    std::string ident()
    {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        return std::string(s.substr(start, pos - start));
    }
};

} // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring)
{
    Lexer lx{text};
    Polynomial result(ring);
    const std::uint32_t ch = ring->characteristic();

    bool first = true;
    while (true) {
        if (lx.eof()) {
            if (first)
                throw InputError("empty polynomial text");
            break;
        }
        Coeff sign = Coeff::one(ch);
        if (first) {
            if (lx.accept('-'))
                sign = -sign;
            else
                lx.accept('+');
        } else {
            if (lx.accept('+'))
                ;
            else if (lx.accept('-'))
                sign = -sign;
            else
                throw InputError("expected '+' or '-' at position " + std::to_string(lx.pos) +
                                 " in '" + std::string(text) + "'");
        }
        first = false;

        /* one term: a product of numeric and variable factors */
        Coeff coeff = sign;
        Monomial mono(ring->nvars());
        bool have_factor = false;
        while (true) {
            if (lx.peek_number()) {
                mpz_class num = lx.number();
                mpz_class den(1);
                if (lx.accept('/'))
                    den = lx.number();
                coeff = coeff * Coeff::fraction(num, den, ch);
                have_factor = true;
            } else if (lx.peek_ident()) {
                std::string name = lx.ident();
                auto idx = ring->var_index(name);
                if (!idx)
                    throw InputError("unknown variable '" + name + "' in ring " + ring->str());
                std::uint32_t e = 1;
                if (lx.accept('^')) {
                    mpz_class ez = lx.number();
                    if (!ez.fits_uint_p())
                        throw InputError("exponent too large: " + ez.get_str());
                    e = static_cast<std::uint32_t>(ez.get_ui());
                }
                mono.exponent(*idx) += e;
                have_factor = true;
            } else {
                throw InputError("expected a coefficient or variable at position " +
                                 std::to_string(lx.pos) + " in '" + std::string(text) + "'");
            }
            if (lx.accept('*'))
                continue; // explicit product, another factor must follow
            if (lx.peek_number() || lx.peek_ident())
                continue; // implicit product
            break;
        }
        if (!have_factor)
            throw InputError("empty term in '" + std::string(text) + "'");
        result.add_term(mono, coeff);

        char c = lx.peek();
        if (c == '\0')
            break;
        if (c != '+' && c != '-')
            throw InputError(std::string("unexpected character '") + c + "' at position " +
                             std::to_string(lx.pos) + " in '" + std::string(text) + "'");
    }
    return result;
}

} // namespace symres
