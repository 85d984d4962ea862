#include "symres/ring.hpp"

#include <algorithm>
#include <set>

#include "symres/errors.hpp"

namespace symres {

namespace {

bool valid_var_name(const std::string& s)
{
    if (s.empty())
        return false;
    auto alpha = [](char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z'); };
    auto alnum = [&](char c) { return alpha(c) || (c >= '0' && c <= '9') || c == '_'; };
    if (!alpha(s[0]))
        return false;
    return std::all_of(s.begin() + 1, s.end(), alnum);
}

bool is_prime(std::uint32_t p)
{
    if (p < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

} // namespace

std::shared_ptr<const RingConfig> RingConfig::create(std::vector<std::string> variables,
                                                     std::uint32_t characteristic)
{
    if (variables.empty())
        throw InputError("ring needs at least one variable");
    std::set<std::string> seen;
    for (const auto& v : variables) {
        if (!valid_var_name(v))
            throw InputError("invalid variable name '" + v + "'");
        if (!seen.insert(v).second)
            throw InputError("duplicate variable name '" + v + "'");
    }
    if (characteristic != 0 && !is_prime(characteristic))
        throw InputError("characteristic " + std::to_string(characteristic) + " is not 0 or a prime");
    return std::shared_ptr<const RingConfig>(new RingConfig(std::move(variables), characteristic));
}

std::optional<std::size_t> RingConfig::var_index(std::string_view name) const
{
    for (std::size_t i = 0; i < variables_.size(); ++i)
        if (variables_[i] == name)
            return i;
    return std::nullopt;
}

std::string RingConfig::str() const
{
    std::string s = characteristic_ == 0 ? "Q" : "GF(" + std::to_string(characteristic_) + ")";
    s += "[";
    for (std::size_t i = 0; i < variables_.size(); ++i) {
        if (i)
            s += ",";
        s += variables_[i];
    }
    s += "]";
    return s;
}

std::uint64_t Monomial::degree() const
{
    std::uint64_t d = 0;
    for (auto e : e_)
        d += e;
    return d;
}

bool Monomial::is_one() const
{
    return std::all_of(e_.begin(), e_.end(), [](std::uint32_t e) { return e == 0; });
}

Monomial Monomial::operator*(const Monomial& o) const
{
    Monomial r(*this);
    for (std::size_t i = 0; i < e_.size(); ++i)
        r.e_[i] += o.e_[i];
    return r;
}

bool Monomial::divides(const Monomial& o) const
{
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > o.e_[i])
            return false;
    return true;
}

Monomial Monomial::divide(const Monomial& o) const
{
    Monomial r(*this);
    for (std::size_t i = 0; i < e_.size(); ++i)
        r.e_[i] -= o.e_[i];
    return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b)
{
    Monomial r(a);
    for (std::size_t i = 0; i < r.e_.size(); ++i)
        r.e_[i] = std::max(a.e_[i], b.e_[i]);
    return r;
}

bool Monomial::coprime(const Monomial& o) const
{
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > 0 && o.e_[i] > 0)
            return false;
    return true;
}

int Monomial::degrevlex_cmp(const Monomial& a, const Monomial& b)
{
    std::uint64_t da = a.degree(), db = b.degree();
    if (da != db)
        return da < db ? -1 : 1;
    /* equal degree: larger is the one with the smaller exponent at the last
     * position where they differ */
    for (std::size_t i = a.e_.size(); i-- > 0;) {
        if (a.e_[i] != b.e_[i])
            return a.e_[i] < b.e_[i] ? 1 : -1;
    }
    return 0;
}

} // namespace symres
